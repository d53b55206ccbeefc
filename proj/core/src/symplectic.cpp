#include "haantjes/symplectic.hpp"
#include "haantjes/error.hpp"

namespace haantjes {

Eigen::MatrixXd canonical_omega(std::size_t dim)
{
    if(dim % 2) throw PreconditionError("symplectic structure needs an even dimension");
    const std::size_t n = dim / 2;
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(dim, dim);
    W.block(0, n, n, n).setIdentity();
    W.block(n, 0, n, n) = -Eigen::MatrixXd::Identity(n, n);
    return W;
}

double omega_residual(const Eigen::MatrixXd& K)
{
    const Eigen::MatrixXd W = canonical_omega(static_cast<std::size_t>(K.rows()));
    return (W * K - K.transpose() * W).cwiseAbs().maxCoeff();
}

std::vector<BracketTerm> poisson_terms(const Jet2& F, const Jet2& G)
{
    if(F.dim() != G.dim() || F.dim() % 2) throw PreconditionError("Poisson bracket needs jets on one Darboux chart");
    const std::size_t n = F.dim() / 2;
    std::vector<BracketTerm> t(n);
    for(std::size_t k = 0; k < n; k++) {
        t[k].a = F.grad(k) * G.grad(n + k);
        t[k].b = F.grad(n + k) * G.grad(k);
    }
    return t;
}

double poisson_bracket(const Jet2& F, const Jet2& G)
{
    double s = 0;
    for(const BracketTerm& t : poisson_terms(F, G)) s += t.value();
    return s;
}

}  // namespace haantjes
