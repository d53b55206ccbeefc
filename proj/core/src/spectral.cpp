#include "haantjes/spectral.hpp"
#include "haantjes/error.hpp"
#include <algorithm>
#include <cmath>
#include <numeric>

namespace haantjes {

std::size_t numerical_rank(const Eigen::MatrixXcd& M, double tol)
{
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& s = svd.singularValues();
    std::size_t r = 0;
    for(Eigen::Index i = 0; i < s.size(); i++)
        if(s(i) > tol) r++;
    return r;
}

SpectralPoint spectral_point(const Eigen::MatrixXd& K, const SpectralOptions& opt)
{
    const std::size_t n = static_cast<std::size_t>(K.rows());
    if(K.rows() != K.cols() || n == 0) throw PreconditionError("spectral analysis needs a square matrix");
    if(!K.allFinite()) throw DomainError("nonfinite operator entries");
    SpectralPoint sp;
    sp.scale = std::max(1.0, K.cwiseAbs().maxCoeff());
    const Eigen::EigenSolver<Eigen::MatrixXd> es(K, false);
    if(es.info() != Eigen::Success) throw DomainError("eigenvalue iteration did not converge");
    std::vector<std::complex<double>> ev(n);
    for(std::size_t i = 0; i < n; i++) ev[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));

    // single-linkage clustering
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    const double gap = opt.cluster_gap * sp.scale;
    for(bool changed = true; changed;) {
        changed = false;
        for(std::size_t i = 0; i < n; i++)
            for(std::size_t j = 0; j < n; j++)
                if(label[i] != label[j] && std::abs(ev[i] - ev[j]) < gap) {
                    const std::size_t lo = std::min(label[i], label[j]);
                    label[i] = label[j] = lo;
                    changed = true;
                }
    }
    std::vector<std::size_t> roots(label);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for(std::size_t r : roots) {
        EigenCluster c;
        std::complex<double> sum = 0;
        for(std::size_t i = 0; i < n; i++)
            if(label[i] == r) {
                sum += ev[i];
                c.algebraic++;
            }
        c.value = sum / static_cast<double>(c.algebraic);
        if(std::fabs(c.value.imag()) <= gap) c.value.imag(0);
        else sp.complex_pair = true;
        sp.clusters.push_back(c);
    }
    std::sort(sp.clusters.begin(), sp.clusters.end(), [](const EigenCluster& a, const EigenCluster& b) {
        return a.value.real() != b.value.real() ? a.value.real() < b.value.real() : a.value.imag() < b.value.imag();
    });

    const Eigen::MatrixXcd Kc = K.cast<std::complex<double>>();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(K.rows(), K.cols());
    for(EigenCluster& c : sp.clusters) {
        const Eigen::MatrixXcd N = Kc - c.value * I;
        Eigen::MatrixXcd P = N;
        std::vector<std::size_t> rank{n};
        for(unsigned rho = 1; rho <= opt.max_riesz + 1; rho++) {
            rank.push_back(numerical_rank(P, opt.rank_tol * std::pow(sp.scale, rho)));
            P = P * N;
        }
        c.geometric = static_cast<unsigned>(n - rank[1]);
        c.riesz = opt.max_riesz;
        for(unsigned rho = 1; rho <= opt.max_riesz; rho++)
            if(rank[rho] == rank[rho + 1]) {
                c.riesz = rho;
                break;
            }
        if(c.riesz != 1) sp.semisimple = false;
    }
    return sp;
}

unsigned minimal_poly_degree(const Eigen::MatrixXd& K, double rank_tol)
{
    const Eigen::Index n = K.rows();
    Eigen::MatrixXd cols(n * n, n + 1);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
    for(Eigen::Index j = 0; j <= n; j++) {
        Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(P.data(), n * n);
        const double nv = v.norm();
        cols.col(j) = nv > 0 ? Eigen::VectorXd(v / nv) : v;
        P = P * K;
    }
    for(Eigen::Index d = 1; d <= n; d++) {
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols.leftCols(d + 1));
        const auto& s = svd.singularValues();
        if(s(s.size() - 1) <= rank_tol * std::max(1.0, s(0))) return static_cast<unsigned>(d);
    }
    return static_cast<unsigned>(n);
}

}  // namespace haantjes
