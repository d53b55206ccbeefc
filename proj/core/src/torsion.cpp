#include "haantjes/torsion.hpp"
#include "haantjes/error.hpp"
#include <cmath>

namespace haantjes {

TorsionValue::TorsionValue(std::size_t dim) : d_(dim), c_(dim * (dim * (dim - 1) / 2), 0.0) {}

double TorsionValue::operator()(std::size_t i, std::size_t j, std::size_t k) const
{
    if(j == k) return 0;
    const std::size_t np = d_ * (d_ - 1) / 2;
    return j < k ? c_[i * np + pair(j, k)] : -c_[i * np + pair(k, j)];
}

void TorsionValue::set(std::size_t i, std::size_t j, std::size_t k, double v)
{
    const std::size_t np = d_ * (d_ - 1) / 2;
    if(j < k) c_[i * np + pair(j, k)] = v;
    else if(k < j) c_[i * np + pair(k, j)] = -v;
    else throw PreconditionError("torsion component with equal lower indices");
}

double TorsionValue::max_abs() const
{
    double m = 0;
    for(double v : c_) m = std::max(m, std::fabs(v));
    return m;
}

double TorsionValue::max_diff(const TorsionValue& other) const
{
    if(other.d_ != d_) throw PreconditionError("torsion dimension mismatch");
    double m = 0;
    for(std::size_t i = 0; i < c_.size(); i++) m = std::max(m, std::fabs(c_[i] - other.c_[i]));
    return m;
}

namespace {

/// dir[j] = sum_b W(b,j) dM[b]: the derivative of M along the j-th column of W
std::vector<Eigen::MatrixXd> directional(const Eigen::MatrixXd& W, const std::vector<Eigen::MatrixXd>& dM)
{
    const std::size_t d = dM.size();
    std::vector<Eigen::MatrixXd> out(d, Eigen::MatrixXd::Zero(d, d));
    for(std::size_t j = 0; j < d; j++)
        for(std::size_t b = 0; b < d; b++)
            if(W(b, j) != 0) out[j] += W(b, j) * dM[b];
    return out;
}

/// column k of M[j] minus column j of M[k]
Eigen::VectorXd skew(const std::vector<Eigen::MatrixXd>& M, std::size_t j, std::size_t k)
{
    return M[j].col(k) - M[k].col(j);
}

void check(const OperatorJet& L)
{
    if(L.value.rows() != L.value.cols() || L.partial.size() != static_cast<std::size_t>(L.value.rows()))
        throw PreconditionError("torsion needs a square operator with one partial per coordinate");
}

}  // namespace

TorsionValue nijenhuis_torsion(const OperatorJet& L)
{
    check(L);
    const std::size_t d = L.dim();
    const auto dirL = directional(L.value, L.partial);
    TorsionValue t(d);
    for(std::size_t j = 0; j < d; j++)
        for(std::size_t k = j + 1; k < d; k++) {
            const Eigen::VectorXd v = skew(dirL, j, k) - L.value * skew(L.partial, j, k);
            for(std::size_t i = 0; i < d; i++) t.set(i, j, k, v(i));
        }
    return t;
}

TorsionValue haantjes_torsion(const OperatorJet& L, HaantjesMethod method)
{
    check(L);
    const std::size_t d = L.dim();
    const Eigen::MatrixXd& M = L.value;
    const Eigen::MatrixXd M2 = M * M;
    TorsionValue h(d);
    if(method == HaantjesMethod::Definitional) {
        const TorsionValue t = nijenhuis_torsion(L);
        std::vector<double> T(d * d * d);
        auto at = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
        for(std::size_t i = 0; i < d; i++)
            for(std::size_t j = 0; j < d; j++)
                for(std::size_t k = 0; k < d; k++) T[at(i, j, k)] = t(i, j, k);
        // S^a_jk = T^a_jb L^b_k + T^a_bk L^b_j
        for(std::size_t j = 0; j < d; j++)
            for(std::size_t k = j + 1; k < d; k++) {
                Eigen::VectorXd tjk(d), s(d), q(d);
                for(std::size_t a = 0; a < d; a++) {
                    tjk(a) = T[at(a, j, k)];
                    double sa = 0, qa = 0;
                    for(std::size_t b = 0; b < d; b++) {
                        sa += T[at(a, j, b)] * M(b, k) + T[at(a, b, k)] * M(b, j);
                        for(std::size_t c = 0; c < d; c++) qa += T[at(a, b, c)] * M(b, j) * M(c, k);
                    }
                    s(a) = sa;
                    q(a) = qa;
                }
                const Eigen::VectorXd v = M2 * tjk + q - M * s;
                for(std::size_t i = 0; i < d; i++) h.set(i, j, k, v(i));
            }
        return h;
    }
    const Eigen::MatrixXd M3 = M2 * M;
    std::vector<Eigen::MatrixXd> dM2(d);
    for(std::size_t k = 0; k < d; k++) dM2[k] = L.partial[k] * M + M * L.partial[k];
    const auto dirL_L = directional(M, L.partial);
    const auto dirL_L2 = directional(M, dM2);
    const auto dirL2_L = directional(M2, L.partial);
    const auto dirL2_L2 = directional(M2, dM2);
    for(std::size_t j = 0; j < d; j++)
        for(std::size_t k = j + 1; k < d; k++) {
            const Eigen::VectorXd v = -2 * M3 * skew(L.partial, j, k) +
                M2 * (skew(dM2, j, k) + 4 * skew(dirL_L, j, k)) -
                2 * M * (skew(dirL_L2, j, k) + skew(dirL2_L, j, k)) + skew(dirL2_L2, j, k);
            for(std::size_t i = 0; i < d; i++) h.set(i, j, k, v(i));
        }
    return h;
}

double normalized_nijenhuis(const OperatorJet& L)
{
    return nijenhuis_torsion(L).max_abs() / std::pow(1 + L.norm(), 3);
}

double normalized_haantjes(const OperatorJet& L, HaantjesMethod method)
{
    return haantjes_torsion(L, method).max_abs() / std::pow(1 + L.norm(), 4);
}

double torsion_scaling_residual(const OperatorField& L, const ScalarField& f, const ScalarField& g,
    std::span<const double> x)
{
    const double gv = g.value(x);
    if(gv == 0) throw PreconditionError("scaling check needs g != 0");
    const TorsionValue lhs = haantjes_torsion(affine(f, g, L).jet(x));
    const TorsionValue hl = haantjes_torsion(L.jet(x));
    const double g4 = gv * gv * gv * gv;
    double m = 0;
    for(std::size_t i = 0; i < hl.data().size(); i++)
        m = std::max(m, std::fabs(lhs.data()[i] - g4 * hl.data()[i]));
    return m;
}

}  // namespace haantjes
