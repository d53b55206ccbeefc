#include "haantjes/lift.hpp"
#include "haantjes/error.hpp"
#include <cmath>

namespace haantjes {

namespace {

struct LiftJets {
    Jet2 a, b, c, d, f, g;
    LiftCoefficients k;
};

void check_config(const Jet2& j, const char* which)
{
    if(j.dim() != 4) throw PreconditionError("lift needs fields on a 4-dimensional phase space");
    const double scale = std::max({1.0, std::fabs(j.grad(0)), std::fabs(j.grad(1))});
    if(std::fabs(j.grad(2)) > 1e-12 * scale || std::fabs(j.grad(3)) > 1e-12 * scale)
        throw PreconditionError(std::string("lift: entry ") + which + " depends on the momenta");
}

LiftJets lift_jets(const ConfigOperator2& A, std::span<const double> x, const LiftOptions& opt)
{
    LiftJets L;
    L.a = A.a.jet(x);
    L.b = A.b.jet(x);
    L.c = A.c.jet(x);
    L.d = A.d.jet(x);
    check_config(L.a, "a");
    check_config(L.b, "b");
    check_config(L.c, "c");
    check_config(L.d, "d");
    // first-order jets of the derivatives (Hessians of these are not used)
    const Jet2 a1 = L.a.derivative(0), a2 = L.a.derivative(1), b1 = L.b.derivative(0), b2 = L.b.derivative(1);
    const Jet2 c1 = L.c.derivative(0), c2 = L.c.derivative(1), d1 = L.d.derivative(0), d2 = L.d.derivative(1);
    // tau^i_12 = sum_s (d_s L^i_2 L^s_1 - d_s L^i_1 L^s_2 + (d_2 L^s_1 - d_1 L^s_2) L^i_s), L = [[a,b],[c,d]]
    const Jet2 w1 = a2 - b1, w2 = c2 - d1;   // d_2 L^s_1 - d_1 L^s_2 for s = 1, 2
    const Jet2 tau1 = b1 * L.a + b2 * L.c - (a1 * L.b + a2 * L.d) + w1 * L.a + w2 * L.b;
    const Jet2 tau2 = d1 * L.a + d2 * L.c - (c1 * L.b + c2 * L.d) + w1 * L.c + w2 * L.d;
    const Jet2 amd = L.a - L.d;
    const Jet2 delta = amd * amd + 4.0 * L.b * L.c;
    const double scale = std::max({1.0, std::fabs(L.a.value()), std::fabs(L.b.value()), std::fabs(L.c.value()),
        std::fabs(L.d.value())});
    if(std::fabs(delta.value()) <= opt.delta_tol * scale * scale)
        throw PreconditionError("lift: degenerate spectrum of A (Delta = " + std::to_string(delta.value()) + ")");
    if(delta.value() < 0 && !opt.allow_complex_delta)
        throw PreconditionError("lift: complex eigenvalues of A (Delta < 0)");
    L.f = w1 - (amd / delta) * tau1 - (2.0 * L.b / delta) * tau2;
    L.g = w2 + (amd / delta) * tau2 - (2.0 * L.c / delta) * tau1;
    L.k = {delta.value(), tau1.value(), tau2.value(), L.f.value(), L.g.value()};
    return L;
}

}  // namespace

LiftCoefficients lift_coefficients(const ConfigOperator2& A, std::span<const double> x, const LiftOptions& opt)
{
    return lift_jets(A, x, opt).k;
}

OperatorField generalized_lift(const ConfigOperator2& A, const ScalarField& h, const LiftOptions& opt)
{
    return OperatorField("lift", 4, [A, h, opt](std::span<const double> x) {
        const LiftJets L = lift_jets(A, x, opt);
        const Jet2 hj = h.jet(x);
        check_config(hj, "h");
        const Jet2 r = L.f * Jet2::variable(x[2], 2, 4) + L.g * Jet2::variable(x[3], 3, 4) + hj;
        OperatorJet j;
        j.value = Eigen::MatrixXd::Zero(4, 4);
        j.partial.assign(4, Eigen::MatrixXd::Zero(4, 4));
        auto put = [&](int row, int col, const Jet2& v, double sign) {
            j.value(row, col) = sign * v.value();
            for(std::size_t k = 0; k < 4; k++) j.partial[k](row, col) = sign * v.grad(k);
        };
        put(0, 0, L.a, 1);
        put(0, 1, L.b, 1);
        put(1, 0, L.c, 1);
        put(1, 1, L.d, 1);
        put(2, 2, L.a, 1);
        put(2, 3, L.c, 1);
        put(3, 2, L.b, 1);
        put(3, 3, L.d, 1);
        put(2, 1, r, 1);
        put(3, 0, r, -1);
        return j;
    });
}

namespace {

OperatorField config_operator_field(const ConfigOperator2& A)
{
    return OperatorField("A", 2, [A](std::span<const double> q) {
        const double x[4] = {q[0], q[1], 0, 0};
        const ScalarField* e[4] = {&A.a, &A.b, &A.c, &A.d};
        OperatorJet j;
        j.value = Eigen::MatrixXd::Zero(2, 2);
        j.partial.assign(2, Eigen::MatrixXd::Zero(2, 2));
        for(int t = 0; t < 4; t++) {
            const Jet2 v = e[t]->jet(x);
            j.value(t / 2, t % 2) = v.value();
            j.partial[0](t / 2, t % 2) = v.grad(0);
            j.partial[1](t / 2, t % 2) = v.grad(1);
        }
        return j;
    });
}

}  // namespace

Check yano_coincidence_check(const ConfigOperator2& A, const Points& points, double tol)
{
    const OperatorField a2 = config_operator_field(A);
    Points q;
    for(const auto& x : points) q.push_back({x[0], x[1]});
    const Check pre = verify_nijenhuis(a2, q, tol);
    if(pre.error || !pre.pass)
        throw PreconditionError("Yano check: A has nonvanishing Nijenhuis torsion (normalized " +
            std::to_string(pre.residual) + ")");
    const OperatorField lift = generalized_lift(A, ScalarField::constant(0, 4));
    Check c = verify_nijenhuis(lift, points, tol);
    c.claim = "yano";
    c.kind = "yano";
    return c;
}

}  // namespace haantjes
