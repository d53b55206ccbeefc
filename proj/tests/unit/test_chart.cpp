#include "support.hpp"
#include "haantjes/chart.hpp"
#include "haantjes/error.hpp"
#include <doctest.h>

using namespace haantjes;
using namespace haantjes::test;
using doctest::Approx;

namespace {

// cartesian (x, y) <- polar (r, t) <- log-polar (s, t)
Atlas plane()
{
    Atlas a;
    const std::vector<std::string> xy = {"x", "y"}, rt = {"r", "t"}, st = {"s", "t"};
    a.add(Chart{"cart", xy, false, "", {}, {}});
    a.add(Chart{"polar", rt, false, "cart", {Expr::parse("r*cos(t)", rt), Expr::parse("r*sin(t)", rt)},
        {Expr::parse("sqrt(x^2+y^2)", xy), Expr::parse("atan2(y, x)", xy)}});
    a.add(Chart{"logpolar", st, false, "polar", {Expr::parse("exp(s)", st), Expr::parse("t", st)},
        {Expr::parse("log(r)", rt), Expr::parse("t", rt)}});
    return a;
}

OperatorField sample_operator()
{
    const std::vector<std::string> xy = {"x", "y"};
    return OperatorField::from_entries("K", 2,
        {Expr::parse("1 + x*y", xy), Expr::parse("sin(y)", xy), Expr::parse("x^2", xy), Expr::parse("2 - y", xy)},
        {});
}

}  // namespace

TEST_CASE("chart: transitions round-trip along the tree")
{
    const Atlas a = plane();
    const Transition down = a.transition("cart", "logpolar"), up = a.transition("logpolar", "cart");
    const std::vector<double> x = {0.6, 0.8};
    const auto s = down.apply(x);
    CHECK(s[0] == Approx(0.0).scale(1));
    const auto back = up.apply(s);
    CHECK(back[0] == Approx(0.6));
    CHECK(back[1] == Approx(0.8));
    CHECK(a.transition("polar", "polar").is_identity());
    CHECK_THROWS_AS(a.chart("nope"), LookupError);
}

TEST_CASE("chart: jacobian matches finite differences")
{
    const Transition t = plane().transition("logpolar", "cart");
    std::vector<double> s = {0.2, 0.9};
    const Eigen::MatrixXd J = t.jacobian(s);
    const double h = 1e-6;
    for(int b = 0; b < 2; b++) {
        auto up = s, dn = s;
        up[b] += h;
        dn[b] -= h;
        const auto fu = t.apply(up), fd = t.apply(dn);
        for(int a = 0; a < 2; a++) CHECK(J(a, b) == Approx((fu[a] - fd[a]) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("chart: pullback is functorial")
{
    const Atlas a = plane();
    const OperatorField K = sample_operator();
    const OperatorField two_step = pullback(pullback(K, a.transition("polar", "cart")), a.transition("logpolar", "polar"));
    const OperatorField direct = pullback(K, a.transition("logpolar", "cart"));
    const std::vector<double> s = {-0.3, 1.1};
    const OperatorJet j1 = two_step.jet(s), j2 = direct.jet(s);
    CHECK((j1.value - j2.value).cwiseAbs().maxCoeff() < 1e-12);
    for(int k = 0; k < 2; k++) CHECK((j1.partial[k] - j2.partial[k]).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("chart: operator partials after pullback match finite differences")
{
    const OperatorField KB = pullback(sample_operator(), plane().transition("polar", "cart"));
    const std::vector<double> x = {1.3, 0.4};
    const OperatorJet j = KB.jet(x);
    const auto fd = fd_partials(KB, x);
    for(int k = 0; k < 2; k++) CHECK((j.partial[k] - fd[k]).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("chart: pulled-back operator is similar to the original")
{
    const Atlas a = plane();
    const Transition t = a.transition("polar", "cart");
    const OperatorField K = sample_operator(), KB = pullback(K, t);
    const std::vector<double> x = {1.3, 0.4};
    const Eigen::MatrixXd J = t.jacobian(x);
    CHECK((J * KB.value(x) - K.value(t.apply(x)) * J).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(KB.value(x).trace() == Approx(K.value(t.apply(x)).trace()));
}

TEST_CASE("chart: scalar pullback and identity map")
{
    const Atlas a = plane();
    const ScalarField f = ScalarField::from_expr("f", Expr::parse("x^2 + y^2", {"x", "y"}), {});
    const ScalarField g = pullback(f, a.transition("logpolar", "cart"));
    const std::vector<double> s = {0.5, 2.0};
    const Jet2 j = g.jet(s);
    CHECK(j.value() == Approx(std::exp(1.0)));
    CHECK(j.grad(0) == Approx(2 * std::exp(1.0)));
    CHECK(j.grad(1) == Approx(0).scale(1));
    CHECK(j.hess(0, 0) == Approx(4 * std::exp(1.0)));

    const Eigen::MatrixXd D = Eigen::Vector2d(2, 5).asDiagonal();
    const OperatorField K = OperatorField::constant("D", D);
    const OperatorField same = pullback(K, a.transition("cart", "cart"));
    CHECK((same.value(std::vector<double>{0.1, 0.2}) - D).norm() == 0);
}
