#include "support.hpp"
#include "haantjes/symplectic.hpp"
#include <doctest.h>

using namespace haantjes;
using namespace haantjes::test;

namespace {

/// gradient of {G,H} from the Hessians of G and H (chart (q1..qn, p1..pn))
Eigen::VectorXd bracket_gradient(const Jet2& G, const Jet2& H)
{
    const std::size_t d = G.dim(), n = d / 2;
    Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    for(std::size_t k = 0; k < d; k++)
        for(std::size_t i = 0; i < n; i++)
            g(k) += G.hess(i, k) * H.grad(n + i) + G.grad(i) * H.hess(n + i, k) - G.hess(n + i, k) * H.grad(i) -
                G.grad(n + i) * H.hess(i, k);
    return g;
}

/// {F, {G,H}}
double nested(const Jet2& F, const Jet2& G, const Jet2& H)
{
    const std::size_t n = F.dim() / 2;
    const Eigen::VectorXd b = bracket_gradient(G, H);
    double s = 0;
    for(std::size_t i = 0; i < n; i++) s += F.grad(i) * b(n + i) - F.grad(n + i) * b(i);
    return s;
}

}  // namespace

TEST_CASE("symplectic: bracket is antisymmetric and satisfies the Jacobi identity")
{
    std::mt19937_64 rng(21);
    for(int trial = 0; trial < 20; trial++) {
        const auto x = random_point(4, rng);
        const Jet2 F = random_scalar(4, rng).jet(x), G = random_scalar(4, rng).jet(x), H = random_scalar(4, rng).jet(x);
        CHECK(poisson_bracket(F, G) == -poisson_bracket(G, F));
        const double a = nested(F, G, H), b = nested(G, H, F), c = nested(H, F, G);
        CHECK(std::fabs(a + b + c) <= 1e-8 * std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c)}));
    }
}

TEST_CASE("symplectic: bracket terms split by index")
{
    const double x[] = {0.5, -0.2, 1.5, 0.3};
    const std::vector<std::string> v = {"q1", "q2", "p1", "p2"};
    const Jet2 F = Expr::parse("q1*p1 + q2", v).eval_jet(x), G = Expr::parse("p1^2 + q1*p2", v).eval_jet(x);
    const auto t = poisson_terms(F, G);
    REQUIRE(t.size() == 2);
    // {F,G}_1 = F_q1 G_p1 - F_p1 G_q1 = 1.5*3 - 0.5*0.3; {F,G}_2 = F_q2 G_p2 - F_p2 G_q2 = 1*0.5 - 0
    CHECK(t[0].value() == doctest::Approx(4.35));
    CHECK(t[1].value() == doctest::Approx(0.5));
    CHECK(poisson_bracket(F, G) == doctest::Approx(4.85));
}
