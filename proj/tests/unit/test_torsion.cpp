#include "support.hpp"
#include "haantjes/chart.hpp"
#include <doctest.h>

using namespace haantjes;
using namespace haantjes::test;
using doctest::Approx;

TEST_CASE("torsion: identity has zero torsions")
{
    const OperatorField I = OperatorField::identity(4);
    const std::vector<double> x = {0.1, 0.2, 0.3, 0.4};
    CHECK(nijenhuis_torsion(I.jet(x)).max_abs() == 0);
    CHECK(haantjes_torsion(I.jet(x)).max_abs() == 0);
}

TEST_CASE("torsion: diag(v, u) on the chart (u, v)")
{
    // T^1_12 = (l1 - l2) d_2 l1 with l1 = v, l2 = u
    const auto L = OperatorField::from_entries("L", 2,
        {Expr::parse("v", {"u", "v"}), Expr{}, Expr{}, Expr::parse("u", {"u", "v"})}, {});
    const std::vector<double> x = {1, 3};
    const TorsionValue T = nijenhuis_torsion(L.jet(x));
    CHECK(T(0, 0, 1) == Approx(2));
    CHECK(T(0, 1, 0) == Approx(-2));
    CHECK(max_diff(T, fd_nijenhuis(L, x)) < 1e-8);
}

TEST_CASE("torsion: coordinate formulas match the bracket oracle")
{
    std::mt19937_64 rng(11);
    for(int trial = 0; trial < 10; trial++) {
        const OperatorField L = random_operator(4, rng);
        const auto x = random_point(4, rng);
        const OperatorJet j = L.jet(x);
        CHECK(max_diff(nijenhuis_torsion(j), fd_nijenhuis(L, x)) < 1e-5);
        CHECK(max_diff(haantjes_torsion(j), fd_haantjes(L, x)) < 1e-5);
        CHECK(max_diff(haantjes_torsion(j, HaantjesMethod::Coordinate), fd_haantjes(L, x)) < 1e-5);
    }
}

TEST_CASE("torsion: definitional and coordinate Haantjes forms agree")
{
    std::mt19937_64 rng(12);
    for(std::size_t dim : {3u, 4u, 6u}) {
        const OperatorField L = random_operator(dim, rng);
        const OperatorJet j = L.jet(random_point(dim, rng));
        const TorsionValue a = haantjes_torsion(j, HaantjesMethod::Definitional);
        const TorsionValue b = haantjes_torsion(j, HaantjesMethod::Coordinate);
        CHECK(a.max_diff(b) <= 1e-10 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("torsion: every 2x2 operator field is Haantjes")
{
    std::mt19937_64 rng(13);
    for(int trial = 0; trial < 50; trial++) {
        const OperatorField L = random_operator(2, rng);
        const OperatorJet j = L.jet(random_point(2, rng));
        CHECK(normalized_haantjes(j) < 1e-12);
        CHECK(normalized_nijenhuis(j) > 1e-6);   // generic fields are not Nijenhuis
    }
}

TEST_CASE("torsion: diagonal operators are Haantjes in any dimension")
{
    std::mt19937_64 rng(14);
    for(std::size_t dim : {3u, 5u}) {
        const auto vars = coords(dim);
        std::vector<Expr> e(dim * dim);
        for(std::size_t i = 0; i < dim; i++) e[i * dim + i] = random_polynomial(vars, rng);
        const auto L = OperatorField::from_entries("D", dim, e, {});
        const OperatorJet j = L.jet(random_point(dim, rng));
        CHECK(normalized_haantjes(j) < 1e-13);
        CHECK(normalized_nijenhuis(j) > 1e-6);
    }
}

TEST_CASE("torsion: generic 4x4 fields are not Haantjes")
{
    std::mt19937_64 rng(15);
    const OperatorField L = random_operator(4, rng);
    CHECK(normalized_haantjes(L.jet(random_point(4, rng))) > 1e-4);
}

TEST_CASE("torsion: fI + gL has Haantjes torsion g^4 H_L")
{
    std::mt19937_64 rng(16);
    for(int trial = 0; trial < 5; trial++) {
        const OperatorField L = random_operator(4, rng);
        const ScalarField f = random_scalar(4, rng, "f"), g = random_scalar(4, rng, "g");
        const auto x = random_point(4, rng);
        const double g4 = std::pow(g.value(x), 4);
        const double h = haantjes_torsion(L.jet(x)).max_abs();
        CHECK(torsion_scaling_residual(L, f, g, x) <= 1e-8 * std::max(1.0, h * g4));
        // independent construction of fI + gL and a direct comparison
        const OperatorField M = affine(f, g, L);
        const TorsionValue HM = haantjes_torsion(M.jet(x)), HL = haantjes_torsion(L.jet(x));
        double m = 0;
        for(std::size_t i = 0; i < 4; i++)
            for(std::size_t j = 0; j < 4; j++)
                for(std::size_t k = 0; k < 4; k++) m = std::max(m, std::fabs(HM(i, j, k) - g4 * HL(i, j, k)));
        CHECK(m <= 1e-8 * std::max(1.0, h * g4));
    }
    const OperatorField L = random_operator(4, rng);
    const auto x = random_point(4, rng);
    CHECK(torsion_scaling_residual(L, ScalarField::constant(0, 4), ScalarField::constant(1, 4), x) == 0);
}

TEST_CASE("torsion: components transform as a tensor under a change of chart")
{
    // chart B (a, b, c, d) -> A (x0..x3): a nonlinear invertible map
    std::mt19937_64 rng(17);
    const OperatorField L = random_operator(4, rng);
    Atlas atlas;
    atlas.add(Chart{"A", coords(4), false, "", {}, {}});
    const std::vector<std::string> bv = {"a", "b", "c", "d"};
    Chart B{"B", bv, false, "A", {}, {}};
    for(const char* s : {"a + 0.2*b^2", "b + 0.1*sin(c)", "c*exp(0.3*d)", "d - 0.25*a"})
        B.to_parent.push_back(Expr::parse(s, bv));
    // pullbacks only use to_parent; from_parent is a placeholder
    for(const char* s : {"x0", "x1", "x2", "x3"}) B.from_parent.push_back(Expr::parse(s, coords(4)));
    atlas.add(B);
    const Transition t = atlas.transition("B", "A");
    const OperatorField LB = pullback(L, t);
    const std::vector<double> xb = {0.3, -0.4, 0.6, 0.2};
    const auto xa = t.apply(xb);
    const Eigen::MatrixXd J = t.jacobian(xb);
    for(auto method : {HaantjesMethod::Definitional, HaantjesMethod::Coordinate}) {
        const TorsionValue direct = haantjes_torsion(LB.jet(xb), method);
        const TorsionValue moved = pullback(haantjes_torsion(L.jet(xa), method), J);
        CHECK(direct.max_diff(moved) <= 1e-9 * std::max(1.0, direct.max_abs()));
    }
    const TorsionValue nd = nijenhuis_torsion(LB.jet(xb));
    CHECK(nd.max_diff(pullback(nijenhuis_torsion(L.jet(xa)), J)) <= 1e-9 * std::max(1.0, nd.max_abs()));
}

TEST_CASE("torsion: storage is antisymmetric in the lower pair")
{
    TorsionValue t(3);
    t.set(1, 2, 0, 4.5);
    CHECK(t(1, 0, 2) == -4.5);
    CHECK(t(1, 2, 0) == 4.5);
    CHECK(t(1, 1, 1) == 0);
    CHECK(t.max_abs() == 4.5);
}
