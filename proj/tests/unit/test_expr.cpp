#include "haantjes/error.hpp"
#include "haantjes/expr.hpp"
#include <doctest.h>
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

using namespace haantjes;
using doctest::Approx;

namespace {
const std::vector<std::string> kXY = {"x", "y", "p_x", "p_y"};
}

TEST_CASE("expr: tree shape of a kinetic term")
{
    const Expr e = Expr::parse("p_x^2/2", kXY);
    CHECK(e.to_sexpr() == "(/ (^ p_x 2) 2)");
    CHECK(e.free_variables() == std::set<std::string>{"p_x"});
}

TEST_CASE("expr: precedence and associativity")
{
    const std::vector<std::string> v = {"x"};
    const double x[] = {3};
    CHECK(Expr::parse("-x^2", v).eval(x) == -9);
    CHECK(Expr::parse("2^3^2", v).eval(x) == 512);
    CHECK(Expr::parse("x-1-1", v).eval(x) == 1);
    CHECK(Expr::parse("x/3/3", v).eval(x) == Approx(1.0 / 3));
    CHECK(Expr::parse("2*x^-1", v).eval(x) == Approx(2.0 / 3));
    CHECK(Expr::parse("pow(x, 2) + atan2(0, x)", v).eval(x) == 9);
    CHECK(Expr::parse("pi", v).eval(x) == Approx(std::numbers::pi));
}

TEST_CASE("expr: potential with a two-thirds power of y")
{
    const std::vector<std::string> params = {"k_1", "k_2", "k_3"};
    const Expr e = Expr::parse("k_1*(4*x^2+3*y^2)/cbrt(y^2) + k_2*x/cbrt(y^2) + k_3/cbrt(y^2)", kXY, params);
    const double x[] = {0.3, 1.2, 0.7, -0.4}, k[] = {0.5, 1, -0.3};
    const double y23 = std::pow(1.2, 2.0 / 3);
    CHECK(e.eval(x, k) == Approx(0.5 * (4 * 0.09 + 3 * 1.44) / y23 + 0.3 / y23 - 0.3 / y23));
    CHECK(e.eval_terms(x, k).size() == 3);
}

TEST_CASE("expr: syntax error offsets")
{
    try {
        (void)Expr::parse("x +* y", {"x", "y"});
        FAIL("no error");
    } catch(const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(Expr::parse("x + z", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(Expr::parse("sqrt(x, y)", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(Expr::parse("foo(x)", {"x"}), ParseError);
    CHECK_THROWS_AS(Expr::parse("(x", {"x"}), ParseError);
    CHECK_THROWS_AS(Expr::parse("", {"x"}), ParseError);
    CHECK_THROWS_AS(Expr::parse("1.2.3", {"x"}), ParseError);
}

TEST_CASE("expr: jet of x*y")
{
    const Expr e = Expr::parse("x*y", {"x", "y"});
    const double x[] = {2, 3};
    const Jet2 j = e.eval_jet(x);
    CHECK(j.value() == 6);
    CHECK(j.grad(0) == 3);
    CHECK(j.grad(1) == 2);
    CHECK(j.hess(0, 0) == 0);
    CHECK(j.hess(0, 1) == 1);
    CHECK(j.hess(1, 1) == 0);
}

TEST_CASE("expr: jet of cbrt(y^2)")
{
    const Expr e = Expr::parse("cbrt(y^2)", {"y"});
    const double y[] = {8};
    CHECK(e.eval_jet(y).value() == Approx(4));
    CHECK(e.eval_jet(y).grad(0) == Approx(1.0 / 3));
}

TEST_CASE("expr: domain errors name the failing node")
{
    const Expr e = Expr::parse("1 + log(x)", {"x"});
    const double x[] = {-1};
    CHECK_THROWS_AS(e.eval(x), DomainError);
    CHECK_THROWS_AS(e.eval_jet(x), DomainError);
    const double z[] = {0};
    CHECK_THROWS_AS(Expr::parse("1/x", {"x"}).eval(z), DomainError);
    CHECK_THROWS_AS(Expr::parse("x^0.5", {"x"}).eval(x), DomainError);
}

TEST_CASE("expr: printing round-trips to the same tree")
{
    for(const char* s : {"-x^2*y/(1-x)", "a*cbrt(y^2)+sin(x)^2", "x^-2^y", "2-(x-y)-(-3)", "atan2(y, x)/sqrt(a)"}) {
        const Expr e = Expr::parse(s, {"x", "y"}, {"a"});
        const Expr again = Expr::parse(e.to_string(), {"x", "y"}, {"a"});
        CHECK(e.structurally_equal(again));
        const double x[] = {0.4, 0.9}, a[] = {2};
        CHECK(e.eval(x, a) == again.eval(x, a));
    }
}

TEST_CASE("expr: macros inline earlier expressions")
{
    MacroTable m;
    m.emplace("r2", Expr::parse("x^2+y^2", {"x", "y"}));
    const Expr e = Expr::parse("1/r2", {"x", "y"}, {}, &m);
    const double x[] = {3, 4};
    CHECK(e.eval(x) == Approx(1.0 / 25));
    CHECK(e.free_variables() == std::set<std::string>{"x", "y"});
}

TEST_CASE("expr: evaluation is deterministic")
{
    const Expr e = Expr::parse("sin(x)*exp(y)/(1+x^2) - cbrt(x*y)", {"x", "y"});
    const double x[] = {0.123, -0.456};
    const double a = e.eval(x), b = e.eval(x);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
    CHECK(e.eval_jet(x).value() == a);
}
