#include "haantjes/catalog.hpp"
#include "haantjes/chains.hpp"
#include "haantjes/system.hpp"
#include <doctest.h>

using namespace haantjes;
using doctest::Approx;

namespace {
const std::vector<std::string> kV = {"x", "y", "p_x", "p_y"};
ScalarField field(const std::string& s)
{
    return ScalarField::from_expr(s, Expr::parse(s, kV), {});
}
Points box(std::size_t n, std::uint64_t seed)
{
    SamplingDomain d;
    d.box.assign(4, Interval{0.3, 1.5});
    d.seed = seed;
    d.samples = n;
    return d.draw();
}
}  // namespace

TEST_CASE("chains: identity operator and the same function")
{
    const ScalarField H = field("(p_x^2 + p_y^2)/2 + x^2*y");
    const Check c = verify_chain(OperatorField::identity(4), H, H, box(30, 1));
    CHECK(c.pass);
    CHECK(c.residual < 1e-14);
    CHECK(c.get("c") == Approx(1));
}

TEST_CASE("chains: separated cartesian Hamiltonian")
{
    // H = H_x + H_y; the chain operator for H_y is diag(0, 1, 0, 1)
    const ScalarField H = field("(p_x^2 + p_y^2)/2 + x^2/2 + 0.7/x^2 + y^2/2 + 0.7/y^2");
    const ScalarField Hy = field("p_y^2/2 + y^2/2 + 0.7/y^2");
    const auto ops = build_chain_operators(H, {Hy, H});
    const std::vector<double> x = {0.5, 0.8, 0.3, -0.6};
    const Eigen::MatrixXd K = ops[0].value(x);
    CHECK(K.diagonal().isApprox(Eigen::Vector4d(0, 1, 0, 1)));
    CHECK((ops[1].value(x) - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-15);
    const Points pts = box(40, 2);
    CHECK(verify_chain(ops[0], H, Hy, pts).pass);
    CHECK(benenti_test(H, Hy, pts).pass);
    CHECK(involution_test(H, Hy, pts).pass);
}

TEST_CASE("chains: a fake separated pair and a non-commuting pair")
{
    const Points pts = box(20, 3);
    const Check b = benenti_test(field("x"), field("p_x"), pts);
    CHECK_FALSE(b.pass);
    CHECK(b.get("index_1") == Approx(1));
    const Check inv = involution_test(field("x"), field("p_x"), pts);
    CHECK_FALSE(inv.pass);
    CHECK(inv.residual == Approx(1));
}

TEST_CASE("chains: wrong scalar and non-constant scalar")
{
    const ScalarField H = field("(p_x^2 + p_y^2)/2 + x*y");
    ChainOptions o;
    o.expect_c = 1.0;
    const Check twice = verify_chain(OperatorField::identity(4), H, field("2*((p_x^2 + p_y^2)/2 + x*y)"), box(20, 4), o);
    CHECK_FALSE(twice.pass);
    CHECK(twice.get("c") == Approx(0.5));
    const Check bad = verify_chain(OperatorField::identity(4), H, field("p_x^2"), box(20, 4));
    CHECK_FALSE(bad.pass);
}

TEST_CASE("chains: fitting a scalar chain over a constant basis")
{
    const ScalarField H = field("(p_x^2 + p_y^2)/2 + x^2*y + y^3");
    const ScalarField H2 = field("2*((p_x^2 + p_y^2)/2 + x^2*y + y^3)");
    const ChainFit fit = fit_chain_operator(H, H2, {ScalarField::constant(1, 4)}, box(40, 5));
    CHECK(fit.chain.pass);
    const std::vector<double> x = {0.4, 0.9, -0.3, 0.2};
    CHECK((fit.K.value(x) - 2 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("chains: Drach-Holt fit needs momentum terms")
{
    const System sys = System::bind(get_system("drach-holt"));
    const Points pts = sys.sample("cartesian", 42, 100);
    std::vector<ScalarField> basis;
    for(const char* s : {"1", "x", "y", "Y"})
        basis.push_back(ScalarField::from_expr(s, sys.parse_in("cartesian", s), sys.param_values()));
    const ChainFit no_p = fit_chain_operator(sys.field("H1"), sys.field("H2"), basis, pts);
    CHECK_FALSE(no_p.chain.pass);
    CHECK(no_p.chain.residual > 1e-3);
    for(const char* s : {"p_x", "p_y"})
        basis.push_back(ScalarField::from_expr(s, sys.parse_in("cartesian", s), sys.param_values()));
    const ChainFit with_p = fit_chain_operator(sys.field("H1"), sys.field("H2"), basis, pts);
    CHECK(with_p.chain.pass);
    CHECK(with_p.chain.residual < 1e-8);
}
