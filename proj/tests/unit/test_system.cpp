#include "haantjes/catalog.hpp"
#include "haantjes/error.hpp"
#include "haantjes/system.hpp"
#include <doctest.h>
#include <algorithm>

using namespace haantjes;
using doctest::Approx;

namespace {
const char* kSmall = R"(
[meta]
name = small
dim = 2
params = k=2

[constants]
k2 = k^2

[chart.plane]
vars = q, p

[let.plane]
w = k*q

[hamiltonian]
H = p^2/2 + w^2/2

[functions]
G = k2*H
    + 1

[operator.K]
e_1_1 = 1 + q^2
e_2_2 = 1 + q^2

[operator.M]
combination = 2*I + 3*K

[domain]
q = -1, 1
p = -1, 1
guard = q 0.1

[manifest]
claim = haantjes K
)";
}  // namespace

TEST_CASE("system: parse and bind a small definition")
{
    const SystemDefinition def = parse_system(kSmall);
    CHECK(def.name == "small");
    CHECK(def.dim == 2);
    CHECK(def.claims.size() == 1);
    const System sys = System::bind(def);
    CHECK(sys.param("k2") == 4);
    const std::vector<double> x = {0.5, 2};
    CHECK(sys.field("H").value(x) == Approx(2 + 0.5));
    CHECK(sys.field("G").value(x) == Approx(4 * 2.5 + 1));
    CHECK(sys.op("M").value(x)(0, 0) == Approx(2 + 3 * 1.25));
    const auto pts = sys.sample("plane", 1, 50);
    CHECK(pts.size() == 50);
    CHECK(std::all_of(pts.begin(), pts.end(), [](const auto& p) { return std::fabs(p[0]) >= 0.1; }));
    const System other = System::bind(def, {{"k", 1}});
    CHECK(other.param("k2") == 1);
    CHECK_THROWS_AS(System::bind(def, {{"nope", 1}}), LookupError);
    CHECK_THROWS_AS(sys.field("nope"), LookupError);
    CHECK_THROWS_AS(sys.op("nope"), LookupError);
}

TEST_CASE("system: parse errors carry positions")
{
    std::string bad = kSmall;
    bad.replace(bad.find("p^2/2"), 5, "p^^2");
    CHECK_THROWS_AS(System::bind(parse_system(bad)), ParseError);
    CHECK_THROWS_AS(parse_system("[meta]\nname = x\n[bogus]\na = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_system("no section\n"), ParseError);
    CHECK_THROWS_AS(load_system_file("/nonexistent/file.def"), LookupError);
    std::string undefined = kSmall;
    undefined.replace(undefined.find("w^2/2"), 5, "z^2/2");
    CHECK_THROWS_AS(System::bind(parse_system(undefined)), ParseError);
}

TEST_CASE("catalog: registry")
{
    const auto names = catalog_names();
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(get_system("nope"), LookupError);
    CHECK_THROWS_AS(get_system("sw1", "u^3"), PreconditionError);
    CHECK_THROWS_AS(get_system("gen-kepler", "u + x"), PreconditionError);
    CHECK(catalog_operators().size() == 18);
    for(const auto& n : names) {
        const System sys = System::bind(get_system(n));
        CHECK(sys.name() == n);
        CHECK_FALSE(sys.definition().claims.empty());
    }
}

TEST_CASE("catalog: Drach-Holt constants and operator")
{
    const System sys = System::bind(get_system("drach-holt"));
    CHECK(sys.definition().dim == 4);
    CHECK(sys.param("b6") == Approx(-1.0 / 216));
    CHECK(sys.param("b2") == Approx(0.5 / 18));
    CHECK(System::bind(get_system("drach-holt"), {{"k1", 18}}).param("b2") == Approx(1));
    CHECK(sys.operator_names() == std::vector<std::string>{"KDH"});
}

TEST_CASE("catalog: SW I operators")
{
    const System sys = System::bind(get_system("sw1"));
    const std::vector<double> x = {0.5, 0.7, 0.3, -0.2};
    const Eigen::MatrixXd K2 = sys.op("K2").value(x);
    CHECK(K2.isApprox(Eigen::Vector4d(0, 1, 0, 1).asDiagonal().toDenseMatrix()));
    CHECK(sys.op("K3").value(x)(0, 0) == Approx(4 * (0.49 + 1)));
}
