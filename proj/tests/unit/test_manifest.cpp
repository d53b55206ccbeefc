#include "haantjes/catalog.hpp"
#include "haantjes/manifest.hpp"
#include <doctest.h>

using namespace haantjes;

TEST_CASE("manifest: claim lines")
{
    const Claim c = parse_claim("info expect-fail chain KDH H1 H2 tol=1e-9 k1=2");
    CHECK(c.informational);
    CHECK(c.expect_fail);
    CHECK(c.kind == "chain");
    CHECK(c.args == std::vector<std::string>{"KDH", "H1", "H2"});
    CHECK(c.options.at("tol") == "1e-9");
    CHECK(c.options.at("k1") == "2");
    const Claim q = parse_claim("cyclic K5 \"K3 + 2*I\" 2 - 1");
    CHECK(q.args == std::vector<std::string>{"K5", "K3 + 2*I", "2", "-", "1"});
}

TEST_CASE("manifest: errors are captured, not thrown")
{
    const SystemDefinition def = get_system("drach-holt");
    ManifestOptions o;
    o.samples = 20;
    const Check unknown = run_claim(def, parse_claim("haantjes NOPE"), o);
    CHECK(unknown.error);
    CHECK_FALSE(unknown.satisfied());
    const Check bad_key = run_claim(def, parse_claim("haantjes KDH frobs=3"), o);
    CHECK(bad_key.error);
    const Check bad_kind = run_claim(def, parse_claim("frobnicate KDH"), o);
    CHECK(bad_kind.error);
}

TEST_CASE("manifest: expected failures and informational claims")
{
    const SystemDefinition def = get_system("drach-holt");
    ManifestOptions o;
    o.samples = 30;
    Check c = run_claim(def, parse_claim("expect-fail nijenhuis KDH"), o);
    CHECK_FALSE(c.pass);
    CHECK(c.satisfied());
    c = run_claim(def, parse_claim("expect-fail haantjes KDH"), o);
    CHECK(c.pass);
    CHECK_FALSE(c.satisfied());
    c = run_claim(def, parse_claim("info nijenhuis KDH"), o);
    CHECK(c.satisfied());
}

TEST_CASE("manifest: filter and determinism")
{
    ManifestOptions o;
    o.samples = 30;
    o.filter = "chain";
    const SystemDefinition def = get_system("drach-holt");
    const VerificationReport a = run_manifest(def, o), b = run_manifest(def, o);
    REQUIRE(!a.claims.empty());
    REQUIRE(a.claims.size() == b.claims.size());
    for(std::size_t i = 0; i < a.claims.size(); i++) {
        CHECK(a.claims[i].claim.find("chain") != std::string::npos);
        CHECK(a.claims[i].residual == b.claims[i].residual);
    }
}

TEST_CASE("manifest: every catalog manifest passes")
{
    for(const auto& name : catalog_names()) {
        CAPTURE(name);
        const VerificationReport r = run_manifest(get_system(name));
        for(const auto& c : r.claims) {
            CAPTURE(c.claim);
            CHECK(c.satisfied());
        }
    }
}

TEST_CASE("manifest: Sklyanin residuals of Drach-Holt")
{
    const System sys = System::bind(get_system("drach-holt"));
    for(const auto& x : sys.sample(sys.atlas().reference(), 3, 20))
        for(double r : sklyanin_residual(sys, x)) CHECK(r < 1e-8);
}
