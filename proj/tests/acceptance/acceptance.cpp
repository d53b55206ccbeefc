// Acceptance harness: one PASS/FAIL line per criterion.  Tolerances are fixed here and never read from
// the command line.  Exit status 0 iff every criterion passes.
#include "support.hpp"
#include "haantjes/catalog.hpp"
#include "haantjes/chains.hpp"
#include "haantjes/error.hpp"
#include "haantjes/lift.hpp"
#include "haantjes/manifest.hpp"
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace haantjes;
using namespace haantjes::test;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kSamples = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

/// claims of the given kinds from every catalog manifest, run at tolerance tol
Outcome manifest_kinds(const std::vector<std::string>& kinds, double tol, std::size_t& count)
{
    Outcome o;
    double worst = 0;
    ManifestOptions mo;
    mo.seed = kSeed;
    mo.samples = kSamples;
    mo.tol = tol;
    for(const auto& name : catalog_names()) {
        const SystemDefinition def = get_system(name);
        for(const auto& line : def.claims) {
            Claim c = parse_claim(line);
            if(c.informational || std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end()) continue;
            if(!c.options.count("tol")) c.options["tol"] = fmt(tol);
            const Check r = run_claim(def, c, mo);
            count++;
            if(!c.expect_fail) worst = std::max(worst, r.residual);
            if(!r.satisfied()) {
                o.pass = false;
                o.detail += " [" + name + ": " + line + " -> " + fmt(r.residual) + "]";
            }
        }
    }
    o.detail = std::to_string(count) + " claims, worst residual " + fmt(worst) + o.detail;
    return o;
}

Outcome criterion1()
{
    std::mt19937_64 rng(kSeed);
    double agree = 0, oracle = 0;
    auto trial = [&](std::size_t dim) {
        const OperatorField L = random_operator(dim, rng);
        const auto x = random_point(dim, rng);
        const OperatorJet j = L.jet(x);
        const TorsionValue a = haantjes_torsion(j, HaantjesMethod::Definitional);
        const TorsionValue b = haantjes_torsion(j, HaantjesMethod::Coordinate);
        const double scale = std::max(1.0, a.max_abs());
        agree = std::max(agree, a.max_diff(b) / scale);
        const auto fd = fd_haantjes(L, x);
        oracle = std::max(oracle, std::max(max_diff(a, fd), max_diff(b, fd)) / scale);
    };
    for(int i = 0; i < 50; i++) trial(4);
    for(int i = 0; i < 20; i++) trial(6);
    return {agree < 1e-8 && oracle < 1e-5,
        "definitional vs coordinate " + fmt(agree) + " (< 1e-8), vs finite-difference oracle " + fmt(oracle) +
            " (< 1e-5), relative"};
}

Outcome criterion2()
{
    std::mt19937_64 rng(kSeed + 2);
    double worst = 0;
    for(int i = 0; i < 200; i++) {
        const OperatorField L = random_operator(2, rng);
        worst = std::max(worst, normalized_haantjes(L.jet(random_point(2, rng))));
    }
    return {worst < 1e-9, "200 fields, worst normalized Haantjes torsion " + fmt(worst) + " (< 1e-9)"};
}

Outcome criterion3()
{
    std::mt19937_64 rng(kSeed + 3);
    double worst = 0;
    for(int i = 0; i < 20; i++) {
        const OperatorField L = random_operator(4, rng);
        const ScalarField f = random_scalar(4, rng, "f"), g = random_scalar(4, rng, "g");
        const auto x = random_point(4, rng);
        const double g4 = std::pow(g.value(x), 4);
        const double rhs = g4 * haantjes_torsion(L.jet(x)).max_abs();
        worst = std::max(worst, torsion_scaling_residual(L, f, g, x) / std::max(1.0, rhs));
    }
    return {worst < 1e-8, "20 draws, worst relative residual " + fmt(worst) + " (< 1e-8)"};
}

Outcome criterion4()
{
    Outcome o;
    double hw = 0, ow = 0;
    for(const auto& [name, op] : catalog_operators()) {
        const System sys = System::bind(get_system(name));
        const std::string& chart = sys.operator_chart(op);
        const Points pts = sys.sample(chart, kSeed, kSamples);
        const OperatorField K = sys.op(op);
        const Check h = verify_haantjes(K, pts, 1e-8), w = verify_omega(K, pts, 1e-8);
        hw = std::max(hw, h.residual);
        ow = std::max(ow, w.residual);
        if(!h.satisfied() || !w.satisfied()) {
            o.pass = false;
            o.detail += " [" + name + "/" + op + " haantjes " + fmt(h.residual) + " omega " + fmt(w.residual) + "]";
        }
    }
    o.detail = std::to_string(catalog_operators().size()) + " operators, worst Haantjes " + fmt(hw) + ", omega " +
        fmt(ow) + " (< 1e-8)" + o.detail;
    return o;
}

Outcome criterion5()
{
    const SystemDefinition def = get_system("drach-holt");
    ManifestOptions mo;
    mo.seed = kSeed;
    mo.samples = kSamples;
    Outcome o;
    std::string parts;
    for(const char* line : {"chain KDH H1 H2 tol=1e-9", "spectrum KDH l1 l2 mult=2 tol=1e-9", "minpoly KDH 2",
            "canonical lammu tol=1e-8", "vanishes S1 tol=1e-8", "vanishes S2 tol=1e-8",
            "benenti H1 H2 lammu tol=1e-8"}) {
        const Check c = run_claim(def, parse_claim(line), mo);
        o.pass = o.pass && c.satisfied();
        parts += std::string(parts.empty() ? "" : "; ") + c.kind + " " + fmt(c.residual) + (c.satisfied() ? "" : " FAIL");
        if(c.kind == "canonical") parts += " sign " + fmt(c.get("sign"));
    }
    o.detail = parts;
    return o;
}

Outcome criterion6()
{
    const System sys = System::bind(get_system("drach-holt"));
    const Points pts = sys.sample("cartesian", kSeed, kSamples);
    std::vector<ScalarField> basis;
    for(const char* s : {"1", "x", "y", "Y", "p_x", "p_y"})
        basis.push_back(ScalarField::from_expr(s, sys.parse_in("cartesian", s), sys.param_values()));
    const ScalarField H1 = sys.field("H1"), H2 = sys.field("H2");
    const ChainFit fit = fit_chain_operator(H1, H2, basis, pts, 1e-8);
    const OperatorField KDH = sys.op("KDH");
    double action = 0;
    for(const auto& x : pts) {
        const Jet2 h = H1.jet(x);
        const Eigen::VectorXd a = transpose_action(fit.K.jet(x), h).value, b = transpose_action(KDH.jet(x), h).value;
        action = std::max(action, (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff()));
    }
    return {fit.chain.pass && fit.chain.residual < 1e-8 && action < 1e-7,
        "chain residual " + fmt(fit.chain.residual) + " (< 1e-8), action on dH1 vs KDH " + fmt(action) +
            " (< 1e-7), rank " + std::to_string(fit.rank) + "/" + std::to_string(fit.unknowns)};
}

Outcome criterion7()
{
    std::mt19937_64 rng(kSeed + 7);
    const std::vector<std::string> q = {"q1", "q2"}, qp = {"q1", "q2", "p1", "p2"};
    auto field = [&](const std::string& s) { return ScalarField::from_expr(s, Expr::parse(s, qp), {}); };
    SamplingDomain dom;
    dom.box = {{-0.8, 0.8}, {-0.8, 0.8}, {-2, 2}, {-2, 2}};
    dom.seed = kSeed;
    dom.samples = kSamples;
    const Points pts = dom.draw();
    double haan = 0, proj = 0;
    int drawn = 0, rejected = 0;
    while(drawn < 50) {
        auto poly = [&] { return random_polynomial(q, rng).to_string(); };
        const ConfigOperator2 A{field(poly()), field(poly()), field(poly()), field(poly())};
        bool positive = true;
        for(const auto& x : pts) {
            const double a = A.a.value(x), b = A.b.value(x), c = A.c.value(x), d = A.d.value(x);
            const double delta = (a - d) * (a - d) + 4 * b * c;
            const double scale = std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
            if(delta <= 1e-3 * scale * scale) positive = false;
        }
        if(!positive) {
            rejected++;
            continue;
        }
        drawn++;
        const OperatorField L = generalized_lift(A, field(poly()));
        haan = std::max(haan, verify_haantjes(L, pts, 1e-8).residual);
        for(const auto& x : pts) {
            const Eigen::MatrixXd M = L.value(x);
            const double a[4] = {A.a.value(x), A.b.value(x), A.c.value(x), A.d.value(x)};
            proj = std::max({proj, M.topRightCorner(2, 2).cwiseAbs().maxCoeff(), std::fabs(M(0, 0) - a[0]),
                std::fabs(M(0, 1) - a[1]), std::fabs(M(1, 0) - a[2]), std::fabs(M(1, 1) - a[3])});
        }
    }
    // Nijenhuis A: diagonal, each eigenvalue a function of its own coordinate
    double yano = 0;
    for(int i = 0; i < 10; i++) {
        const double c1 = uniform(rng, 2, 3), c2 = uniform(rng, -3, -2), s = uniform(rng, -0.5, 0.5);
        const std::string l1 = fmt(c1) + "+q1+" + fmt(s) + "*q1^2", l2 = fmt(c2) + "+q2^2*" + fmt(1 + s);
        const ConfigOperator2 A{field(l1), field("0"), field("0"), field(l2)};
        yano = std::max(yano, yano_coincidence_check(A, pts, 1e-8).residual);
    }
    return {haan < 1e-8 && yano < 1e-8 && proj == 0,
        "50 lifts (" + std::to_string(rejected) + " draws rejected for Delta), Haantjes " + fmt(haan) +
            " (< 1e-8), Yano Nijenhuis " + fmt(yano) + " (< 1e-8), projectability " + fmt(proj) + " (exact)"};
}

Outcome criterion10()
{
    const SystemDefinition def = get_system("aniso-rosochatius");
    ManifestOptions mo;
    mo.seed = kSeed;
    mo.samples = kSamples;
    const Check inv = run_claim(def, parse_claim("involution H RePsi tol=1e-8"), mo);
    const Check chain = run_claim(def, parse_claim("chain K2 H RePsi tol=1e-7"), mo);
    const System sys = System::bind(def);
    const Points pts = sys.sample(sys.operator_chart("K2"), kSeed, kSamples);
    const SpectralSummary s = spectral_profile(sys.op("K2"), pts);
    bool nonsemisimple = s.failures == 0 && s.points.size() == pts.size();
    unsigned lowest = 99;
    for(const auto& p : s.points) {
        unsigned r = 0;
        for(const auto& c : p.clusters) r = std::max(r, c.riesz);
        lowest = std::min(lowest, r);
        nonsemisimple = nonsemisimple && !p.semisimple && r >= 2;
    }
    return {inv.satisfied() && chain.satisfied() && nonsemisimple,
        "{H, Re Psi} " + fmt(inv.residual) + " (< 1e-8), chain " + fmt(chain.residual) +
            " (< 1e-7), smallest per-point Riesz index " + std::to_string(lowest) + " (>= 2)"};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion11()
{
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() /
        ("haantjes-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::string json[2];
    int codes[2];
    for(int i = 0; i < 2; i++) {
        const fs::path dir = base / std::to_string(i);
        fs::create_directories(dir);
        const std::string cmd = "cd \"" + dir.string() + "\" && \"" HAANTJES_LAB_PATH
                                "\" verify drach-holt --seed 7 --json out.json --quiet";
        codes[i] = std::system(cmd.c_str());
        json[i] = std::regex_replace(slurp(dir / "out.json"), std::regex("\"wall_time\": [^\\n]*"), "");
    }
    std::error_code ec;
    fs::remove_all(base, ec);
    const bool same = !json[0].empty() && json[0] == json[1];
    return {same && codes[0] == 0 && codes[1] == 0,
        std::string(same ? "byte-identical" : "reports differ") + " apart from wall_time (" +
            std::to_string(json[0].size()) + " bytes)"};
}

}  // namespace

int main()
{
    std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5}, {6, criterion6},
        {7, criterion7},
        {8, [] {
             std::size_t n = 0;
             return manifest_kinds({"diagonal"}, 1e-7, n);
         }},
        {9, [] {
             std::size_t n = 0;
             return manifest_kinds({"proportional", "cyclic"}, 1e-7, n);
         }},
        {10, criterion10}, {11, criterion11}};
    int failed = 0;
    for(const auto& [id, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch(const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s  [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), dt);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
