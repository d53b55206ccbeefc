// haantjes-lab: command-line front end.  Exit status 0 when every claim is satisfied, 1 when some claim is
// not, 2 on usage, input or parse errors.
#include "haantjes/catalog.hpp"
#include "haantjes/chains.hpp"
#include "haantjes/error.hpp"
#include "haantjes/lift.hpp"
#include "haantjes/manifest.hpp"
#include "report_json.hpp"
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace haantjes;

namespace {

struct Common {
    std::size_t samples = 100;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    std::string json;
    bool quiet = false;
};

struct Source {
    std::string file, system, F;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--samples", c.samples, "sample points per check")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--tol", c.tol, "residual threshold")->check(CLI::PositiveNumber);
    sub->add_option("--json", c.json, "write the JSON report to this path");
    sub->add_flag("--quiet", c.quiet, "suppress the human-readable table");
}

void add_source(CLI::App* sub, Source& s)
{
    auto* f = sub->add_option("--file", s.file, "system definition file");
    auto* n = sub->add_option("--system", s.system, "catalog system instead of a file");
    f->excludes(n);
    sub->add_option("--F", s.F, "profile F(u), u = y/x, for the catalog families");
}

SystemDefinition load(const Source& s)
{
    if(!s.file.empty()) return load_system_file(s.file);
    if(!s.system.empty()) return get_system(s.system, s.F);
    throw PreconditionError("one of --file or --system is required");
}

std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    if(!in) throw LookupError("cannot open '" + path + "'");
    std::vector<std::string> out;
    for(std::string line; std::getline(in, line);) {
        const auto b = line.find_first_not_of(" \t\r");
        if(b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

VerificationReport start(const SystemDefinition& def, const Common& c)
{
    VerificationReport r;
    r.tool_version = tool_version();
    r.system = def.name;
    r.seed = c.seed;
    r.samples = c.samples;
    r.tol = c.tol;
    return r;
}

Check labelled(Check c, std::string claim, bool informational = false)
{
    c.claim = std::move(claim);
    c.informational = informational;
    return c;
}

VerificationReport cmd_torsion(const Source& src, const Common& c, const std::string& op, const std::string& kind)
{
    const SystemDefinition def = load(src);
    const System sys = System::bind(def);
    VerificationReport r = start(def, c);
    const std::string& chart = sys.operator_chart(op);
    const Points pts = sys.sample(chart, c.seed, c.samples);
    const OperatorField K = sys.op(op);
    r.claims.push_back(labelled(
        kind == "nijenhuis" ? verify_nijenhuis(K, pts, c.tol) : verify_haantjes(K, pts, c.tol), kind + " " + op));
    return r;
}

VerificationReport cmd_chain(const Source& src, const Common& c, const std::string& op, const std::string& from,
    const std::string& to)
{
    const SystemDefinition def = load(src);
    const System sys = System::bind(def);
    VerificationReport r = start(def, c);
    const std::string& chart = sys.operator_chart(op);
    ChainOptions o;
    o.tol = c.tol;
    r.claims.push_back(labelled(verify_chain(sys.op(op), sys.field(from, chart), sys.field(to, chart),
                                    sys.sample(chart, c.seed, c.samples), o),
        "chain " + op + " " + from + " " + to));
    return r;
}

VerificationReport cmd_fit(const Source& src, const Common& c, const std::string& from, const std::string& to,
    const std::string& basis_file)
{
    const SystemDefinition def = load(src);
    const System sys = System::bind(def);
    VerificationReport r = start(def, c);
    const std::string& chart = sys.field_chart(from);
    std::vector<ScalarField> basis;
    for(const auto& line : read_lines(basis_file))
        basis.push_back(ScalarField::from_expr(line, sys.parse_in(chart, line), sys.param_values()));
    if(basis.empty()) throw PreconditionError("basis file '" + basis_file + "' has no expressions");
    ChainFit fit = fit_chain_operator(sys.field(from), sys.field(to, chart), basis, sys.sample(chart, c.seed, c.samples), c.tol);
    r.claims.push_back(labelled(fit.chain, "fit-chain " + from + " " + to));
    r.claims.push_back(labelled(fit.haantjes, "haantjes of the fitted operator", true));
    return r;
}

VerificationReport cmd_lift(const Common& c, const std::string& a_file, const std::string& h_text, bool complex_delta)
{
    const SystemDefinition def = load_system_file(a_file);
    const System sys = System::bind(def);
    VerificationReport r = start(def, c);
    const std::string& ref = sys.atlas().reference();
    if(def.dim != 4) throw PreconditionError("lift needs a chart (q1, q2, p1, p2)");
    const ConfigOperator2 A{sys.field("a", ref), sys.field("b", ref), sys.field("c", ref), sys.field("d", ref)};
    const ScalarField h = h_text.empty()
        ? ScalarField::constant(0, 4)
        : ScalarField::from_expr("h", sys.parse_in(ref, h_text), sys.param_values());
    LiftOptions lo;
    lo.allow_complex_delta = complex_delta;
    const OperatorField K = generalized_lift(A, h, lo);
    const Points pts = sys.sample(ref, c.seed, c.samples);
    r.claims.push_back(labelled(verify_haantjes(K, pts, c.tol), "haantjes lift"));
    r.claims.push_back(labelled(verify_omega(K, pts, c.tol), "omega lift"));
    r.claims.push_back(labelled(residual_sweep("", "projectable", pts,
                                    [&](std::span<const double> x) {
                                        const Eigen::MatrixXd k = K.value(x);
                                        const double a[4] = {A.a.value(x), A.b.value(x), A.c.value(x), A.d.value(x)};
                                        double m = k.topRightCorner(2, 2).cwiseAbs().maxCoeff();
                                        m = std::max({m, std::fabs(k(0, 0) - a[0]), std::fabs(k(0, 1) - a[1]),
                                            std::fabs(k(1, 0) - a[2]), std::fabs(k(1, 1) - a[3])});
                                        return m;
                                    },
                                    c.tol),
        "projectable lift"));
    if(h_text.empty()) {
        try {
            r.claims.push_back(labelled(yano_coincidence_check(A, pts, c.tol), "nijenhuis lift (Nijenhuis A, h = 0)"));
        } catch(const PreconditionError& e) {
            Check skipped;
            skipped.kind = "nijenhuis";
            skipped.note(e.what());
            r.claims.push_back(labelled(skipped, "nijenhuis lift (skipped)", true));
        }
    }
    return r;
}

VerificationReport cmd_spectrum(const Source& src, const Common& c, const std::string& op)
{
    const SystemDefinition def = load(src);
    const System sys = System::bind(def);
    VerificationReport r = start(def, c);
    const std::string& chart = sys.operator_chart(op);
    const Points pts = sys.sample(chart, c.seed, c.samples);
    const OperatorField K = sys.op(op);
    const SpectralSummary s = spectral_profile(K, pts);
    Check sp;
    sp.kind = "spectrum";
    sp.samples = pts.size();
    sp.failed_samples = s.failures;
    sp.pass = s.stable_pattern;
    std::string pattern = "algebraic multiplicities";
    for(unsigned m : s.pattern) pattern += " " + std::to_string(m);
    sp.note(pattern + (s.stable_pattern ? "" : " at the first point (pattern varies)"));
    std::string geo = "geometric multiplicities";
    for(unsigned m : s.geometric) geo += " " + std::to_string(m);
    sp.note(geo);
    sp.note(s.semisimple_everywhere ? "semisimple everywhere"
                                    : s.nonsemisimple_everywhere ? "non-semisimple everywhere" : "semisimplicity varies");
    sp.set("distinct", static_cast<double>(s.pattern.size()));
    sp.set("min_riesz", s.min_riesz);
    sp.set("max_riesz", s.max_riesz);
    sp.set("complex_points", static_cast<double>(s.complex_points));
    r.claims.push_back(labelled(sp, "spectrum " + op, true));
    const MinimalDegree m = minimal_poly_degree(K, pts);
    Check mp;
    mp.kind = "minpoly";
    mp.samples = pts.size();
    mp.failed_samples = m.failures;
    mp.pass = m.stable;
    mp.set("degree", m.degree);
    mp.note("minimal polynomial degree " + std::to_string(m.degree) + (m.stable ? "" : " (varies)"));
    r.claims.push_back(labelled(mp, "minimal polynomial " + op, true));
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks of Haantjes structures for Hamiltonian systems", "haantjes-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());
    Common common;
    Source src;
    std::string op, kind = "haantjes", from, to, basis, a_file, h_text, claims, system;
    bool complex_delta = false;

    auto* verify = app.add_subcommand("verify", "run the claim manifest of a catalog system or file");
    verify->add_option("system", system, "catalog system name");
    verify->add_option("--file", src.file, "system definition file instead of a catalog name");
    verify->add_option("--claims", claims, "only claims whose text contains this substring");
    verify->add_option("--F", src.F, "profile F(u), u = y/x, for the catalog families");
    add_common(verify, common);

    auto* torsion = app.add_subcommand("torsion", "Nijenhuis or Haantjes torsion of an operator");
    add_source(torsion, src);
    torsion->add_option("--operator", op, "operator name")->required();
    torsion->add_option("--kind", kind, "nijenhuis or haantjes")->check(CLI::IsMember({"nijenhuis", "haantjes"}));
    add_common(torsion, common);

    auto* chain = app.add_subcommand("chain", "check K^T dH = c dH_a");
    add_source(chain, src);
    chain->add_option("--from", from, "generating function H")->required();
    chain->add_option("--to", to, "target function H_a")->required();
    chain->add_option("--operator", op, "operator K")->required();
    add_common(chain, common);

    auto* fit = app.add_subcommand("fit-chain", "fit an omega-compatible chain operator over a basis");
    add_source(fit, src);
    fit->add_option("--from", from, "generating function H")->required();
    fit->add_option("--to", to, "target function H_a")->required();
    fit->add_option("--basis", basis, "file with one basis expression per line")->required();
    add_common(fit, common);

    auto* lift = app.add_subcommand("lift", "lift a 2x2 operator (fields a, b, c, d of a definition file)");
    lift->set_help_flag("--help", "print this help message and exit");  // -h would clash with --h
    lift->add_option("--a", a_file, "definition file with fields a, b, c, d")->required();
    lift->add_option("--h", h_text, "momentum-free part h of the off-diagonal entry");
    lift->add_flag("--allow-complex-delta", complex_delta, "accept a negative discriminant");
    add_common(lift, common);

    auto* spectrum = app.add_subcommand("spectrum", "pointwise spectral structure of an operator");
    add_source(spectrum, src);
    spectrum->add_option("--operator", op, "operator name")->required();
    add_common(spectrum, common);

    auto* list = app.add_subcommand("list", "list the catalog systems");

    try {
        app.parse(argc, argv);
    } catch(const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = "haantjes-lab";
    for(int i = 1; i < argc; i++) command += std::string(" ") + argv[i];

    try {
        if(list->parsed()) {
            for(const auto& n : catalog_names()) std::cout << n << "\n";
            return 0;
        }
        const auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        if(verify->parsed()) {
            if(system.empty() == src.file.empty()) throw PreconditionError("verify needs a system name or --file");
            const SystemDefinition def = src.file.empty() ? get_system(system, src.F) : load_system_file(src.file);
            ManifestOptions mo;
            mo.seed = common.seed;
            mo.samples = common.samples;
            mo.tol = common.tol;
            mo.filter = claims;
            rep = run_manifest(def, mo);
        } else if(torsion->parsed()) rep = cmd_torsion(src, common, op, kind);
        else if(chain->parsed()) rep = cmd_chain(src, common, op, from, to);
        else if(fit->parsed()) rep = cmd_fit(src, common, from, to, basis);
        else if(lift->parsed()) rep = cmd_lift(common, a_file, h_text, complex_delta);
        else rep = cmd_spectrum(src, common, op);
        rep.command = command;
        rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        if(!common.json.empty()) {
            std::ofstream out(common.json, std::ios::binary);
            if(!out) throw LookupError("cannot write '" + common.json + "'");
            out << report_to_json(rep);
        }
        if(!common.quiet) std::cout << report_to_table(rep);
        return rep.pass() ? 0 : 1;
    } catch(const std::exception& e) {
        std::cerr << "haantjes-lab: " << e.what() << "\n";
        return 2;
    }
}
