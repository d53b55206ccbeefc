#include "haantjes/manifest.hpp"
#include "haantjes/chains.hpp"
#include "haantjes/error.hpp"
#include "haantjes/lift.hpp"
#include "haantjes/symplectic.hpp"
#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

namespace haantjes {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while(i < line.size()) {
        while(i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) i++;
        if(i >= line.size()) break;
        std::string tok;
        if(line[i] == '"') {
            const std::size_t end = line.find('"', i + 1);
            if(end == std::string::npos) throw ParseError("unterminated quote in claim", i);
            tok = line.substr(i + 1, end - i - 1);
            i = end + 1;
            out.push_back("\"" + tok);   // marker: quoted tokens are never options
            continue;
        }
        while(i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) tok += line[i++];
        out.push_back(tok);
    }
    return out;
}

bool is_ident(const std::string& s)
{
    if(s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for(char c : s)
        if(!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

double eval_constant(const System& sys, const std::string& text)
{
    return Expr::parse(text, {}, sys.param_names()).eval({}, sys.param_values());
}

struct Context {
    const System& sys;
    const Claim& claim;
    std::uint64_t seed;
    std::size_t samples;
    double tol;

    Points pts(const std::string& chart) const { return sys.sample(chart, seed, samples); }
    const std::string& arg(std::size_t i) const
    {
        if(i >= claim.args.size()) throw PreconditionError("claim '" + claim.kind + "' needs more arguments");
        return claim.args[i];
    }
    std::string arg_or(std::size_t i, const std::string& dflt) const
    {
        return i < claim.args.size() ? claim.args[i] : dflt;
    }
    std::optional<double> expect() const
    {
        auto it = claim.options.find("expect");
        if(it == claim.options.end()) return std::nullopt;
        return eval_constant(sys, it->second);
    }
    unsigned uint_option(const std::string& key, unsigned dflt) const
    {
        auto it = claim.options.find(key);
        return it == claim.options.end() ? dflt : static_cast<unsigned>(std::stoul(it->second));
    }
    void require_darboux(const std::string& chart) const
    {
        if(!sys.atlas().chart(chart).darboux) throw PreconditionError("chart '" + chart + "' is not a Darboux chart");
    }
};

double inf(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Check claim_powers(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.sys.operator_chart(name);
    const OperatorField K = c.sys.op(name);
    const Points p = c.pts(chart);
    Check k2 = verify_haantjes(power(K, 2), p, c.tol), k3 = verify_haantjes(power(K, 3), p, c.tol);
    Check out = k2;
    out.residual = std::max(k2.residual, k3.residual);
    out.error = k2.error || k3.error;
    out.pass = k2.pass && k3.pass;
    out.set("square", k2.residual);
    out.set("cube", k3.residual);
    for(const auto& n : k3.notes) out.note(n);
    return out;
}

Check claim_doubled(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.sys.operator_chart(name);
    const Points p = c.pts(chart);
    const OperatorField K = c.sys.op(name);
    return residual_sweep("", "doubled", p,
        [&](std::span<const double> x) {
            const SpectralPoint sp = spectral_point(K.value(x));
            for(const auto& cl : sp.clusters)
                if(cl.algebraic % 2) return 1.0;
            return 0.0;
        },
        0.5);
}

Check claim_lsov(const Context& c)
{
    const std::string& chart = c.arg(2);
    c.require_darboux(chart);
    const ScalarField H = c.sys.field(c.arg(0), chart), Ha = c.sys.field(c.arg(1), chart);
    const OperatorField built = build_chain_operators(H, {Ha})[0];
    const OperatorField K = c.sys.op(c.arg(3), chart);
    return residual_sweep("", "lsov", c.pts(chart),
        [&](std::span<const double> x) {
            const Eigen::MatrixXd k = K.value(x);
            return inf(built.value(x) - k) / std::max(1.0, inf(k));
        },
        c.tol);
}

Check claim_vanishes(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.arg_or(1, c.sys.field_chart(name));
    const ScalarField F = c.sys.field(name, chart);
    return residual_sweep("", "vanishes", c.pts(chart),
        [&](std::span<const double> x) {
            double scale = 0;
            for(double t : F.terms(x)) scale += std::fabs(t);
            return std::fabs(F.value(x)) / std::max(1.0, scale);
        },
        c.tol);
}

Check claim_proportional(const Context& c)
{
    const std::string& chart = c.arg(2);
    const OperatorField A = c.sys.op(c.arg(0), chart), B = c.sys.op(c.arg(1), chart);
    const Points p = c.pts(chart);
    struct Pair {
        Eigen::MatrixXd a, b;
    };
    auto r = sweep<Pair>(p.size(), [&](std::size_t i) { return Pair{A.value(p[i]), B.value(p[i])}; });
    double num = 0, den = 0;
    for(const auto& v : r.values)
        if(v) {
            num += (v->a.array() * v->b.array()).sum();
            den += v->b.squaredNorm();
        }
    if(den == 0) throw PreconditionError("proportionality against an operator that vanishes on the samples");
    const double k = num / den;
    SweepResult<double> res;
    res.values.resize(p.size());
    res.errors = r.errors;
    res.failures = r.failures;
    for(std::size_t i = 0; i < p.size(); i++)
        if(r.values[i]) res.values[i] = inf(r.values[i]->a - k * r.values[i]->b) / std::max(1.0, inf(r.values[i]->a));
    Check out = summarize("", "proportional", res, c.tol);
    out.set("c", k);
    if(auto e = c.expect()) {
        out.set("expected_c", *e);
        if(std::fabs(k - *e) > c.tol * std::max(1.0, std::fabs(*e))) {
            out.pass = false;
            out.note("factor " + fmt(k) + " differs from the expected " + fmt(*e));
        }
    }
    out.note("factor c = " + fmt(k));
    return out;
}

Check claim_canonical(const Context& c)
{
    const std::string& chart = c.arg(0);
    const std::string& ref = c.sys.atlas().reference();
    c.require_darboux(ref);
    c.require_darboux(chart);
    const Transition t = c.sys.atlas().transition(ref, chart);
    const Points p = c.pts(ref);
    const std::size_t d = c.sys.definition().dim, n = d / 2;
    auto r = sweep<Eigen::MatrixXd>(p.size(), [&](std::size_t i) {
        const auto y = t.apply_jet(p[i]);
        Eigen::MatrixXd P(d, d);
        for(std::size_t a = 0; a < d; a++)
            for(std::size_t b = 0; b < d; b++) P(a, b) = poisson_bracket(y[a], y[b]);
        return P;
    });
    double sigma = 0;
    for(const auto& v : r.values)
        if(v) {
            sigma = (*v)(0, n) < 0 ? -1 : 1;
            break;
        }
    const Eigen::MatrixXd J0 = canonical_omega(d);
    SweepResult<double> res;
    res.values.resize(p.size());
    res.errors = r.errors;
    res.failures = r.failures;
    for(std::size_t i = 0; i < p.size(); i++)
        if(r.values[i]) res.values[i] = inf(*r.values[i] - sigma * J0) / std::max(1.0, inf(*r.values[i]));
    Check out = summarize("", "canonical", res, c.tol);
    out.set("sign", sigma);
    out.note("{q^i, p_j} = " + std::string(sigma > 0 ? "+" : "-") + "delta_ij");
    return out;
}

Check claim_minpoly(const Context& c)
{
    const std::string& name = c.arg(0);
    const unsigned want = static_cast<unsigned>(std::stoul(c.arg(1)));
    const std::string chart = c.sys.operator_chart(name);
    const Points p = c.pts(chart);
    const MinimalDegree m = minimal_poly_degree(c.sys.op(name), p);
    Check out;
    out.kind = "minpoly";
    out.samples = p.size();
    out.failed_samples = m.failures;
    out.threshold = 0;
    out.residual = static_cast<double>(m.deviating + (m.degree == want ? 0 : p.size() - m.failures));
    out.set("degree", m.degree);
    out.set("deviating_samples", static_cast<double>(m.deviating));
    out.error = m.failures * 100 >= p.size();
    out.pass = !out.error && m.degree == want && m.stable;
    out.note("minimal polynomial degree " + std::to_string(m.degree) + (m.stable ? "" : " (varies across samples)"));
    return out;
}

Check claim_semisimple(const Context& c)
{
    const std::string& name = c.arg(0);
    const bool want = c.arg(1) == "yes";
    const std::string chart = c.sys.operator_chart(name);
    const Points p = c.pts(chart);
    const SpectralSummary s = spectral_profile(c.sys.op(name), p);
    Check out;
    out.kind = "semisimple";
    out.samples = p.size();
    out.failed_samples = s.failures;
    out.error = s.failures * 100 >= p.size();
    std::size_t bad = 0;
    for(const auto& sp : s.points)
        if(sp.semisimple != want) bad++;
    out.residual = static_cast<double>(bad);
    out.threshold = 0.5;
    out.set("min_riesz", s.min_riesz);
    out.set("max_riesz", s.max_riesz);
    out.set("complex_points", static_cast<double>(s.complex_points));
    out.pass = !out.error && bad == 0;
    out.note("Riesz indices between " + std::to_string(s.min_riesz) + " and " + std::to_string(s.max_riesz));
    return out;
}

Check claim_spectrum(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.sys.operator_chart(name);
    const OperatorField K = c.sys.op(name);
    std::vector<ScalarField> fields;
    for(std::size_t i = 1; i < c.claim.args.size(); i++) fields.push_back(c.sys.field(c.claim.args[i], chart));
    if(fields.empty()) throw PreconditionError("spectrum claim needs eigenvalue fields");
    const unsigned mult = c.uint_option("mult", static_cast<unsigned>(K.dim() / fields.size()));
    const Points p = c.pts(chart);
    struct Sample {
        std::vector<double> got, want;
        bool pattern = true;
    };
    auto r = sweep<Sample>(p.size(), [&](std::size_t i) {
        const SpectralPoint sp = spectral_point(K.value(p[i]));
        Sample s;
        for(const auto& cl : sp.clusters) {
            if(cl.algebraic != mult || cl.value.imag() != 0) s.pattern = false;
            s.got.push_back(cl.value.real());
        }
        for(const auto& f : fields) s.want.push_back(f.value(p[i]));
        if(s.got.size() != s.want.size()) s.pattern = false;
        return s;
    });
    auto mismatch = [](const Sample& s, double sigma) {
        if(!s.pattern) return std::numeric_limits<double>::infinity();
        std::vector<double> w;
        for(double v : s.want) w.push_back(sigma * v);
        std::sort(w.begin(), w.end());
        double m = 0;
        for(std::size_t k = 0; k < w.size(); k++) m = std::max(m, std::fabs(s.got[k] - w[k]) / std::max(1.0, std::fabs(w[k])));
        return m;
    };
    double sigma = 1;
    for(const auto& v : r.values)
        if(v && v->pattern) {
            sigma = mismatch(*v, -1) < mismatch(*v, 1) ? -1 : 1;
            break;
        }
    SweepResult<double> res;
    res.values.resize(p.size());
    res.errors = r.errors;
    res.failures = r.failures;
    std::size_t bad_pattern = 0;
    for(std::size_t i = 0; i < p.size(); i++)
        if(r.values[i]) {
            res.values[i] = mismatch(*r.values[i], sigma);
            if(!r.values[i]->pattern) bad_pattern++;
        }
    Check out = summarize("", "spectrum", res, c.tol);
    out.set("sign", sigma);
    out.set("multiplicity", mult);
    if(bad_pattern) out.note(std::to_string(bad_pattern) + " sample(s) with a different multiplicity pattern");
    if(sigma < 0) out.note("eigenvalues equal the negated listed fields");
    return out;
}

Check claim_cyclic(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.sys.operator_chart(name);
    const std::string& gen = c.arg(1);
    const unsigned deg = static_cast<unsigned>(std::stoul(c.arg(2)));
    const OperatorField L = c.sys.has_operator(gen) ? c.sys.op(gen, chart) : c.sys.combination(chart, gen, "L");
    std::vector<ScalarField> coefs;
    for(std::size_t i = 3; i < c.claim.args.size(); i++)
        coefs.push_back(c.claim.args[i] == "-" ? ScalarField() : c.sys.field(c.claim.args[i], chart));
    CyclicFit fit = fit_in_cyclic_span(c.sys.op(name), L, deg, c.pts(chart), coefs, c.tol);
    if(!fit.alpha.empty() && !fit.alpha[0].empty()) {
        std::string s = "alpha at the first sample:";
        for(double a : fit.alpha[0]) s += " " + fmt(a);
        fit.check.note(s);
    }
    return fit.check;
}

Check claim_algebra(const Context& c)
{
    std::vector<std::string> names;
    bool abelian = false;
    for(const auto& a : c.claim.args) {
        if(a == "abelian") abelian = true;
        else names.push_back(a);
    }
    if(names.empty()) throw PreconditionError("algebra claim needs operators");
    const std::string chart = c.sys.operator_chart(names[0]);
    c.require_darboux(chart);
    std::vector<OperatorField> ops;
    for(const auto& n : names) ops.push_back(c.sys.op(n, chart));
    AlgebraReport rep = check_algebra(ops, c.sys.atlas().chart(chart).vars, c.pts(chart), c.uint_option("trials", 20),
        c.seed, c.tol, abelian);
    return rep.summary;
}

Check claim_lift(const Context& c)
{
    const std::string& name = c.arg(0);
    const std::string chart = c.sys.operator_chart(name);
    const auto* e = c.sys.op_entries(name);
    if(!e || c.sys.definition().dim != 4) throw PreconditionError("lift claim needs an entry-defined 4x4 operator");
    const std::vector<double>& pv = c.sys.param_values();
    auto entry = [&](std::size_t i, std::size_t j, const char* nm) {
        const Expr& x = (*e)[i * 4 + j];
        return x.empty() ? ScalarField::constant(0, 4) : ScalarField::from_expr(nm, x, pv);
    };
    ConfigOperator2 A{entry(0, 0, "a"), entry(0, 1, "b"), entry(1, 0, "c"), entry(1, 1, "d")};
    const ScalarField r = entry(2, 1, "r");
    const ScalarField h("h", 4, [r](std::span<const double> x) {
        const Jet2 in[4] = {Jet2::variable(x[0], 0, 4), Jet2::variable(x[1], 1, 4), Jet2::constant(0, 4),
            Jet2::constant(0, 4)};
        const double y[4] = {x[0], x[1], 0, 0};
        return compose(r.jet(y), in);
    });
    const OperatorField K = c.sys.op(name);
    const OperatorField lifted = generalized_lift(A, h);
    Check out = residual_sweep("", "lift", c.pts(chart),
        [&](std::span<const double> x) {
            const Eigen::MatrixXd k = K.value(x);
            return inf(lifted.value(x) - k) / std::max(1.0, inf(k));
        },
        c.tol);
    return out;
}

Check claim_chart(const Context& c)
{
    const std::string& chart = c.arg(0);
    const std::string& ref = c.sys.atlas().reference();
    const Transition there = c.sys.atlas().transition(ref, chart), back = c.sys.atlas().transition(chart, ref);
    const auto tol = c.claim.options.count("tol") ? c.tol : 1e-9;
    return residual_sweep("", "chart", c.pts(ref),
        [&](std::span<const double> x) {
            const auto y = back.apply(there.apply(x));
            double m = 0, s = 1;
            for(std::size_t i = 0; i < x.size(); i++) {
                m = std::max(m, std::fabs(y[i] - x[i]));
                s = std::max(s, std::fabs(x[i]));
            }
            return m / s;
        },
        tol);
}

Check dispatch(const Context& c)
{
    const std::string& k = c.claim.kind;
    const System& sys = c.sys;
    if(k == "haantjes" || k == "nijenhuis") {
        const std::string chart = c.arg_or(1, sys.operator_chart(c.arg(0)));
        const OperatorField K = sys.op(c.arg(0), chart);
        return k == "haantjes" ? verify_haantjes(K, c.pts(chart), c.tol) : verify_nijenhuis(K, c.pts(chart), c.tol);
    }
    if(k == "omega") {
        const std::string chart = c.arg_or(1, sys.operator_chart(c.arg(0)));
        c.require_darboux(chart);
        return verify_omega(sys.op(c.arg(0), chart), c.pts(chart), c.tol);
    }
    if(k == "inverse") {
        const std::string chart = sys.operator_chart(c.arg(0));
        return verify_haantjes(inverse(sys.op(c.arg(0))), c.pts(chart), c.tol);
    }
    if(k == "powers") return claim_powers(c);
    if(k == "doubled") return claim_doubled(c);
    if(k == "chain") {
        const std::string chart = c.arg_or(3, sys.operator_chart(c.arg(0)));
        c.require_darboux(chart);
        ChainOptions o;
        o.tol = c.tol;
        o.expect_c = c.expect();
        return verify_chain(sys.op(c.arg(0), chart), sys.field(c.arg(1), chart), sys.field(c.arg(2), chart), c.pts(chart), o);
    }
    if(k == "lsov") return claim_lsov(c);
    if(k == "fit-chain") {
        const std::string chart = sys.field_chart(c.arg(0));
        std::vector<ScalarField> basis;
        for(std::size_t i = 2; i < c.claim.args.size(); i++)
            basis.push_back(ScalarField::from_expr("b", sys.parse_in(chart, c.claim.args[i]), sys.param_values()));
        ChainFit fit = fit_chain_operator(sys.field(c.arg(0)), sys.field(c.arg(1)), basis, c.pts(chart), c.tol);
        return fit.chain;
    }
    if(k == "involution" || k == "benenti") {
        const std::string chart = k == "benenti" ? c.arg(2) : c.arg_or(2, sys.field_chart(c.arg(0)));
        c.require_darboux(chart);
        const ScalarField F = sys.field(c.arg(0), chart), G = sys.field(c.arg(1), chart);
        return k == "involution" ? involution_test(F, G, c.pts(chart), c.tol) : benenti_test(F, G, c.pts(chart), c.tol);
    }
    if(k == "vanishes") return claim_vanishes(c);
    if(k == "diagonal") {
        const std::string& name = c.arg(0);
        const std::string& chart = c.arg(1);
        return check_diagonal_in_chart(sys.op(name), sys.atlas().transition(chart, sys.operator_chart(name)), c.pts(chart),
            c.tol);
    }
    if(k == "proportional") return claim_proportional(c);
    if(k == "canonical") return claim_canonical(c);
    if(k == "minpoly") return claim_minpoly(c);
    if(k == "semisimple") return claim_semisimple(c);
    if(k == "spectrum") return claim_spectrum(c);
    if(k == "cyclic") return claim_cyclic(c);
    if(k == "algebra") return claim_algebra(c);
    if(k == "lift") return claim_lift(c);
    if(k == "chart") return claim_chart(c);
    throw PreconditionError("unknown claim kind '" + k + "'");
}

}  // namespace

Claim parse_claim(const std::string& line)
{
    Claim c;
    c.text = line;
    auto toks = tokenize(line);
    std::size_t i = 0;
    for(; i < toks.size(); i++) {
        if(toks[i] == "info") c.informational = true;
        else if(toks[i] == "expect-fail") c.expect_fail = true;
        else break;
    }
    if(i == toks.size()) throw ParseError("claim without a kind", 0);
    c.kind = toks[i++];
    for(; i < toks.size(); i++) {
        const std::string& t = toks[i];
        if(t[0] == '"') {
            c.args.push_back(t.substr(1));
            continue;
        }
        const std::size_t eq = t.find('=');
        if(eq != std::string::npos && eq > 0 && is_ident(t.substr(0, eq))) c.options[t.substr(0, eq)] = t.substr(eq + 1);
        else c.args.push_back(t);
    }
    return c;
}

Check run_claim(const SystemDefinition& def, const Claim& claim, const ManifestOptions& opt)
{
    Check out;
    try {
        std::map<std::string, double> overrides;
        double tol = opt.tol;
        std::size_t samples = opt.samples;
        for(const auto& [k, v] : claim.options) {
            if(k == "tol") tol = std::stod(v);
            else if(k == "samples") samples = std::stoul(v);
            else if(k == "expect" || k == "trials" || k == "mult") continue;
            else if(std::any_of(def.params.begin(), def.params.end(), [&](const auto& p) { return p.first == k; }))
                overrides[k] = std::stod(v);
            else throw PreconditionError("unknown claim option '" + k + "'");
        }
        const System sys = System::bind(def, overrides);
        const Context ctx{sys, claim, opt.seed, samples, tol};
        out = dispatch(ctx);
    } catch(const std::exception& e) {
        out = Check();
        out.kind = claim.kind;
        out.error = true;
        out.note(e.what());
    }
    out.claim = claim.text;
    out.kind = claim.kind;
    out.informational = claim.informational;
    out.expect_fail = claim.expect_fail;
    return out;
}

VerificationReport run_manifest(const SystemDefinition& def, const ManifestOptions& opt)
{
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.tool_version = tool_version();
    rep.system = def.name;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    rep.tol = opt.tol;
    for(const std::string& line : def.claims) {
        if(!opt.filter.empty() && line.find(opt.filter) == std::string::npos) continue;
        Claim claim;
        try {
            claim = parse_claim(line);
        } catch(const Error& e) {
            Check bad;
            bad.claim = line;
            bad.error = true;
            bad.note(e.what());
            rep.claims.push_back(bad);
            continue;
        }
        rep.claims.push_back(run_claim(def, claim, opt));
    }
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<double> sklyanin_residual(const System& sys, std::span<const double> x)
{
    std::vector<double> out;
    for(const auto& d : sys.definition().definitions) {
        if(d.role != "separation") continue;
        const ScalarField f = sys.field(d.name, sys.atlas().reference());
        double scale = 0;
        for(double t : f.terms(x)) scale += std::fabs(t);
        out.push_back(std::fabs(f.value(x)) / std::max(1.0, scale));
    }
    if(out.empty()) throw LookupError("system '" + sys.name() + "' has no separation equations");
    return out;
}

}  // namespace haantjes
