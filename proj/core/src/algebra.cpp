#include "haantjes/algebra.hpp"
#include "haantjes/error.hpp"
#include "haantjes/symplectic.hpp"
#include <cmath>
#include <cstdio>
#include <map>

namespace haantjes {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double max_of(const std::vector<std::pair<std::string, double>>& v)
{
    double m = 0;
    for(const auto& [k, x] : v) m = std::max(m, x);
    return m;
}

}  // namespace

Check summarize(std::string claim, std::string kind, const SweepResult<double>& r, double threshold)
{
    Check c;
    c.claim = std::move(claim);
    c.kind = std::move(kind);
    c.threshold = threshold;
    c.samples = r.values.size();
    c.failed_samples = r.failures;
    std::size_t worst = 0;
    for(std::size_t i = 0; i < r.values.size(); i++)
        if(r.values[i] && *r.values[i] > c.residual) {
            c.residual = *r.values[i];
            worst = i;
        }
    if(r.values.empty()) {
        c.error = true;
        c.note("no sample points");
        return c;
    }
    if(!r.within_budget()) {
        c.error = true;
        c.note("evaluation failed at " + std::to_string(r.failures) + " of " + std::to_string(r.values.size()) +
            " samples: " + r.first_error());
        return c;
    }
    if(r.failures) c.note("excluded " + std::to_string(r.failures) + " failing sample(s): " + r.first_error());
    c.set("worst_sample", static_cast<double>(worst));
    c.pass = std::isfinite(c.residual) && c.residual < threshold;
    return c;
}

Check residual_sweep(std::string claim, std::string kind, const Points& points,
    const std::function<double(std::span<const double>)>& residual, double threshold)
{
    auto r = sweep<double>(points.size(), [&](std::size_t i) { return residual(points[i]); });
    return summarize(std::move(claim), std::move(kind), r, threshold);
}

Check verify_haantjes(const OperatorField& L, const Points& points, double tol, HaantjesMethod method)
{
    return residual_sweep("haantjes " + L.name(), "haantjes", points,
        [&](std::span<const double> x) { return normalized_haantjes(L.jet(x), method); }, tol);
}

Check verify_haantjes(const OperatorField& L, const SamplingDomain& dom, double tol)
{
    return verify_haantjes(L, dom.draw(), tol);
}

Check verify_nijenhuis(const OperatorField& L, const Points& points, double tol)
{
    return residual_sweep("nijenhuis " + L.name(), "nijenhuis", points,
        [&](std::span<const double> x) { return normalized_nijenhuis(L.jet(x)); }, tol);
}

Check verify_omega(const OperatorField& K, const Points& points, double tol)
{
    return residual_sweep("omega " + K.name(), "omega", points,
        [&](std::span<const double> x) {
            const Eigen::MatrixXd m = K.value(x);
            return omega_residual(m) / std::max(1.0, m.cwiseAbs().maxCoeff());
        },
        tol);
}

Expr random_polynomial(const std::vector<std::string>& vars, std::mt19937_64& rng)
{
    auto coef = [&] {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", uniform(rng, -1, 1));
        return std::string(buf);
    };
    std::string s = coef();
    for(std::size_t i = 0; i < vars.size(); i++) {
        s += "+(" + coef() + ")*" + vars[i];
        for(std::size_t j = i; j < vars.size(); j++) s += "+(" + coef() + ")*" + vars[i] + "*" + vars[j];
    }
    return Expr::parse(s, vars);
}

AlgebraReport check_algebra(const std::vector<OperatorField>& ops_in, const std::vector<std::string>& vars,
    const Points& points, unsigned random_trials, std::uint64_t seed, double tol, bool require_abelian)
{
    if(ops_in.empty()) throw PreconditionError("algebra check needs at least one operator");
    AlgebraReport rep;
    std::vector<OperatorField> ops{OperatorField::identity(ops_in[0].dim())};
    for(const auto& op : ops_in) {
        if(op.dim() != ops[0].dim()) throw PreconditionError("algebra operators must share one chart");
        ops.push_back(op);
    }
    for(const auto& op : ops) rep.operators.push_back(op.name());
    Check& s = rep.summary;
    s.kind = "algebra";
    s.threshold = tol;
    s.samples = points.size();
    std::string names;
    for(const auto& op : ops_in) names += " " + op.name();
    s.claim = "algebra" + names;

    auto absorb = [&](const Check& c, std::vector<std::pair<std::string, double>>& into, const std::string& label) {
        into.emplace_back(label, c.residual);
        s.failed_samples = std::max(s.failed_samples, c.failed_samples);
        if(c.error) {
            s.error = true;
            for(const auto& n : c.notes) s.note(label + ": " + n);
        }
    };
    for(std::size_t i = 1; i < ops.size(); i++) {
        absorb(verify_haantjes(ops[i], points, tol), rep.haantjes, ops[i].name());
        absorb(verify_omega(ops[i], points, tol), rep.omega, ops[i].name());
    }
    for(std::size_t i = 1; i < ops.size(); i++)
        for(std::size_t j = 1; j < ops.size(); j++)
            if(i != j) absorb(verify_haantjes(product(ops[i], ops[j]), points, tol), rep.products,
                ops[i].name() + "*" + ops[j].name());
    std::mt19937_64 rng(seed);
    for(unsigned t = 0; t < random_trials; t++) {
        const std::size_t i = rng() % ops.size();
        std::size_t j = rng() % ops.size();
        if(j == i) j = (j + 1) % ops.size();
        const ScalarField f = ScalarField::from_expr("f", random_polynomial(vars, rng), {});
        const ScalarField g = ScalarField::from_expr("g", random_polynomial(vars, rng), {});
        const OperatorField comb = combination({f, g}, {ops[i], ops[j]});
        absorb(verify_haantjes(comb, points, tol), rep.combinations, "f*" + ops[i].name() + "+g*" + ops[j].name());
    }
    for(std::size_t i = 1; i < ops.size(); i++)
        for(std::size_t j = i + 1; j < ops.size(); j++) {
            const OperatorField &a = ops[i], &b = ops[j];
            Check c = residual_sweep("commutator", "commutator", points,
                [&](std::span<const double> x) {
                    const Eigen::MatrixXd A = a.value(x), B = b.value(x);
                    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff() * B.cwiseAbs().maxCoeff());
                    return (A * B - B * A).cwiseAbs().maxCoeff() / scale;
                },
                tol);
            absorb(c, rep.commutators, "[" + a.name() + "," + b.name() + "]");
        }
    rep.abelian = max_of(rep.commutators) < tol;
    for(std::size_t i = 1; i < ops.size(); i++) {
        const SpectralSummary sp = spectral_profile(ops[i], points);
        rep.semisimple.emplace_back(ops[i].name(), sp.semisimple_everywhere);
        rep.min_degree.emplace_back(ops[i].name(), minimal_poly_degree(ops[i], points).degree);
    }
    const double torsion = std::max({max_of(rep.haantjes), max_of(rep.products), max_of(rep.combinations)});
    const double omega = max_of(rep.omega);
    s.residual = std::max(torsion, omega);
    s.set("haantjes", max_of(rep.haantjes));
    s.set("products", max_of(rep.products));
    s.set("combinations", max_of(rep.combinations));
    s.set("omega", omega);
    s.set("commutators", max_of(rep.commutators));
    s.set("abelian", rep.abelian ? 1 : 0);
    s.pass = !s.error && s.residual < tol && (!require_abelian || rep.abelian);
    if(require_abelian && !rep.abelian) s.note("operators do not commute: " + fmt(max_of(rep.commutators)));
    for(const auto& [n, ss] : rep.semisimple) s.note(n + (ss ? " semisimple" : " not semisimple"));
    for(const auto& [n, d] : rep.min_degree) s.note(n + " minimal polynomial degree " + std::to_string(d));
    return rep;
}

SpectralSummary spectral_profile(const OperatorField& K, const Points& points, const SpectralOptions& opt)
{
    auto r = sweep<SpectralPoint>(points.size(), [&](std::size_t i) { return spectral_point(K.value(points[i]), opt); });
    SpectralSummary s;
    s.failures = r.failures;
    bool first = true;
    for(auto& v : r.values) {
        if(!v) continue;
        std::vector<unsigned> pat, geo;
        for(const auto& c : v->clusters) {
            pat.push_back(c.algebraic);
            geo.push_back(c.geometric);
            s.min_riesz = first ? c.riesz : std::min(s.min_riesz, c.riesz);
            s.max_riesz = std::max(s.max_riesz, c.riesz);
            first = false;
        }
        if(s.points.empty()) {
            s.pattern = pat;
            s.geometric = geo;
        } else if(pat != s.pattern || geo != s.geometric) {
            s.stable_pattern = false;
        }
        if(v->semisimple) s.nonsemisimple_everywhere = false;
        else s.semisimple_everywhere = false;
        if(v->complex_pair) s.complex_points++;
        s.points.push_back(std::move(*v));
    }
    if(s.points.empty()) s.semisimple_everywhere = s.nonsemisimple_everywhere = false;
    return s;
}

MinimalDegree minimal_poly_degree(const OperatorField& K, const Points& points, double rank_tol)
{
    auto r = sweep<unsigned>(points.size(), [&](std::size_t i) { return minimal_poly_degree(K.value(points[i]), rank_tol); });
    MinimalDegree m;
    m.failures = r.failures;
    std::map<unsigned, std::size_t> count;
    for(const auto& v : r.values)
        if(v) count[*v]++;
    std::size_t best = 0;
    for(const auto& [d, n] : count)
        if(n > best) {
            best = n;
            m.degree = d;
        }
    for(const auto& [d, n] : count)
        if(d != m.degree) m.deviating += n;
    m.stable = m.deviating == 0;
    return m;
}

namespace {

struct CyclicPoint {
    std::vector<double> alpha;
    double residual = 0;
};

CyclicPoint cyclic_point(const Eigen::MatrixXd& k, const Eigen::MatrixXd& l, unsigned max_degree, const std::string& lname)
{
    const Eigen::Index n = k.rows();
    Eigen::MatrixXd A(n * n, max_degree + 1);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
    for(unsigned j = 0; j <= max_degree; j++) {
        A.col(j) = Eigen::Map<const Eigen::VectorXd>(P.data(), n * n);
        P = P * l;
    }
    const Eigen::VectorXd norms = A.colwise().norm();
    for(Eigen::Index j = 0; j < norms.size(); j++)
        if(norms(j) == 0) throw PreconditionError(lname + "^" + std::to_string(j) + " vanishes at this point");
    const Eigen::MatrixXd An = A * norms.cwiseInverse().asDiagonal();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(An, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if(sv(sv.size() - 1) < 1e-9 * sv(0))
        throw PreconditionError("I, " + lname + ", ..., " + lname + "^" + std::to_string(max_degree) +
            " are linearly dependent at this point");
    const Eigen::VectorXd kv = Eigen::Map<const Eigen::VectorXd>(k.data(), n * n);
    const Eigen::VectorXd alpha = norms.cwiseInverse().asDiagonal() * svd.solve(kv);
    CyclicPoint cp;
    cp.alpha.assign(alpha.data(), alpha.data() + alpha.size());
    cp.residual = (A * alpha - kv).cwiseAbs().maxCoeff() / std::max(1.0, kv.cwiseAbs().maxCoeff());
    return cp;
}

}  // namespace

CyclicFit fit_in_cyclic_span(const OperatorField& K, const OperatorField& L, unsigned max_degree, const Points& points,
    const std::vector<ScalarField>& coefficients, double tol)
{
    CyclicFit out;
    out.alpha.resize(points.size());
    auto r = sweep<CyclicPoint>(points.size(), [&](std::size_t i) {
        CyclicPoint cp = cyclic_point(K.value(points[i]), L.value(points[i]), max_degree, L.name());
        for(std::size_t j = 0; j < coefficients.size() && j <= max_degree; j++) {
            if(!coefficients[j].valid()) continue;
            const double c = coefficients[j].value(points[i]);
            cp.residual = std::max(cp.residual, std::fabs(cp.alpha[j] - c) / std::max(1.0, std::fabs(c)));
        }
        return cp;
    });
    SweepResult<double> res;
    res.values.resize(points.size());
    res.errors = r.errors;
    res.failures = r.failures;
    for(std::size_t i = 0; i < points.size(); i++)
        if(r.values[i]) {
            res.values[i] = r.values[i]->residual;
            out.alpha[i] = r.values[i]->alpha;
        }
    out.check = summarize("cyclic " + K.name() + " " + L.name(), "cyclic", res, tol);
    return out;
}

Check check_diagonal_in_chart(const OperatorField& K, const Transition& to_k, const Points& points, double tol)
{
    const OperatorField kb = pullback(K, to_k);
    const std::size_t d = K.dim();
    Check c = residual_sweep("diagonal " + K.name() + " " + to_k.from(), "diagonal", points,
        [&](std::span<const double> x) {
            const Eigen::MatrixXd m = kb.value(x);
            double o = 0, diag = 1, p = 0;
            for(std::size_t i = 0; i < d; i++)
                for(std::size_t j = 0; j < d; j++) {
                    if(i == j) diag = std::max(diag, std::fabs(m(i, j)));
                    else o = std::max(o, std::fabs(m(i, j)));
                }
            if(d % 2 == 0)
                for(std::size_t i = 0; i < d / 2; i++) p = std::max(p, std::fabs(m(i, i) - m(i + d / 2, i + d / 2)));
            return std::max(o, p) / diag;
        },
        tol);
    // conditioning of the chart map, reported and not gated
    double cond = 0;
    for(const auto& x : points) {
        try {
            const Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_k.jacobian(x));
            const auto& sv = svd.singularValues();
            cond = std::max(cond, sv(0) / sv(sv.size() - 1));
        } catch(const Error&) {
        }
    }
    c.set("max_jacobian_condition", cond);
    return c;
}

}  // namespace haantjes
