#include "haantjes/chains.hpp"
#include "haantjes/error.hpp"
#include "haantjes/symplectic.hpp"
#include <cmath>
#include <cstdio>

namespace haantjes {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<OperatorField> build_chain_operators(const ScalarField& H, const std::vector<ScalarField>& Hs)
{
    const std::size_t d = H.dim();
    if(d % 2) throw PreconditionError("chain operators need a Darboux chart");
    const std::size_t n = d / 2;
    std::vector<OperatorField> out;
    for(const ScalarField& Ha : Hs) {
        out.emplace_back("K[" + Ha.name() + "]", d, [H, Ha, n, d](std::span<const double> x) {
            const Jet2 h = H.jet(x), ha = Ha.jet(x);
            OperatorJet j;
            j.value = Eigen::MatrixXd::Zero(d, d);
            j.partial.assign(d, Eigen::MatrixXd::Zero(d, d));
            for(std::size_t i = 0; i < n; i++) {
                const Jet2 den = h.derivative(n + i);
                double gnorm = 0;
                for(std::size_t k = 0; k < d; k++) gnorm = std::max(gnorm, std::fabs(h.grad(k)));
                if(std::fabs(den.value()) <= 1e-12 * std::max(1.0, gnorm))
                    throw DomainError("dH/dp_" + std::to_string(i + 1) + " vanishes");
                const Jet2 l = ha.derivative(n + i) / den;
                for(std::size_t r : {i, n + i}) {
                    j.value(r, r) = l.value();
                    for(std::size_t k = 0; k < d; k++) j.partial[k](r, r) = l.grad(k);
                }
            }
            return j;
        });
    }
    return out;
}

Check verify_chain(const OperatorField& K, const ScalarField& H, const ScalarField& Ha, const Points& points,
    const ChainOptions& opt)
{
    struct Sample {
        Eigen::VectorXd theta, target;
        double closed = 0;
    };
    auto r = sweep<Sample>(points.size(), [&](std::size_t i) {
        const OneFormJet t = transpose_action(K.jet(points[i]), H.jet(points[i]));
        const Jet2 ha = Ha.jet(points[i]);
        Sample s;
        s.theta = t.value;
        s.target = gradient_form(ha).value;
        s.closed = exterior_derivative(t).cwiseAbs().maxCoeff() / std::max(1.0, t.partial.cwiseAbs().maxCoeff());
        return s;
    });
    Check c;
    c.claim = "chain " + K.name() + " " + H.name() + " " + Ha.name();
    c.kind = "chain";
    c.threshold = opt.tol;
    c.samples = points.size();
    c.failed_samples = r.failures;
    if(points.empty() || !r.within_budget()) {
        c.error = true;
        c.note("evaluation failed at " + std::to_string(r.failures) + " samples: " + r.first_error());
        return c;
    }
    if(r.failures) c.note("excluded " + std::to_string(r.failures) + " failing sample(s): " + r.first_error());
    double num = 0, den = 0;
    for(const auto& v : r.values)
        if(v) {
            num += v->theta.dot(v->target);
            den += v->target.squaredNorm();
        }
    const double cc = den > 0 ? num / den : 1.0;
    double chain = 0, spread = 0, closed = 0;
    for(const auto& v : r.values) {
        if(!v) continue;
        const Eigen::VectorXd fit = cc * v->target;
        chain = std::max(chain, inf_norm(v->theta - fit) / std::max({1.0, inf_norm(v->theta), inf_norm(fit)}));
        const double t2 = v->target.squaredNorm();
        if(t2 > 0) spread = std::max(spread, std::fabs(v->theta.dot(v->target) / t2 - cc) / std::max(1.0, std::fabs(cc)));
        closed = std::max(closed, v->closed);
    }
    c.residual = std::max(chain, closed);
    c.set("c", cc);
    c.set("chain", chain);
    c.set("closedness", closed);
    c.set("c_spread", spread);
    c.pass = chain < opt.tol && closed < opt.tol && spread <= opt.spread_tol;
    if(spread > opt.spread_tol) c.note("fitted scalar varies across samples (spread " + fmt(spread) + ")");
    if(opt.expect_c) {
        if(std::fabs(cc - *opt.expect_c) > opt.spread_tol * std::max(1.0, std::fabs(*opt.expect_c))) {
            c.pass = false;
            c.note("fitted scalar " + fmt(cc) + " differs from the expected " + fmt(*opt.expect_c));
        }
    } else if(std::fabs(cc - 1) > opt.spread_tol) {
        c.note("chain holds up to the scalar c = " + fmt(cc));
    }
    return c;
}

Check benenti_test(const ScalarField& F, const ScalarField& G, const Points& points, double tol)
{
    const std::size_t n = F.dim() / 2;
    auto r = sweep<std::vector<double>>(points.size(), [&](std::size_t i) {
        const auto terms = poisson_terms(F.jet(points[i]), G.jet(points[i]));
        std::vector<double> v(terms.size());
        for(std::size_t k = 0; k < terms.size(); k++)
            v[k] = std::fabs(terms[k].value()) / std::max(1.0, std::fabs(terms[k].a) + std::fabs(terms[k].b));
        return v;
    });
    SweepResult<double> folded;
    folded.values.resize(points.size());
    folded.errors = r.errors;
    folded.failures = r.failures;
    std::vector<double> per(n, 0);
    for(std::size_t i = 0; i < points.size(); i++)
        if(r.values[i]) {
            double m = 0;
            for(std::size_t k = 0; k < n; k++) {
                per[k] = std::max(per[k], (*r.values[i])[k]);
                m = std::max(m, (*r.values[i])[k]);
            }
            folded.values[i] = m;
        }
    Check c = summarize("benenti " + F.name() + " " + G.name(), "benenti", folded, tol);
    for(std::size_t k = 0; k < n; k++) c.set("index_" + std::to_string(k + 1), per[k]);
    return c;
}

Check involution_test(const ScalarField& F, const ScalarField& G, const Points& points, double tol)
{
    return residual_sweep("involution " + F.name() + " " + G.name(), "involution", points,
        [&](std::span<const double> x) {
            const auto terms = poisson_terms(F.jet(x), G.jet(x));
            double s = 0, scale = 0;
            for(const auto& t : terms) {
                s += t.value();
                scale += std::fabs(t.a) + std::fabs(t.b);
            }
            return std::fabs(s) / std::max(1.0, scale);
        },
        tol);
}

namespace {

/// unit matrices of the free functions of [[A, B], [C, A^T]]
std::vector<Eigen::MatrixXd> block_class_units(std::size_t n)
{
    const std::size_t d = 2 * n;
    std::vector<Eigen::MatrixXd> units;
    for(std::size_t i = 0; i < n; i++)
        for(std::size_t j = 0; j < n; j++) {
            Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
            E(i, j) = 1;
            E(n + j, n + i) = 1;
            units.push_back(E);
        }
    for(std::size_t i = 0; i < n; i++)
        for(std::size_t j = i + 1; j < n; j++) {
            Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
            E(i, n + j) = 1;
            E(j, n + i) = -1;
            units.push_back(E);
        }
    for(std::size_t i = 0; i < n; i++)
        for(std::size_t j = i + 1; j < n; j++) {
            Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
            E(n + i, j) = 1;
            E(n + j, i) = -1;
            units.push_back(E);
        }
    return units;
}

}  // namespace

ChainFit fit_chain_operator(const ScalarField& H, const ScalarField& Ha, const std::vector<ScalarField>& basis,
    const Points& points, double tol)
{
    const std::size_t d = H.dim();
    if(d % 2) throw PreconditionError("chain fitting needs a Darboux chart");
    if(basis.empty()) throw PreconditionError("empty ansatz basis");
    const std::size_t n = d / 2;
    const auto units = block_class_units(n);
    const std::size_t nb = basis.size();
    const std::size_t m = units.size() * nb;
    if(points.size() * d < 3 * m)
        throw PreconditionError("fit needs samples*dim >= 3*unknowns (" + std::to_string(points.size() * d) + " < " +
            std::to_string(3 * m) + ")");

    struct Rows {
        Eigen::MatrixXd A;
        Eigen::VectorXd b;
    };
    auto r = sweep<Rows>(points.size(), [&](std::size_t s) {
        const Jet2 h = H.jet(points[s]);
        Eigen::VectorXd dH(d);
        for(std::size_t i = 0; i < d; i++) dH(i) = h.grad(i);
        const Eigen::VectorXd target = gradient_form(Ha.jet(points[s])).value;
        const double w = 1 / std::max(1.0, inf_norm(target));
        Rows rows{Eigen::MatrixXd(d, m), target * w};
        for(std::size_t b = 0; b < nb; b++) {
            const double phi = basis[b].value(points[s]);
            for(std::size_t u = 0; u < units.size(); u++) rows.A.col(u * nb + b) = w * phi * (units[u].transpose() * dH);
        }
        return rows;
    });
    if(!r.within_budget())
        throw DomainError("chain fit: evaluation failed at " + std::to_string(r.failures) + " samples: " + r.first_error());
    std::size_t good = 0;
    for(const auto& v : r.values)
        if(v) good++;
    Eigen::MatrixXd A(good * d, m);
    Eigen::VectorXd b(good * d);
    std::size_t row = 0;
    for(const auto& v : r.values)
        if(v) {
            A.middleRows(row, d) = v->A;
            b.segment(row, d) = v->b;
            row += d;
        }
    Eigen::VectorXd norms = A.colwise().norm();
    for(Eigen::Index j = 0; j < norms.size(); j++)
        if(norms(j) == 0) norms(j) = 1;
    const Eigen::MatrixXd An = A * norms.cwiseInverse().asDiagonal();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(An, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Eigen::VectorXd coef = norms.cwiseInverse().asDiagonal() * svd.solve(b);

    ChainFit fit;
    fit.unknowns = m;
    fit.rank = static_cast<std::size_t>(svd.rank());
    fit.null_dim = m - fit.rank;
    fit.coefficients.assign(coef.data(), coef.data() + coef.size());
    fit.K = OperatorField("K_fit", d, [units, basis, coef, nb, d](std::span<const double> x) {
        OperatorJet j;
        j.value = Eigen::MatrixXd::Zero(d, d);
        j.partial.assign(d, Eigen::MatrixXd::Zero(d, d));
        for(std::size_t bi = 0; bi < nb; bi++) {
            const Jet2 phi = basis[bi].jet(x);
            for(std::size_t u = 0; u < units.size(); u++) {
                const double c = coef(static_cast<Eigen::Index>(u * nb + bi));
                if(c == 0) continue;
                j.value += c * phi.value() * units[u];
                for(std::size_t k = 0; k < d; k++) j.partial[k] += c * phi.grad(k) * units[u];
            }
        }
        return j;
    });
    fit.chain = residual_sweep("fit-chain " + H.name() + " " + Ha.name(), "fit-chain", points,
        [&](std::span<const double> x) {
            const Eigen::VectorXd theta = transpose_action(fit.K.jet(x), H.jet(x)).value;
            const Eigen::VectorXd target = gradient_form(Ha.jet(x)).value;
            return inf_norm(theta - target) / std::max(1.0, inf_norm(target));
        },
        tol);
    fit.chain.set("unknowns", static_cast<double>(m));
    fit.chain.set("rank", static_cast<double>(fit.rank));
    fit.chain.set("null_dim", static_cast<double>(fit.null_dim));
    if(fit.null_dim) fit.chain.note("solution not unique: null space of dimension " + std::to_string(fit.null_dim) +
        "; the minimum-norm solution is reported");
    fit.haantjes = verify_haantjes(fit.K, points, tol);
    fit.chain.set("haantjes", fit.haantjes.residual);
    return fit;
}

}  // namespace haantjes
