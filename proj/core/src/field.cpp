#include "haantjes/field.hpp"
#include "haantjes/error.hpp"
#include <cmath>

namespace haantjes {

double OperatorJet::norm() const
{
    double m = value.cwiseAbs().maxCoeff();
    for(const auto& p : partial)
        m = std::max(m, p.cwiseAbs().maxCoeff());
    return m;
}

ScalarField::ScalarField(std::string name, std::size_t dim, JetFn jet, TermsFn terms)
    : name_(std::move(name)), dim_(dim), jet_(std::move(jet)), terms_(std::move(terms)) {}

ScalarField ScalarField::from_expr(std::string name, Expr e, std::vector<double> params)
{
    if(params.size() != e.parameters().size())
        throw PreconditionError("field '" + name + "': parameter count mismatch");
    auto shared = std::make_shared<const std::pair<Expr, std::vector<double>>>(std::move(e), std::move(params));
    const std::size_t dim = shared->first.variables().size();
    ScalarField f(std::move(name), dim,
        [shared](std::span<const double> x) { return shared->first.eval_jet(x, shared->second); },
        [shared](std::span<const double> x) { return shared->first.eval_terms(x, shared->second); });
    f.value_ = [shared](std::span<const double> x) { return shared->first.eval(x, shared->second); };
    return f;
}

ScalarField ScalarField::constant(double c, std::size_t dim)
{
    ScalarField f("const", dim, [c, dim](std::span<const double>) { return Jet2::constant(c, dim); });
    f.value_ = [c](std::span<const double>) { return c; };
    return f;
}

double ScalarField::value(std::span<const double> x) const
{
    return value_ ? value_(x) : jet_(x).value();
}

std::vector<double> ScalarField::terms(std::span<const double> x) const
{
    if(terms_) return terms_(x);
    return {value(x)};
}

OperatorField::OperatorField(std::string name, std::size_t dim, JetFn jet)
    : name_(std::move(name)), dim_(dim), jet_(std::move(jet)) {}

OperatorField OperatorField::from_entries(std::string name, std::size_t dim, const std::vector<Expr>& entries,
    std::vector<double> params)
{
    if(entries.size() != dim * dim)
        throw PreconditionError("operator '" + name + "': expected " + std::to_string(dim * dim) + " entries");
    struct Data {
        std::vector<Expr> entries;
        std::vector<double> params;
        std::string name;
    };
    auto data = std::make_shared<const Data>(Data{entries, std::move(params), name});
    OperatorField f(std::move(name), dim, [data, dim](std::span<const double> x) {
        if(x.size() != dim) throw PreconditionError("operator '" + data->name + "': wrong point dimension");
        OperatorJet j;
        j.value = Eigen::MatrixXd::Zero(dim, dim);
        j.partial.assign(dim, Eigen::MatrixXd::Zero(dim, dim));
        for(std::size_t r = 0; r < dim; r++)
            for(std::size_t c = 0; c < dim; c++) {
                const Expr& e = data->entries[r * dim + c];
                if(e.empty()) continue;
                Jet2 v;
                try {
                    v = e.eval_jet(x, data->params);
                } catch(const DomainError& err) {
                    throw DomainError("operator '" + data->name + "' entry (" + std::to_string(r + 1) + "," +
                        std::to_string(c + 1) + "): " + err.what());
                }
                j.value(r, c) = v.value();
                for(std::size_t k = 0; k < dim; k++)
                    j.partial[k](r, c) = v.grad(k);
            }
        return j;
    });
    f.value_ = [data, dim](std::span<const double> x) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for(std::size_t r = 0; r < dim; r++)
            for(std::size_t c = 0; c < dim; c++) {
                const Expr& e = data->entries[r * dim + c];
                if(e.empty()) continue;
                try {
                    m(r, c) = e.eval(x, data->params);
                } catch(const DomainError& err) {
                    throw DomainError("operator '" + data->name + "' entry (" + std::to_string(r + 1) + "," +
                        std::to_string(c + 1) + "): " + err.what());
                }
            }
        return m;
    };
    return f;
}

OperatorField OperatorField::constant(std::string name, const Eigen::MatrixXd& m)
{
    const std::size_t dim = static_cast<std::size_t>(m.rows());
    return OperatorField(std::move(name), dim, [m, dim](std::span<const double>) {
        OperatorJet j;
        j.value = m;
        j.partial.assign(dim, Eigen::MatrixXd::Zero(dim, dim));
        return j;
    });
}

OperatorField OperatorField::identity(std::size_t dim)
{
    return constant("I", Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::MatrixXd OperatorField::value(std::span<const double> x) const
{
    return value_ ? value_(x) : jet_(x).value;
}

OperatorField OperatorField::renamed(std::string name) const
{
    OperatorField f = *this;
    f.name_ = std::move(name);
    return f;
}

OperatorJet product(const OperatorJet& a, const OperatorJet& b)
{
    OperatorJet r;
    r.value = a.value * b.value;
    r.partial.resize(a.partial.size());
    for(std::size_t k = 0; k < a.partial.size(); k++)
        r.partial[k] = a.partial[k] * b.value + a.value * b.partial[k];
    return r;
}

OperatorJet inverse(const OperatorJet& a)
{
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a.value);
    if(!lu.isInvertible() || lu.rcond() < 1e-13)
        throw DomainError("operator is singular at this point");
    OperatorJet r;
    r.value = lu.inverse();
    r.partial.resize(a.partial.size());
    for(std::size_t k = 0; k < a.partial.size(); k++)
        r.partial[k] = -r.value * a.partial[k] * r.value;
    return r;
}

OperatorJet combination(std::span<const Jet2> coefs, std::span<const OperatorJet> ops)
{
    if(coefs.size() != ops.size() || ops.empty())
        throw PreconditionError("combination: coefficient and operator counts differ");
    const std::size_t d = ops[0].dim();
    OperatorJet r;
    r.value = Eigen::MatrixXd::Zero(d, d);
    r.partial.assign(d, Eigen::MatrixXd::Zero(d, d));
    for(std::size_t t = 0; t < ops.size(); t++) {
        r.value += coefs[t].value() * ops[t].value;
        for(std::size_t k = 0; k < d; k++)
            r.partial[k] += coefs[t].value() * ops[t].partial[k] + coefs[t].grad(k) * ops[t].value;
    }
    return r;
}

OperatorField product(const OperatorField& a, const OperatorField& b)
{
    if(a.dim() != b.dim()) throw PreconditionError("product: dimension mismatch");
    return OperatorField(a.name() + "*" + b.name(), a.dim(),
        [a, b](std::span<const double> x) { return product(a.jet(x), b.jet(x)); });
}

OperatorField power(const OperatorField& a, unsigned m)
{
    if(m == 0) return OperatorField::identity(a.dim());
    return OperatorField(a.name() + "^" + std::to_string(m), a.dim(), [a, m](std::span<const double> x) {
        const OperatorJet base = a.jet(x);
        OperatorJet r = base;
        for(unsigned i = 1; i < m; i++)
            r = product(r, base);
        return r;
    });
}

OperatorField inverse(const OperatorField& a)
{
    return OperatorField(a.name() + "^-1", a.dim(), [a](std::span<const double> x) { return inverse(a.jet(x)); });
}

OperatorField combination(std::vector<ScalarField> coefs, std::vector<OperatorField> ops, std::string name)
{
    if(coefs.size() != ops.size() || ops.empty())
        throw PreconditionError("combination: coefficient and operator counts differ");
    const std::size_t d = ops[0].dim();
    for(const auto& o : ops)
        if(o.dim() != d) throw PreconditionError("combination: dimension mismatch");
    if(name.empty()) name = "combination";
    return OperatorField(std::move(name), d, [coefs = std::move(coefs), ops = std::move(ops)](std::span<const double> x) {
        std::vector<Jet2> c;
        std::vector<OperatorJet> k;
        c.reserve(ops.size());
        k.reserve(ops.size());
        for(std::size_t t = 0; t < ops.size(); t++) {
            c.push_back(coefs[t].jet(x));
            k.push_back(ops[t].jet(x));
        }
        return combination(c, k);
    });
}

OperatorField affine(const ScalarField& f, const ScalarField& g, const OperatorField& L)
{
    return combination({f, g}, {OperatorField::identity(L.dim()), L}, "fI+g" + L.name());
}

OneFormJet transpose_action(const OperatorJet& K, const Jet2& H)
{
    const std::size_t d = K.dim();
    Eigen::VectorXd dH(d);
    Eigen::MatrixXd hess(d, d);
    for(std::size_t i = 0; i < d; i++) {
        dH(i) = H.grad(i);
        for(std::size_t j = 0; j < d; j++)
            hess(i, j) = H.hess(i, j);
    }
    OneFormJet t;
    t.value = K.value.transpose() * dH;
    t.partial.resize(d, d);
    for(std::size_t k = 0; k < d; k++)
        t.partial.col(k) = K.partial[k].transpose() * dH + K.value.transpose() * hess.col(k);
    return t;
}

OneFormJet gradient_form(const Jet2& H)
{
    const std::size_t d = H.dim();
    OneFormJet t;
    t.value.resize(d);
    t.partial.resize(d, d);
    for(std::size_t i = 0; i < d; i++) {
        t.value(i) = H.grad(i);
        for(std::size_t j = 0; j < d; j++)
            t.partial(i, j) = H.hess(i, j);
    }
    return t;
}

Eigen::MatrixXd exterior_derivative(const OneFormJet& theta)
{
    return theta.partial.transpose() - theta.partial;
}

}  // namespace haantjes
