#include "haantjes/chart.hpp"
#include "haantjes/error.hpp"
#include <algorithm>

namespace haantjes {

Transition::Transition(std::string from, std::string to, std::size_t dim_from, std::size_t dim_to,
    std::vector<Stage> stages, std::vector<double> params)
    : from_(std::move(from)), to_(std::move(to)), dim_from_(dim_from), dim_to_(dim_to), stages_(std::move(stages)),
      params_(std::move(params)) {}

std::vector<double> Transition::apply(std::span<const double> x) const
{
    if(x.size() != dim_from_) throw PreconditionError("transition " + from_ + "->" + to_ + ": wrong point dimension");
    std::vector<double> cur(x.begin(), x.end()), next;
    for(const Stage& s : stages_) {
        next.resize(s.components.size());
        for(std::size_t a = 0; a < s.components.size(); a++) next[a] = s.components[a].eval(cur, params_);
        cur.swap(next);
    }
    return cur;
}

std::vector<Jet2> Transition::apply_jet(std::span<const double> x) const
{
    if(x.size() != dim_from_) throw PreconditionError("transition " + from_ + "->" + to_ + ": wrong point dimension");
    std::vector<Jet2> cur(x.size()), next;
    for(std::size_t i = 0; i < x.size(); i++) cur[i] = Jet2::variable(x[i], i, x.size());
    for(const Stage& s : stages_) {
        next.resize(s.components.size());
        for(std::size_t a = 0; a < s.components.size(); a++)
            next[a] = s.components[a].eval_jet(cur, params_, x.size());
        cur.swap(next);
    }
    return cur;
}

Eigen::MatrixXd Transition::jacobian(std::span<const double> x) const
{
    const auto jets = apply_jet(x);
    Eigen::MatrixXd J(jets.size(), x.size());
    for(std::size_t a = 0; a < jets.size(); a++)
        for(std::size_t b = 0; b < x.size(); b++) J(a, b) = jets[a].grad(b);
    return J;
}

void Atlas::add(Chart chart)
{
    if(charts_.count(chart.name)) throw PreconditionError("duplicate chart '" + chart.name + "'");
    for(const auto& v : chart.vars)
        if(std::count(chart.vars.begin(), chart.vars.end(), v) > 1)
            throw PreconditionError("chart '" + chart.name + "': duplicate variable '" + v + "'");
    if(chart.parent.empty()) {
        if(!reference_.empty())
            throw PreconditionError("chart '" + chart.name + "' has no parent but '" + reference_ + "' is the reference");
        reference_ = chart.name;
    } else {
        auto it = charts_.find(chart.parent);
        if(it == charts_.end())
            throw LookupError("chart '" + chart.name + "': unknown parent '" + chart.parent + "'");
        if(chart.to_parent.size() != it->second.dim())
            throw PreconditionError("chart '" + chart.name + "': to_ref needs one component per parent coordinate");
        if(!chart.from_parent.empty() && chart.from_parent.size() != chart.dim())
            throw PreconditionError("chart '" + chart.name + "': from_ref needs one component per coordinate");
    }
    order_.push_back(chart.name);
    charts_.emplace(chart.name, std::move(chart));
}

const Chart& Atlas::chart(const std::string& name) const
{
    auto it = charts_.find(name);
    if(it == charts_.end()) throw LookupError("unknown chart '" + name + "'");
    return it->second;
}

std::vector<std::string> Atlas::names() const { return order_; }

std::vector<std::string> Atlas::path_to_root(const std::string& name) const
{
    std::vector<std::string> path;
    for(std::string c = name; !c.empty(); c = chart(c).parent) path.push_back(c);
    return path;
}

Transition Atlas::transition(const std::string& from, const std::string& to) const
{
    const auto up = path_to_root(from);
    const auto down = path_to_root(to);
    auto lca = std::find_first_of(up.begin(), up.end(), down.begin(), down.end());
    if(lca == up.end()) throw LookupError("charts '" + from + "' and '" + to + "' are not connected");
    std::vector<Transition::Stage> stages;
    for(auto it = up.begin(); it != lca; ++it) stages.push_back({chart(*it).to_parent});
    auto stop = std::find(down.begin(), down.end(), *lca);
    for(auto it = std::make_reverse_iterator(stop); it != down.rend(); ++it) {
        const Chart& c = chart(*it);
        if(c.from_parent.empty())
            throw LookupError("chart '" + c.name + "' has no map from its parent '" + c.parent + "'");
        stages.push_back({c.from_parent});
    }
    return Transition(from, to, chart(from).dim(), chart(to).dim(), std::move(stages), params_);
}

ScalarField pullback(const ScalarField& f, const Transition& phi)
{
    if(f.dim() != phi.dim_to()) throw PreconditionError("pullback of '" + f.name() + "': dimension mismatch");
    if(phi.is_identity()) return f;
    return ScalarField(f.name(), phi.dim_from(),
        [f, phi](std::span<const double> x) {
            const auto inner = phi.apply_jet(x);
            std::vector<double> y(inner.size());
            for(std::size_t a = 0; a < inner.size(); a++) y[a] = inner[a].value();
            return compose(f.jet(y), inner);
        },
        [f, phi](std::span<const double> x) { return f.terms(phi.apply(x)); });
}

OperatorField pullback(const OperatorField& k, const Transition& phi)
{
    if(k.dim() != phi.dim_to() || phi.dim_from() != phi.dim_to())
        throw PreconditionError("pullback of '" + k.name() + "': dimension mismatch");
    if(phi.is_identity()) return k;
    const std::size_t d = k.dim();
    return OperatorField(k.name(), d, [k, phi, d](std::span<const double> x) {
        const auto jets = phi.apply_jet(x);
        std::vector<double> y(d);
        Eigen::MatrixXd J(d, d);
        std::vector<Eigen::MatrixXd> dJ(d, Eigen::MatrixXd(d, d));
        for(std::size_t a = 0; a < d; a++) {
            y[a] = jets[a].value();
            for(std::size_t b = 0; b < d; b++) {
                J(a, b) = jets[a].grad(b);
                for(std::size_t c = 0; c < d; c++) dJ[c](a, b) = jets[a].hess(b, c);
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
        if(!lu.isInvertible() || lu.rcond() < 1e-12)
            throw DomainError("singular Jacobian of " + phi.from() + "->" + phi.to());
        const Eigen::MatrixXd Jinv = lu.inverse();
        const OperatorJet ka = k.jet(y);
        OperatorJet r;
        r.value = Jinv * ka.value * J;
        r.partial.resize(d);
        for(std::size_t c = 0; c < d; c++) {
            Eigen::MatrixXd dka = Eigen::MatrixXd::Zero(d, d);
            for(std::size_t e = 0; e < d; e++) dka += ka.partial[e] * J(e, c);
            r.partial[c] = -Jinv * dJ[c] * r.value + Jinv * dka * J + Jinv * ka.value * dJ[c];
        }
        return r;
    });
}

TorsionValue pullback(const TorsionValue& t, const Eigen::MatrixXd& J)
{
    const std::size_t d = t.dim();
    const Eigen::MatrixXd Jinv = J.inverse();
    TorsionValue out(d);
    for(std::size_t j = 0; j < d; j++)
        for(std::size_t k = j + 1; k < d; k++)
            for(std::size_t i = 0; i < d; i++) {
                double s = 0;
                for(std::size_t a = 0; a < d; a++) {
                    if(Jinv(i, a) == 0) continue;
                    for(std::size_t b = 0; b < d; b++)
                        for(std::size_t c = 0; c < d; c++) s += Jinv(i, a) * t(a, b, c) * J(b, j) * J(c, k);
                }
                out.set(i, j, k, s);
            }
    return out;
}

}  // namespace haantjes
