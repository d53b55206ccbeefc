/** \file    chart.hpp
    \brief   Charts arranged in a tree below a reference chart, transition maps and pullbacks of fields
*/
#pragma once
#include "haantjes/field.hpp"
#include "haantjes/torsion.hpp"
#include <map>
#include <string>
#include <vector>

namespace haantjes {

/** A chart with ordered coordinates.  Every chart except the root of the tree carries explicit maps to and
    from its parent chart, one Expr per parent (resp. own) coordinate. */
struct Chart {
    std::string name;
    std::vector<std::string> vars;
    bool darboux = true;
    std::string parent;              ///< empty for the reference chart
    std::vector<Expr> to_parent;     ///< parent coordinates as functions of own vars
    std::vector<Expr> from_parent;   ///< own coordinates as functions of parent vars

    std::size_t dim() const { return vars.size(); }
};

/// composed map x_to = Phi(x_from); each stage maps the coordinates of one chart to the next
class Transition {
public:
    struct Stage {
        std::vector<Expr> components;
    };

    Transition() = default;
    Transition(std::string from, std::string to, std::size_t dim_from, std::size_t dim_to, std::vector<Stage> stages,
        std::vector<double> params);

    std::vector<double> apply(std::span<const double> x) const;
    /// jets of the target coordinates with respect to the source coordinates
    std::vector<Jet2> apply_jet(std::span<const double> x) const;
    /// J(a,b) = d x_to^a / d x_from^b
    Eigen::MatrixXd jacobian(std::span<const double> x) const;

    const std::string& from() const { return from_; }
    const std::string& to() const { return to_; }
    std::size_t dim_from() const { return dim_from_; }
    std::size_t dim_to() const { return dim_to_; }
    bool is_identity() const { return stages_.empty(); }

private:
    std::string from_, to_;
    std::size_t dim_from_ = 0, dim_to_ = 0;
    std::vector<Stage> stages_;
    std::vector<double> params_;
};

/** Charts of one system.  params are the values of the parameter names used by all chart Exprs. */
class Atlas {
public:
    Atlas() = default;
    explicit Atlas(std::vector<double> params) : params_(std::move(params)) {}

    /// the first chart added without a parent becomes the reference
    void add(Chart chart);
    const Chart& chart(const std::string& name) const;
    bool has(const std::string& name) const { return charts_.count(name) > 0; }
    const std::string& reference() const { return reference_; }
    std::vector<std::string> names() const;

    /// map from chart `from` to chart `to`, composed along the tree path through the lowest common ancestor
    Transition transition(const std::string& from, const std::string& to) const;

private:
    std::vector<std::string> path_to_root(const std::string& name) const;

    std::map<std::string, Chart> charts_;
    std::vector<std::string> order_;
    std::string reference_;
    std::vector<double> params_;
};

/// F_B(x_B) = F_A(Phi(x_B)) for a transition B -> A
ScalarField pullback(const ScalarField& f, const Transition& b_to_a);
/// K_B = J^-1 K_A(Phi(x_B)) J with J = dPhi; partials include the second derivatives of Phi
OperatorField pullback(const OperatorField& k, const Transition& b_to_a);
/// transforms the (1,2) tensor T_A given at Phi(x_B): T_B^i_jk = (J^-1)^i_a T_A^a_bc J^b_j J^c_k
TorsionValue pullback(const TorsionValue& t, const Eigen::MatrixXd& jacobian);

}  // namespace haantjes
