/** \file    field.hpp
    \brief   Scalar fields, (1,1) operator fields and 1-forms, evaluable with first (and for scalars second) partials
*/
#pragma once
#include "haantjes/expr.hpp"
#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace haantjes {

/// operator value and its partials; partial[k](i,j) = d_k L^i_j
struct OperatorJet {
    Eigen::MatrixXd value;
    std::vector<Eigen::MatrixXd> partial;

    std::size_t dim() const { return static_cast<std::size_t>(value.rows()); }
    /// max over |entries| and |first partials|
    double norm() const;
};

/// 1-form value and its partials; partial(j,k) = d_k theta_j
struct OneFormJet {
    Eigen::VectorXd value;
    Eigen::MatrixXd partial;
};

/** A scalar on a chart, as a function from points to jets.  Expression-based fields also expose their
    top-level additive terms, used to scale residuals of quantities that should cancel. */
class ScalarField {
public:
    using JetFn = std::function<Jet2(std::span<const double>)>;
    using TermsFn = std::function<std::vector<double>(std::span<const double>)>;

    ScalarField() = default;
    ScalarField(std::string name, std::size_t dim, JetFn jet, TermsFn terms = {});
    /// params are the values for e.parameters(), in order
    static ScalarField from_expr(std::string name, Expr e, std::vector<double> params);
    static ScalarField constant(double c, std::size_t dim);

    Jet2 jet(std::span<const double> x) const { return jet_(x); }
    double value(std::span<const double> x) const;
    std::vector<double> terms(std::span<const double> x) const;

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    bool valid() const { return static_cast<bool>(jet_); }

private:
    std::string name_;
    std::size_t dim_ = 0;
    JetFn jet_;
    TermsFn terms_;
    std::function<double(std::span<const double>)> value_;
};

/// a (1,1) tensor field: d*d grid of functions of d coordinates
class OperatorField {
public:
    using JetFn = std::function<OperatorJet(std::span<const double>)>;

    OperatorField() = default;
    OperatorField(std::string name, std::size_t dim, JetFn jet);
    /// row-major entries; empty Exprs are identically zero
    static OperatorField from_entries(std::string name, std::size_t dim, const std::vector<Expr>& entries,
        std::vector<double> params);
    static OperatorField identity(std::size_t dim);
    /// constant matrix
    static OperatorField constant(std::string name, const Eigen::MatrixXd& m);

    OperatorJet jet(std::span<const double> x) const { return jet_(x); }
    Eigen::MatrixXd value(std::span<const double> x) const;

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    bool valid() const { return static_cast<bool>(jet_); }
    OperatorField renamed(std::string name) const;

private:
    std::string name_;
    std::size_t dim_ = 0;
    JetFn jet_;
    std::function<Eigen::MatrixXd(std::span<const double>)> value_;
};

OperatorJet product(const OperatorJet& a, const OperatorJet& b);
OperatorJet inverse(const OperatorJet& a);
/// sum_k c_k K_k with scalar jets (only values and gradients of c_k are used)
OperatorJet combination(std::span<const Jet2> coefs, std::span<const OperatorJet> ops);

OperatorField product(const OperatorField& a, const OperatorField& b);
OperatorField power(const OperatorField& a, unsigned m);
/// pointwise inverse; singular points raise DomainError
OperatorField inverse(const OperatorField& a);
/// sum_k c_k K_k
OperatorField combination(std::vector<ScalarField> coefs, std::vector<OperatorField> ops, std::string name = {});
/// f I + g L
OperatorField affine(const ScalarField& f, const ScalarField& g, const OperatorField& L);

/// theta = K^T dH, i.e. theta_j = sum_i K^i_j d_i H
OneFormJet transpose_action(const OperatorJet& K, const Jet2& H);
/// dH as a 1-form jet
OneFormJet gradient_form(const Jet2& H);
/// (d theta)_ij = d_i theta_j - d_j theta_i
Eigen::MatrixXd exterior_derivative(const OneFormJet& theta);

}  // namespace haantjes
