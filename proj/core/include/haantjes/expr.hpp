/** \file    expr.hpp
    \brief   Scalar expressions over named chart variables and parameters
*/
#pragma once
#include "haantjes/jet.hpp"
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace haantjes {

enum class ExprOp : unsigned char { Constant, Variable, Parameter, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class ExprFn : unsigned char { Sqrt, Cbrt, Sin, Cos, Tan, Exp, Log, Abs, Pow, Atan2 };

/// one node of the postorder arena; children always precede their parent
struct ExprNode {
    ExprOp op = ExprOp::Constant;
    ExprFn fn = ExprFn::Sqrt;
    int a = -1, b = -1;          ///< child indices (b only for binary ops and two-argument calls)
    std::size_t slot = 0;        ///< variable or parameter index
    double value = 0;            ///< constant value
    std::string text;            ///< constant source text, or variable/parameter name
    std::size_t offset = 0;      ///< byte offset in the source text
    bool var_free = true;        ///< subtree has no Variable nodes
};

class Expr;
using MacroTable = std::map<std::string, Expr, std::less<>>;

/** Immutable parsed expression.  Grammar, lowest to highest precedence:
        expr  := term (("+"|"-") term)*
        term  := unary (("*"|"/") unary)*
        unary := "-" unary | power
        power := primary ("^" ("-")* power)?         right-associative
        primary := number | ident | ident "(" expr ("," expr)* ")" | "(" expr ")"
    so -x^2 is -(x^2).  Identifiers resolve, in order, to variables, parameters, macros
    (previously parsed expressions over the same variables, inlined at parse time) and the constant pi.
    Functions: sqrt cbrt sin cos tan exp log abs (one argument), pow atan2 (two arguments).
    x^n with a variable-free integral exponent is an integer power; any other power needs a base > 0.
*/
class Expr {
public:
    Expr() = default;

    static Expr parse(std::string_view text, const std::vector<std::string>& vars,
        const std::vector<std::string>& params = {}, const MacroTable* macros = nullptr);

    double eval(std::span<const double> vars, std::span<const double> params = {}) const;
    /// jet with the variables seeded as independent (d = number of variables)
    Jet2 eval_jet(std::span<const double> vars, std::span<const double> params = {}) const;
    /// jet of the expression composed with the given input jets (all of dimension dim)
    Jet2 eval_jet(std::span<const Jet2> inputs, std::span<const double> params, std::size_t dim) const;
    /// signed values of the top-level additive terms (a single term if the root is not + or -)
    std::vector<double> eval_terms(std::span<const double> vars, std::span<const double> params = {}) const;

    /// fully parenthesized text; reparsing it yields a structurally identical tree
    std::string to_string() const;
    /// as to_string, replacing each variable for which rename returns a value
    std::string to_string(const std::function<std::optional<std::string>(const std::string&)>& rename) const;
    /// prefix form, e.g. (/ (^ p_x 2) 2)
    std::string to_sexpr() const;

    std::set<std::string> free_variables() const;
    bool structurally_equal(const Expr& other) const;
    bool empty() const { return !prog_; }
    std::size_t node_count() const;
    const std::vector<std::string>& variables() const;
    const std::vector<std::string>& parameters() const;
    const std::string& source() const;
    const std::vector<ExprNode>& nodes() const;

private:
    struct Program {
        std::vector<ExprNode> nodes;
        std::vector<std::string> vars, params;
        std::string source;
    };
    explicit Expr(std::shared_ptr<const Program> p) : prog_(std::move(p)) {}
    [[noreturn]] void rethrow(std::size_t node, const std::string& what) const;
    std::string print(int node, const std::function<std::optional<std::string>(const std::string&)>* rename) const;
    std::string sexpr(int node) const;

    std::shared_ptr<const Program> prog_;
    friend class ExprParser;
};

}  // namespace haantjes
