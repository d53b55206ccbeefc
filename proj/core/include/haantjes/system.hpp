/** \file    system.hpp
    \brief   System definitions (INI-style text) and their binding to parameter values
*/
#pragma once
#include "haantjes/algebra.hpp"
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace haantjes {

/** Text-level definition of a system.

    [meta]            name, dim, params = k1=0.5, k2=1, ..., description
    [constants]       name = expression over params and earlier constants
    [chart.<name>]    vars = q1, q2, p1, p2;  darboux = yes|no;  parent = <chart>;
                      to_ref = parent coordinates as functions of vars, ';'-separated;
                      from_ref = vars as functions of the parent coordinates
    [let.<chart>]     name = expression (macro usable by later expressions in that chart)
    [hamiltonian], [integrals], [functions], [separation]
                      name = expression in the reference chart; [functions.<chart>] for other charts.
                      Every field is also a macro for later expressions of its chart.
    [operator.<name>] chart = <chart>; e_i_j = expression (1-based, omitted entries are 0);
                      or combination = linear combination of I and earlier operators
    [domain]          <reference var> = lo, hi;  guard = <var> <min |value|>
    [manifest]        claim = <claim line>  (repeatable)

    The first chart declared is the reference chart.  Lines starting with # or ; are comments and lines
    starting with whitespace continue the previous value. */
struct SystemDefinition {
    struct ChartDef {
        std::string name;
        std::vector<std::string> vars;
        bool darboux = true;
        std::string parent;
        std::vector<std::string> to_ref, from_ref;
    };
    struct Definition {
        enum Kind { Let, Field } kind = Field;
        std::string name, chart, text, role;
        std::size_t line = 0;
    };
    struct OperatorDef {
        std::string name, chart;
        std::map<std::pair<std::size_t, std::size_t>, std::string> entries;
        std::string combination;
        std::size_t line = 0;
    };

    std::string name, description, source;
    std::size_t dim = 0;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::pair<std::string, std::string>> constants;
    std::vector<ChartDef> charts;
    std::vector<Definition> definitions;   ///< lets and fields in file order
    std::vector<OperatorDef> operators;
    std::map<std::string, Interval> box;
    std::vector<std::pair<std::string, double>> guards;
    std::vector<std::string> claims;

    const std::string& reference() const;
};

SystemDefinition parse_system(std::string_view text, const std::string& source = "<text>");
SystemDefinition load_system_file(const std::string& path);

/** A definition bound to parameter values: parsed expressions, charts, fields and operators. */
class System {
public:
    static System bind(const SystemDefinition& def, const std::map<std::string, double>& overrides = {});

    const SystemDefinition& definition() const { return *def_; }
    const std::string& name() const { return def_->name; }
    const Atlas& atlas() const { return atlas_; }
    const std::vector<std::string>& param_names() const { return pnames_; }
    const std::vector<double>& param_values() const { return pvalues_; }
    double param(const std::string& name) const;

    bool has_field(const std::string& name) const { return fields_.count(name) > 0; }
    bool has_operator(const std::string& name) const { return ops_.count(name) > 0; }
    std::vector<std::string> field_names() const;
    std::vector<std::string> operator_names() const;
    const std::string& field_chart(const std::string& name) const;
    const std::string& operator_chart(const std::string& name) const;

    /// the field in its own chart, or pulled back to `chart`
    ScalarField field(const std::string& name, const std::string& chart = {}) const;
    OperatorField op(const std::string& name, const std::string& chart = {}) const;
    /// entry expressions of an entry-defined operator; nullptr for combinations
    const std::vector<Expr>* op_entries(const std::string& name) const;
    /// parses an expression in a chart with the chart's macros
    Expr parse_in(const std::string& chart, const std::string& text) const;
    /// a linear combination of I and named operators, in the given chart
    OperatorField combination(const std::string& chart, const std::string& text, const std::string& name) const;

    /// reference-chart sampling domain
    SamplingDomain domain(std::uint64_t seed, std::size_t samples) const;
    /// points drawn in the reference chart and mapped to `chart`
    Points sample(const std::string& chart, std::uint64_t seed, std::size_t samples) const;

private:
    struct FieldEntry {
        std::string chart;
        ScalarField field;
    };
    struct OpEntry {
        std::string chart;
        OperatorField field;
        std::optional<std::vector<Expr>> entries;
    };

    std::shared_ptr<const SystemDefinition> def_;
    std::vector<std::string> pnames_;
    std::vector<double> pvalues_;
    Atlas atlas_;
    std::map<std::string, MacroTable> macros_;
    std::map<std::string, FieldEntry> fields_;
    std::map<std::string, OpEntry> ops_;
};

}  // namespace haantjes
