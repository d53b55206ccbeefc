#include "haantjes/system.hpp"
#include "haantjes/error.hpp"
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace haantjes {

namespace {

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while(a < b && std::isspace(static_cast<unsigned char>(s[a]))) a++;
    while(b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) b--;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for(std::size_t i = 0; i <= s.size(); i++)
        if(i == s.size() || s[i] == sep) {
            std::string t = trim(s.substr(start, i - start));
            if(!t.empty()) out.push_back(t);
            start = i + 1;
        }
    return out;
}

double parse_number(const std::string& s, const std::string& what)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if(end == s.c_str() || *end != '\0') throw PreconditionError("invalid number '" + s + "' for " + what);
    return v;
}

struct RawLine {
    std::string section, key, value;
    std::size_t line = 0, offset = 0;
};

std::vector<RawLine> read_ini(std::string_view text, const std::string& source)
{
    std::vector<RawLine> out;
    std::string section;
    std::size_t pos = 0, lineno = 0;
    while(pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if(eol == std::string_view::npos) eol = text.size();
        const std::string_view raw = text.substr(pos, eol - pos);
        const std::size_t offset = pos;
        pos = eol + 1;
        lineno++;
        const std::string line = trim(raw);
        if(line.empty() || line[0] == '#' || line[0] == ';') continue;
        if(!raw.empty() && (raw[0] == ' ' || raw[0] == '\t') && !out.empty() && line[0] != '[') {
            out.back().value += " " + line;
            continue;
        }
        if(line[0] == '[') {
            if(line.back() != ']')
                throw ParseError(source + ":" + std::to_string(lineno) + ": unterminated section header", offset);
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            continue;
        }
        const std::size_t eq = line.find('=');
        if(eq == std::string::npos)
            throw ParseError(source + ":" + std::to_string(lineno) + ": expected key = value", offset);
        if(section.empty())
            throw ParseError(source + ":" + std::to_string(lineno) + ": key outside any section", offset);
        out.push_back({section, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)),
            lineno, offset});
    }
    return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

const std::string& SystemDefinition::reference() const
{
    static const std::string none;
    return charts.empty() ? none : charts.front().name;
}

SystemDefinition parse_system(std::string_view text, const std::string& source)
{
    SystemDefinition def;
    def.source = source;
    auto fail = [&](const RawLine& l, const std::string& msg) -> ParseError {
        return ParseError(source + ":" + std::to_string(l.line) + ": " + msg, l.offset);
    };
    auto chart_def = [&](const std::string& name) -> SystemDefinition::ChartDef& {
        for(auto& c : def.charts)
            if(c.name == name) return c;
        def.charts.push_back({});
        def.charts.back().name = name;
        return def.charts.back();
    };
    auto op_def = [&](const std::string& name, std::size_t line) -> SystemDefinition::OperatorDef& {
        for(auto& o : def.operators)
            if(o.name == name) return o;
        def.operators.push_back({});
        def.operators.back().name = name;
        def.operators.back().line = line;
        return def.operators.back();
    };
    for(const RawLine& l : read_ini(text, source)) {
        try {
            if(l.section == "meta") {
                if(l.key == "name") def.name = l.value;
                else if(l.key == "dim") def.dim = static_cast<std::size_t>(parse_number(l.value, "dim"));
                else if(l.key == "description") def.description = l.value;
                else if(l.key == "params") {
                    for(const std::string& item : split(l.value, ',')) {
                        const auto kv = split(item, '=');
                        if(kv.size() != 2) throw fail(l, "parameter '" + item + "' needs a default value");
                        def.params.emplace_back(kv[0], parse_number(kv[1], kv[0]));
                    }
                } else throw fail(l, "unknown key '" + l.key + "' in [meta]");
            } else if(l.section == "constants") {
                def.constants.emplace_back(l.key, l.value);
            } else if(starts_with(l.section, "chart.")) {
                auto& c = chart_def(l.section.substr(6));
                if(l.key == "vars") c.vars = split(l.value, ',');
                else if(l.key == "darboux") c.darboux = l.value == "yes" || l.value == "true" || l.value == "1";
                else if(l.key == "parent") c.parent = l.value;
                else if(l.key == "to_ref") c.to_ref = split(l.value, ';');
                else if(l.key == "from_ref") c.from_ref = split(l.value, ';');
                else throw fail(l, "unknown key '" + l.key + "' in [" + l.section + "]");
            } else if(starts_with(l.section, "let.")) {
                def.definitions.push_back({SystemDefinition::Definition::Let, l.key, l.section.substr(4), l.value, "let", l.line});
            } else if(l.section == "hamiltonian" || l.section == "integrals" || l.section == "functions" ||
                l.section == "separation") {
                def.definitions.push_back({SystemDefinition::Definition::Field, l.key, "", l.value, l.section, l.line});
            } else if(starts_with(l.section, "functions.")) {
                def.definitions.push_back(
                    {SystemDefinition::Definition::Field, l.key, l.section.substr(10), l.value, "functions", l.line});
            } else if(starts_with(l.section, "operator.")) {
                auto& o = op_def(l.section.substr(9), l.line);
                if(l.key == "chart") o.chart = l.value;
                else if(l.key == "combination") o.combination = l.value;
                else if(starts_with(l.key, "e_")) {
                    const auto ij = split(l.key.substr(2), '_');
                    if(ij.size() != 2) throw fail(l, "entry key must be e_<row>_<col>");
                    const auto i = static_cast<std::size_t>(parse_number(ij[0], l.key));
                    const auto j = static_cast<std::size_t>(parse_number(ij[1], l.key));
                    if(i == 0 || j == 0) throw fail(l, "entry indices are 1-based");
                    o.entries[{i - 1, j - 1}] = l.value;
                } else throw fail(l, "unknown key '" + l.key + "' in [" + l.section + "]");
            } else if(l.section == "domain") {
                if(l.key == "guard") {
                    const auto t = split(l.value, ' ');
                    if(t.size() != 2) throw fail(l, "guard = <var> <min |value|>");
                    def.guards.emplace_back(t[0], parse_number(t[1], "guard"));
                } else {
                    const auto t = split(l.value, ',');
                    if(t.size() != 2) throw fail(l, "interval must be lo, hi");
                    Interval iv{parse_number(t[0], l.key), parse_number(t[1], l.key)};
                    if(!(iv.lo <= iv.hi)) throw fail(l, "empty interval for " + l.key);
                    def.box[l.key] = iv;
                }
            } else if(l.section == "manifest") {
                if(l.key != "claim") throw fail(l, "manifest entries are claim = ...");
                def.claims.push_back(l.value);
            } else {
                throw fail(l, "unknown section [" + l.section + "]");
            }
        } catch(const ParseError&) {
            throw;
        } catch(const Error& e) {
            throw fail(l, e.what());
        }
    }
    if(def.name.empty()) throw ParseError(source + ": [meta] name is required", 0);
    if(def.charts.empty()) throw ParseError(source + ": at least one chart is required", 0);
    if(!def.charts.front().parent.empty())
        throw ParseError(source + ": the first chart is the reference and cannot have a parent", 0);
    if(def.dim == 0) def.dim = def.charts.front().vars.size();
    for(const auto& c : def.charts)
        if(c.vars.size() != def.dim)
            throw ParseError(source + ": chart '" + c.name + "' must have " + std::to_string(def.dim) + " variables", 0);
    for(auto& d : def.definitions)
        if(d.chart.empty()) d.chart = def.reference();
    for(auto& o : def.operators)
        if(o.chart.empty()) o.chart = def.reference();
    return def;
}

SystemDefinition load_system_file(const std::string& path)
{
    std::ifstream in(path);
    if(!in) throw LookupError("cannot open system file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str(), path);
}

double System::param(const std::string& name) const
{
    auto it = std::find(pnames_.begin(), pnames_.end(), name);
    if(it == pnames_.end()) throw LookupError("unknown parameter '" + name + "'");
    return pvalues_[static_cast<std::size_t>(it - pnames_.begin())];
}

System System::bind(const SystemDefinition& def_in, const std::map<std::string, double>& overrides)
{
    System s;
    s.def_ = std::make_shared<const SystemDefinition>(def_in);
    const SystemDefinition& def = *s.def_;
    for(const auto& [k, v] : overrides)
        if(std::none_of(def.params.begin(), def.params.end(), [&](const auto& p) { return p.first == k; }))
            throw LookupError("system '" + def.name + "' has no parameter '" + k + "'");
    for(const auto& [k, v] : def.params) {
        auto it = overrides.find(k);
        s.pnames_.push_back(k);
        s.pvalues_.push_back(it == overrides.end() ? v : it->second);
    }
    for(const auto& [k, text] : def.constants) {
        const Expr e = Expr::parse(text, {}, s.pnames_);
        const double v = e.eval({}, s.pvalues_);
        s.pnames_.push_back(k);
        s.pvalues_.push_back(v);
    }

    std::map<std::string, const SystemDefinition::ChartDef*> cdefs;
    for(const auto& c : def.charts) cdefs[c.name] = &c;
    auto vars_of = [&](const std::string& chart) -> const std::vector<std::string>& {
        auto it = cdefs.find(chart);
        if(it == cdefs.end()) throw LookupError("system '" + def.name + "': unknown chart '" + chart + "'");
        return it->second->vars;
    };
    for(const auto& d : def.definitions) {
        const auto& vars = vars_of(d.chart);
        MacroTable& macros = s.macros_[d.chart];
        Expr e;
        try {
            e = Expr::parse(d.text, vars, s.pnames_, &macros);
        } catch(const ParseError& err) {
            throw ParseError(def.source + ":" + std::to_string(d.line) + ": '" + d.name + "': " + err.what(), err.offset());
        }
        macros[d.name] = e;
        if(d.kind == SystemDefinition::Definition::Field) {
            if(s.fields_.count(d.name)) throw PreconditionError("duplicate field '" + d.name + "'");
            s.fields_[d.name] = {d.chart, ScalarField::from_expr(d.name, e, s.pvalues_)};
        }
    }

    s.atlas_ = Atlas(s.pvalues_);
    for(const auto& c : def.charts) {
        Chart ch;
        ch.name = c.name;
        ch.vars = c.vars;
        ch.darboux = c.darboux;
        ch.parent = c.parent;
        if(!c.parent.empty()) {
            if(c.to_ref.empty()) throw PreconditionError("chart '" + c.name + "' needs to_ref");
            const auto& pvars = vars_of(c.parent);
            try {
                for(const auto& t : c.to_ref) ch.to_parent.push_back(Expr::parse(t, c.vars, s.pnames_, &s.macros_[c.name]));
                for(const auto& t : c.from_ref) ch.from_parent.push_back(Expr::parse(t, pvars, s.pnames_, &s.macros_[c.parent]));
            } catch(const ParseError& err) {
                throw ParseError("chart '" + c.name + "': " + std::string(err.what()), err.offset());
            }
        }
        s.atlas_.add(std::move(ch));
    }

    for(const auto& o : def.operators) {
        if(s.ops_.count(o.name)) throw PreconditionError("duplicate operator '" + o.name + "'");
        const auto& vars = vars_of(o.chart);
        OpEntry entry;
        entry.chart = o.chart;
        if(!o.combination.empty()) {
            if(!o.entries.empty()) throw PreconditionError("operator '" + o.name + "': entries and combination are exclusive");
            entry.field = s.combination(o.chart, o.combination, o.name);
        } else {
            std::vector<Expr> entries(def.dim * def.dim);
            for(const auto& [ij, text] : o.entries) {
                if(ij.first >= def.dim || ij.second >= def.dim)
                    throw PreconditionError("operator '" + o.name + "': entry index out of range");
                try {
                    entries[ij.first * def.dim + ij.second] = Expr::parse(text, vars, s.pnames_, &s.macros_[o.chart]);
                } catch(const ParseError& err) {
                    throw ParseError("operator '" + o.name + "' entry e_" + std::to_string(ij.first + 1) + "_" +
                        std::to_string(ij.second + 1) + ": " + err.what(), err.offset());
                }
            }
            entry.field = OperatorField::from_entries(o.name, def.dim, entries, s.pvalues_);
            entry.entries = std::move(entries);
        }
        s.ops_[o.name] = std::move(entry);
    }
    for(const auto& [k, iv] : def.box) {
        const auto& rv = vars_of(def.reference());
        if(std::find(rv.begin(), rv.end(), k) == rv.end())
            throw PreconditionError("domain variable '" + k + "' is not a reference coordinate");
    }
    return s;
}

std::vector<std::string> System::field_names() const
{
    std::vector<std::string> out;
    for(const auto& d : def_->definitions)
        if(d.kind == SystemDefinition::Definition::Field) out.push_back(d.name);
    return out;
}

std::vector<std::string> System::operator_names() const
{
    std::vector<std::string> out;
    for(const auto& o : def_->operators) out.push_back(o.name);
    return out;
}

const std::string& System::field_chart(const std::string& name) const
{
    auto it = fields_.find(name);
    if(it == fields_.end()) throw LookupError("system '" + def_->name + "' has no field '" + name + "'");
    return it->second.chart;
}

const std::string& System::operator_chart(const std::string& name) const
{
    auto it = ops_.find(name);
    if(it == ops_.end()) throw LookupError("system '" + def_->name + "' has no operator '" + name + "'");
    return it->second.chart;
}

ScalarField System::field(const std::string& name, const std::string& chart) const
{
    const std::string& own = field_chart(name);
    const ScalarField& f = fields_.at(name).field;
    if(chart.empty() || chart == own) return f;
    return pullback(f, atlas_.transition(chart, own));
}

OperatorField System::op(const std::string& name, const std::string& chart) const
{
    if(name == "I") return OperatorField::identity(def_->dim);
    const std::string& own = operator_chart(name);
    const OperatorField& k = ops_.at(name).field;
    if(chart.empty() || chart == own) return k;
    return pullback(k, atlas_.transition(chart, own));
}

const std::vector<Expr>* System::op_entries(const std::string& name) const
{
    operator_chart(name);
    const auto& e = ops_.at(name).entries;
    return e ? &*e : nullptr;
}

Expr System::parse_in(const std::string& chart, const std::string& text) const
{
    const Chart& c = atlas_.chart(chart);
    auto it = macros_.find(chart);
    return Expr::parse(text, c.vars, pnames_, it == macros_.end() ? nullptr : &it->second);
}

OperatorField System::combination(const std::string& chart, const std::string& text, const std::string& name) const
{
    const std::vector<std::string>& cvars = atlas_.chart(chart).vars;
    std::vector<std::string> vars = cvars;
    std::vector<OperatorField> ops;
    std::vector<std::string> names;
    for(const auto& [n, e] : ops_) {
        vars.push_back(n);
        names.push_back(n);
        ops.push_back(e.chart == chart ? e.field : pullback(e.field, atlas_.transition(chart, e.chart)));
    }
    vars.push_back("I");
    names.push_back("I");
    ops.push_back(OperatorField::identity(def_->dim));
    const Expr e = Expr::parse(text, vars, pnames_);
    // keep only the operators that occur
    std::vector<std::size_t> used;
    const auto fv = e.free_variables();
    for(std::size_t k = 0; k < names.size(); k++)
        if(fv.count(names[k])) used.push_back(k);
    if(used.empty()) throw PreconditionError("combination '" + text + "' names no operator");
    const std::size_t d = cvars.size(), nv = vars.size();
    std::vector<ScalarField> coefs;
    std::vector<OperatorField> chosen;
    const std::vector<double> pv = pvalues_;
    for(std::size_t k : used) {
        coefs.emplace_back("coef_" + names[k], d, [e, k, d, nv, pv, text](std::span<const double> x) {
            std::vector<Jet2> in(nv);
            for(std::size_t i = 0; i < d; i++) in[i] = Jet2::variable(x[i], i, d);
            for(std::size_t i = d; i < nv; i++) in[i] = Jet2::constant(0, d);
            const Jet2 base = e.eval_jet(in, pv, d);
            in[d + k] = Jet2::constant(1, d);
            const Jet2 one = e.eval_jet(in, pv, d);
            in[d + k] = Jet2::constant(2, d);
            const Jet2 two = e.eval_jet(in, pv, d);
            const double scale = std::max({1.0, std::fabs(one.value()), std::fabs(two.value())});
            if(std::fabs(base.value()) > 1e-12 * scale || std::fabs(two.value() - 2 * one.value()) > 1e-12 * scale)
                throw DomainError("combination '" + text + "' is not linear in the operators");
            return one - base;
        });
        chosen.push_back(ops[k]);
    }
    return haantjes::combination(std::move(coefs), std::move(chosen), name);
}

SamplingDomain System::domain(std::uint64_t seed, std::size_t samples) const
{
    SamplingDomain dom;
    dom.seed = seed;
    dom.samples = samples;
    const auto& rv = atlas_.chart(atlas_.reference()).vars;
    for(const auto& v : rv) {
        auto it = def_->box.find(v);
        if(it == def_->box.end()) throw PreconditionError("system '" + def_->name + "': no domain interval for '" + v + "'");
        dom.box.push_back(it->second);
    }
    for(const auto& [v, m] : def_->guards) {
        auto it = std::find(rv.begin(), rv.end(), v);
        if(it == rv.end()) throw PreconditionError("guard on unknown variable '" + v + "'");
        dom.guards.push_back({static_cast<std::size_t>(it - rv.begin()), m});
    }
    return dom;
}

Points System::sample(const std::string& chart, std::uint64_t seed, std::size_t samples) const
{
    Points ref = domain(seed, samples).draw();
    if(chart.empty() || chart == atlas_.reference()) return ref;
    const Transition t = atlas_.transition(atlas_.reference(), chart);
    Points out;
    out.reserve(ref.size());
    for(const auto& x : ref) out.push_back(t.apply(x));
    return out;
}

}  // namespace haantjes
