#include "haantjes/expr.hpp"
#include "haantjes/error.hpp"
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>

namespace haantjes {

namespace {

struct FnInfo { const char* name; ExprFn fn; int arity; };
constexpr FnInfo kFunctions[] = {
    {"sqrt", ExprFn::Sqrt, 1}, {"cbrt", ExprFn::Cbrt, 1}, {"sin", ExprFn::Sin, 1}, {"cos", ExprFn::Cos, 1},
    {"tan", ExprFn::Tan, 1}, {"exp", ExprFn::Exp, 1}, {"log", ExprFn::Log, 1}, {"abs", ExprFn::Abs, 1},
    {"pow", ExprFn::Pow, 2}, {"atan2", ExprFn::Atan2, 2}};

const FnInfo* find_function(std::string_view name)
{
    for(const FnInfo& f : kFunctions)
        if(name == f.name) return &f;
    return nullptr;
}

const char* fn_name(ExprFn fn)
{
    for(const FnInfo& f : kFunctions)
        if(f.fn == fn) return f.name;
    return "?";
}

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// an exponent that is an exact integer and does not depend on the variables
bool integral_exponent(double e, bool var_free, long& n)
{
    if(!var_free || !(std::fabs(e) <= 1e9) || e != std::nearbyint(e)) return false;
    n = static_cast<long>(e);
    return true;
}

double power_value(double base, double e, bool var_free)
{
    long n;
    if(integral_exponent(e, var_free, n)) {
        if(n < 0 && base == 0) throw DomainError("negative integer power of 0");
        return ipow(base, n);
    }
    if(!(base > 0))
        throw DomainError("non-integer power of a base " + std::to_string(base) + " that is not > 0");
    return std::exp(e * std::log(base));
}

double call_value(ExprFn fn, double x, double y)
{
    switch(fn) {
        case ExprFn::Sqrt:
            if(x < 0) throw DomainError("sqrt argument " + std::to_string(x) + " is < 0");
            return std::sqrt(x);
        case ExprFn::Cbrt: return std::cbrt(x);
        case ExprFn::Sin: return std::sin(x);
        case ExprFn::Cos: return std::cos(x);
        case ExprFn::Tan:
            if(std::cos(x) == 0) throw DomainError("tan argument at a pole");
            return std::tan(x);
        case ExprFn::Exp: return std::exp(x);
        case ExprFn::Log:
            if(!(x > 0)) throw DomainError("log argument " + std::to_string(x) + " is not > 0");
            return std::log(x);
        case ExprFn::Abs: return std::fabs(x);
        case ExprFn::Atan2:
            if(x == 0 && y == 0) throw DomainError("atan2 at the origin");
            return std::atan2(x, y);
        case ExprFn::Pow: break;
    }
    throw DomainError("unsupported function");
}

Jet2 call_jet(ExprFn fn, const Jet2& x)
{
    switch(fn) {
        case ExprFn::Sqrt: return sqrt(x);
        case ExprFn::Cbrt: return cbrt(x);
        case ExprFn::Sin: return sin(x);
        case ExprFn::Cos: return cos(x);
        case ExprFn::Tan: return tan(x);
        case ExprFn::Exp: return exp(x);
        case ExprFn::Log: return log(x);
        case ExprFn::Abs: return abs(x);
        default: break;
    }
    throw DomainError("unsupported function");
}

Jet2 power_jet(const Jet2& base, const Jet2& e, bool var_free)
{
    long n;
    if(integral_exponent(e.value(), var_free, n))
        return pow(base, n);
    return pow(base, e);
}

thread_local std::vector<double> tl_values;
thread_local std::vector<Jet2> tl_jets;

}  // namespace

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& vars, const std::vector<std::string>& params,
        const MacroTable* macros)
        : text_(text), vars_(vars), params_(params), macros_(macros) {}

    std::vector<ExprNode> run()
    {
        skip_ws();
        if(pos_ == text_.size())
            throw ParseError("syntax error: empty expression", 0);
        parse_expr();
        skip_ws();
        if(pos_ != text_.size())
            throw ParseError(std::string("syntax error: unexpected '") + text_[pos_] + "'", pos_);
        return std::move(nodes_);
    }

private:
    void skip_ws()
    {
        while(pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
            pos_++;
    }
    char peek() { skip_ws(); return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void unexpected()
    {
        skip_ws();
        if(pos_ >= text_.size())
            throw ParseError("syntax error: unexpected end of input", pos_);
        throw ParseError(std::string("syntax error: unexpected '") + text_[pos_] + "'", pos_);
    }

    int add(ExprNode n)
    {
        n.var_free = n.op != ExprOp::Variable;
        if(n.a >= 0) n.var_free = n.var_free && nodes_[n.a].var_free;
        if(n.b >= 0) n.var_free = n.var_free && nodes_[n.b].var_free;
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int binary(ExprOp op, int a, int b, std::size_t offset)
    {
        ExprNode n;
        n.op = op; n.a = a; n.b = b; n.offset = offset;
        return add(std::move(n));
    }

    int parse_expr()
    {
        int lhs = parse_term();
        for(char c = peek(); c == '+' || c == '-'; c = peek()) {
            std::size_t at = pos_++;
            int rhs = parse_term();
            lhs = binary(c == '+' ? ExprOp::Add : ExprOp::Sub, lhs, rhs, at);
        }
        return lhs;
    }

    int parse_term()
    {
        int lhs = parse_unary();
        for(char c = peek(); c == '*' || c == '/'; c = peek()) {
            std::size_t at = pos_++;
            int rhs = parse_unary();
            lhs = binary(c == '*' ? ExprOp::Mul : ExprOp::Div, lhs, rhs, at);
        }
        return lhs;
    }

    int parse_unary()
    {
        if(peek() == '-') {
            std::size_t at = pos_++;
            ExprNode n;
            n.op = ExprOp::Neg; n.a = parse_unary(); n.offset = at;
            return add(std::move(n));
        }
        return parse_power();
    }

    int parse_exponent()
    {
        if(peek() == '-') {
            std::size_t at = pos_++;
            ExprNode n;
            n.op = ExprOp::Neg; n.a = parse_exponent(); n.offset = at;
            return add(std::move(n));
        }
        return parse_power();
    }

    int parse_power()
    {
        int base = parse_primary();
        if(peek() == '^') {
            std::size_t at = pos_++;
            int e = parse_exponent();
            return binary(ExprOp::Pow, base, e, at);
        }
        return base;
    }

    int parse_number()
    {
        std::size_t start = pos_;
        while(pos_ < text_.size() && is_digit(text_[pos_])) pos_++;
        if(pos_ < text_.size() && text_[pos_] == '.') {
            pos_++;
            while(pos_ < text_.size() && is_digit(text_[pos_])) pos_++;
        }
        if(pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if(pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) pos_++;
            if(pos_ < text_.size() && is_digit(text_[pos_])) {
                while(pos_ < text_.size() && is_digit(text_[pos_])) pos_++;
            } else {
                pos_ = save;
            }
        }
        std::string_view tok = text_.substr(start, pos_ - start);
        if(tok == ".")
            throw ParseError("syntax error: malformed number", start);
        ExprNode n;
        n.op = ExprOp::Constant;
        n.text = std::string(tok);
        n.offset = start;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), n.value);
        if(res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw ParseError("syntax error: malformed number", start);
        return add(std::move(n));
    }

    int inline_macro(const Expr& m, std::size_t at)
    {
        if(m.variables() != vars_ || m.parameters() != params_)
            throw ParseError("macro defined over different variables or parameters", at);
        const int base = static_cast<int>(nodes_.size());
        for(ExprNode n : m.nodes()) {
            if(n.a >= 0) n.a += base;
            if(n.b >= 0) n.b += base;
            n.offset = at;
            nodes_.push_back(std::move(n));
        }
        return static_cast<int>(nodes_.size()) - 1;
    }

    int parse_primary()
    {
        char c = peek();
        std::size_t at = pos_;
        if(is_digit(c) || c == '.')
            return parse_number();
        if(c == '(') {
            pos_++;
            int e = parse_expr();
            if(peek() != ')') unexpected();
            pos_++;
            return e;
        }
        if(!is_ident_start(c))
            unexpected();
        while(pos_ < text_.size() && is_ident_char(text_[pos_])) pos_++;
        std::string name(text_.substr(at, pos_ - at));
        if(peek() == '(') {
            const FnInfo* f = find_function(name);
            if(!f)
                throw ParseError("unknown function '" + name + "'", at);
            pos_++;
            std::vector<int> args;
            if(peek() != ')') {
                args.push_back(parse_expr());
                while(peek() == ',') {
                    pos_++;
                    args.push_back(parse_expr());
                }
            }
            if(peek() != ')') unexpected();
            pos_++;
            if(static_cast<int>(args.size()) != f->arity)
                throw ParseError("arity mismatch: " + name + " takes " + std::to_string(f->arity) +
                    " argument(s), got " + std::to_string(args.size()), at);
            ExprNode n;
            n.op = f->fn == ExprFn::Pow ? ExprOp::Pow : ExprOp::Call;
            n.fn = f->fn;
            n.a = args[0];
            n.b = args.size() > 1 ? args[1] : -1;
            n.offset = at;
            n.text = name;
            return add(std::move(n));
        }
        auto slot_of = [&](const std::vector<std::string>& names) -> int {
            auto it = std::find(names.begin(), names.end(), name);
            return it == names.end() ? -1 : static_cast<int>(it - names.begin());
        };
        ExprNode n;
        n.offset = at;
        n.text = name;
        if(int s = slot_of(vars_); s >= 0) {
            n.op = ExprOp::Variable; n.slot = static_cast<std::size_t>(s);
            return add(std::move(n));
        }
        if(int s = slot_of(params_); s >= 0) {
            n.op = ExprOp::Parameter; n.slot = static_cast<std::size_t>(s);
            return add(std::move(n));
        }
        if(macros_) {
            auto it = macros_->find(name);
            if(it != macros_->end())
                return inline_macro(it->second, at);
        }
        if(name == "pi") {
            n.op = ExprOp::Constant; n.value = 3.14159265358979323846;
            return add(std::move(n));
        }
        throw ParseError("unknown identifier '" + name + "'", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    const std::vector<std::string>& params_;
    const MacroTable* macros_;
    std::vector<ExprNode> nodes_;
};

Expr Expr::parse(std::string_view text, const std::vector<std::string>& vars, const std::vector<std::string>& params,
    const MacroTable* macros)
{
    for(const std::string& v : vars) {
        if(std::count(vars.begin(), vars.end(), v) > 1)
            throw PreconditionError("duplicate variable name '" + v + "'");
        if(std::find(params.begin(), params.end(), v) != params.end())
            throw PreconditionError("name '" + v + "' is both a variable and a parameter");
    }
    auto prog = std::make_shared<Program>();
    prog->vars = vars;
    prog->params = params;
    prog->source = std::string(text);
    ExprParser parser(prog->source, prog->vars, prog->params, macros);
    prog->nodes = parser.run();
    return Expr(std::move(prog));
}

std::size_t Expr::node_count() const { return prog_ ? prog_->nodes.size() : 0; }

const std::vector<std::string>& Expr::variables() const
{
    static const std::vector<std::string> none;
    return prog_ ? prog_->vars : none;
}

const std::vector<std::string>& Expr::parameters() const
{
    static const std::vector<std::string> none;
    return prog_ ? prog_->params : none;
}

const std::string& Expr::source() const
{
    static const std::string none;
    return prog_ ? prog_->source : none;
}

const std::vector<ExprNode>& Expr::nodes() const
{
    static const std::vector<ExprNode> none;
    return prog_ ? prog_->nodes : none;
}

void Expr::rethrow(std::size_t node, const std::string& what) const
{
    const ExprNode& n = prog_->nodes[node];
    throw DomainError(what + " in node '" + print(static_cast<int>(node), nullptr) + "' at offset " +
        std::to_string(n.offset) + " of '" + prog_->source + "'");
}

double Expr::eval(std::span<const double> vars, std::span<const double> params) const
{
    if(!prog_) throw PreconditionError("evaluation of an empty expression");
    if(vars.size() != prog_->vars.size() || params.size() != prog_->params.size())
        throw PreconditionError("expression '" + prog_->source + "': wrong number of variable or parameter values");
    const auto& nodes = prog_->nodes;
    std::vector<double>& v = tl_values;
    v.resize(nodes.size());
    for(std::size_t i = 0; i < nodes.size(); i++) {
        const ExprNode& n = nodes[i];
        double r = 0;
        try {
            switch(n.op) {
                case ExprOp::Constant: r = n.value; break;
                case ExprOp::Variable: r = vars[n.slot]; break;
                case ExprOp::Parameter: r = params[n.slot]; break;
                case ExprOp::Neg: r = -v[n.a]; break;
                case ExprOp::Add: r = v[n.a] + v[n.b]; break;
                case ExprOp::Sub: r = v[n.a] - v[n.b]; break;
                case ExprOp::Mul: r = v[n.a] * v[n.b]; break;
                case ExprOp::Div:
                    if(v[n.b] == 0) throw DomainError("division by zero");
                    r = v[n.a] / v[n.b];
                    break;
                case ExprOp::Pow: r = power_value(v[n.a], v[n.b], nodes[n.b].var_free); break;
                case ExprOp::Call: r = call_value(n.fn, v[n.a], n.b >= 0 ? v[n.b] : 0.0); break;
            }
        } catch(const DomainError& e) {
            rethrow(i, e.what());
        }
        if(!std::isfinite(r))
            rethrow(i, "nonfinite intermediate");
        v[i] = r;
    }
    return v.back();
}

Jet2 Expr::eval_jet(std::span<const double> vars, std::span<const double> params) const
{
    if(!prog_) throw PreconditionError("evaluation of an empty expression");
    const std::size_t d = vars.size();
    std::vector<Jet2> seeds(d);
    for(std::size_t i = 0; i < d; i++)
        seeds[i] = Jet2::variable(vars[i], i, d);
    return eval_jet(seeds, params, d);
}

Jet2 Expr::eval_jet(std::span<const Jet2> inputs, std::span<const double> params, std::size_t dim) const
{
    if(!prog_) throw PreconditionError("evaluation of an empty expression");
    if(inputs.size() != prog_->vars.size() || params.size() != prog_->params.size())
        throw PreconditionError("expression '" + prog_->source + "': wrong number of variable or parameter values");
    const auto& nodes = prog_->nodes;
    std::vector<Jet2>& v = tl_jets;
    v.resize(nodes.size());
    for(std::size_t i = 0; i < nodes.size(); i++) {
        const ExprNode& n = nodes[i];
        try {
            switch(n.op) {
                case ExprOp::Constant: v[i] = Jet2::constant(n.value, dim); break;
                case ExprOp::Variable: v[i] = inputs[n.slot]; break;
                case ExprOp::Parameter: v[i] = Jet2::constant(params[n.slot], dim); break;
                case ExprOp::Neg: v[i] = -v[n.a]; break;
                case ExprOp::Add: v[i] = v[n.a] + v[n.b]; break;
                case ExprOp::Sub: v[i] = v[n.a] - v[n.b]; break;
                case ExprOp::Mul: v[i] = v[n.a] * v[n.b]; break;
                case ExprOp::Div: v[i] = v[n.a] / v[n.b]; break;
                case ExprOp::Pow: v[i] = power_jet(v[n.a], v[n.b], nodes[n.b].var_free); break;
                case ExprOp::Call:
                    v[i] = n.fn == ExprFn::Atan2 ? atan2(v[n.a], v[n.b]) : call_jet(n.fn, v[n.a]);
                    break;
            }
        } catch(const DomainError& e) {
            rethrow(i, e.what());
        }
        if(!std::isfinite(v[i].value()))
            rethrow(i, "nonfinite intermediate");
    }
    if(!v.back().is_finite())
        rethrow(nodes.size() - 1, "nonfinite derivative");
    return v.back();
}

std::vector<double> Expr::eval_terms(std::span<const double> vars, std::span<const double> params) const
{
    eval(vars, params);
    const std::vector<double> values = tl_values;
    const auto& nodes = prog_->nodes;
    std::vector<double> terms;
    std::vector<std::pair<int, double>> stack{{static_cast<int>(nodes.size()) - 1, 1.0}};
    while(!stack.empty()) {
        auto [i, sign] = stack.back();
        stack.pop_back();
        const ExprNode& n = nodes[i];
        if(n.op == ExprOp::Add || n.op == ExprOp::Sub) {
            stack.push_back({n.b, n.op == ExprOp::Add ? sign : -sign});
            stack.push_back({n.a, sign});
        } else if(n.op == ExprOp::Neg) {
            stack.push_back({n.a, -sign});
        } else {
            terms.push_back(sign * values[i]);
        }
    }
    return terms;
}

std::string Expr::print(int i, const std::function<std::optional<std::string>(const std::string&)>* rename) const
{
    const ExprNode& n = prog_->nodes[i];
    switch(n.op) {
        case ExprOp::Constant: return n.text;
        case ExprOp::Variable:
            if(rename) {
                if(auto r = (*rename)(n.text)) return *r;
            }
            return n.text;
        case ExprOp::Parameter: return n.text;
        case ExprOp::Neg: return "(-" + print(n.a, rename) + ")";
        case ExprOp::Add: return "(" + print(n.a, rename) + "+" + print(n.b, rename) + ")";
        case ExprOp::Sub: return "(" + print(n.a, rename) + "-" + print(n.b, rename) + ")";
        case ExprOp::Mul: return "(" + print(n.a, rename) + "*" + print(n.b, rename) + ")";
        case ExprOp::Div: return "(" + print(n.a, rename) + "/" + print(n.b, rename) + ")";
        case ExprOp::Pow:
            if(n.fn == ExprFn::Pow && n.text == "pow")
                return "pow(" + print(n.a, rename) + "," + print(n.b, rename) + ")";
            return "(" + print(n.a, rename) + "^" + print(n.b, rename) + ")";
        case ExprOp::Call:
            if(n.b >= 0)
                return std::string(fn_name(n.fn)) + "(" + print(n.a, rename) + "," + print(n.b, rename) + ")";
            return std::string(fn_name(n.fn)) + "(" + print(n.a, rename) + ")";
    }
    return "";
}

std::string Expr::to_string() const
{
    return prog_ ? print(static_cast<int>(prog_->nodes.size()) - 1, nullptr) : std::string();
}

std::string Expr::to_string(const std::function<std::optional<std::string>(const std::string&)>& rename) const
{
    return prog_ ? print(static_cast<int>(prog_->nodes.size()) - 1, &rename) : std::string();
}

std::string Expr::sexpr(int i) const
{
    const ExprNode& n = prog_->nodes[i];
    switch(n.op) {
        case ExprOp::Constant:
        case ExprOp::Variable:
        case ExprOp::Parameter: return n.text;
        case ExprOp::Neg: return "(neg " + sexpr(n.a) + ")";
        case ExprOp::Add: return "(+ " + sexpr(n.a) + " " + sexpr(n.b) + ")";
        case ExprOp::Sub: return "(- " + sexpr(n.a) + " " + sexpr(n.b) + ")";
        case ExprOp::Mul: return "(* " + sexpr(n.a) + " " + sexpr(n.b) + ")";
        case ExprOp::Div: return "(/ " + sexpr(n.a) + " " + sexpr(n.b) + ")";
        case ExprOp::Pow: return "(^ " + sexpr(n.a) + " " + sexpr(n.b) + ")";
        case ExprOp::Call:
            if(n.b >= 0)
                return "(" + std::string(fn_name(n.fn)) + " " + sexpr(n.a) + " " + sexpr(n.b) + ")";
            return "(" + std::string(fn_name(n.fn)) + " " + sexpr(n.a) + ")";
    }
    return "";
}

std::string Expr::to_sexpr() const
{
    return prog_ ? sexpr(static_cast<int>(prog_->nodes.size()) - 1) : std::string();
}

std::set<std::string> Expr::free_variables() const
{
    std::set<std::string> out;
    if(!prog_) return out;
    for(const ExprNode& n : prog_->nodes)
        if(n.op == ExprOp::Variable || n.op == ExprOp::Parameter)
            out.insert(n.text);
    return out;
}

bool Expr::structurally_equal(const Expr& other) const
{
    if(!prog_ || !other.prog_) return !prog_ && !other.prog_;
    const auto& a = prog_->nodes;
    const auto& b = other.prog_->nodes;
    if(a.size() != b.size()) return false;
    for(std::size_t i = 0; i < a.size(); i++) {
        const ExprNode &x = a[i], &y = b[i];
        if(x.op != y.op || x.a != y.a || x.b != y.b) return false;
        if(x.op == ExprOp::Call && x.fn != y.fn) return false;
        if(x.op == ExprOp::Constant && std::memcmp(&x.value, &y.value, sizeof(double)) != 0) return false;
        if((x.op == ExprOp::Variable || x.op == ExprOp::Parameter) && x.text != y.text) return false;
    }
    return true;
}

}  // namespace haantjes
