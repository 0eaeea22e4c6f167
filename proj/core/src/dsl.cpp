#include "gkdv/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "gkdv/errors.hpp"

namespace gkdv::dsl {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    double number = 0.0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        current_.offset = pos_;
        if (pos_ >= src_.size()) {
            current_.kind = Tok::end;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::plus; ++pos_; return;
            case '-': current_.kind = Tok::minus; ++pos_; return;
            case '*': current_.kind = Tok::star; ++pos_; return;
            case '/': current_.kind = Tok::slash; ++pos_; return;
            case '^': current_.kind = Tok::caret; ++pos_; return;
            case '(': current_.kind = Tok::lparen; ++pos_; return;
            case ')': current_.kind = Tok::rparen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.data() + pos_;
            const char* end = src_.data() + src_.size();
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{})
                throw ParseError(pos_, "number", "malformed number at offset " + std::to_string(pos_));
            current_.kind = Tok::number;
            current_.number = value;
            pos_ += static_cast<std::size_t>(ptr - begin);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::ident;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        throw ParseError(pos_, "operator, number, identifier or parenthesis",
                         std::string("unexpected character '") + c + "' at offset " +
                             std::to_string(pos_));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser.
// Precedence: pow > unary minus > mul/div > add/sub; pow is right-associative.
// ---------------------------------------------------------------------------

Node make_node(NodeKind kind) {
    Node n;
    n.kind = kind;
    return n;
}

constexpr std::array<std::pair<const char*, Fn>, 7> kFunctions = {{
    {"sqrt", Fn::sqrt},
    {"tanh", Fn::tanh},
    {"cosh", Fn::cosh},
    {"sinh", Fn::sinh},
    {"coth", Fn::coth},
    {"exp", Fn::exp},
    {"abs", Fn::abs},
}};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Node parse_expression() {
        Node lhs = parse_term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            const Tok op = lex_.take().kind;
            Node rhs = parse_term();
            Node parent = make_node(op == Tok::plus ? NodeKind::add : NodeKind::sub);
            parent.children.push_back(std::move(lhs));
            parent.children.push_back(std::move(rhs));
            lhs = std::move(parent);
        }
        return lhs;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::end)
            throw ParseError(lex_.peek().offset, "end of input or operator",
                             "trailing input at offset " + std::to_string(lex_.peek().offset));
    }

private:
    Node parse_term() {
        Node lhs = parse_unary();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            const Tok op = lex_.take().kind;
            Node rhs = parse_unary();
            Node parent = make_node(op == Tok::star ? NodeKind::mul : NodeKind::div);
            parent.children.push_back(std::move(lhs));
            parent.children.push_back(std::move(rhs));
            lhs = std::move(parent);
        }
        return lhs;
    }

    Node parse_unary() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            Node child = parse_unary();
            Node parent = make_node(NodeKind::neg);
            parent.children.push_back(std::move(child));
            return parent;
        }
        return parse_power();
    }

    Node parse_power() {
        Node base = parse_atom();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            // Right-associative; the exponent may carry a unary minus.
            Node exponent = parse_power_rhs();
            Node parent = make_node(NodeKind::pow);
            parent.children.push_back(std::move(base));
            parent.children.push_back(std::move(exponent));
            return parent;
        }
        return base;
    }

    Node parse_power_rhs() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            Node child = parse_power_rhs();
            Node parent = make_node(NodeKind::neg);
            parent.children.push_back(std::move(child));
            return parent;
        }
        return parse_power();
    }

    Node parse_atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                lex_.take();
                Node n = make_node(NodeKind::constant);
                n.value = t.number;
                return n;
            }
            case Tok::ident: {
                lex_.take();
                if (lex_.peek().kind == Tok::lparen) {
                    lex_.take();
                    Fn fn;
                    if (!lookup_function(t.text, fn))
                        throw UnknownFunction("unknown function '" + t.text + "' at offset " +
                                              std::to_string(t.offset));
                    Node arg = parse_expression();
                    if (lex_.peek().kind != Tok::rparen)
                        throw ParseError(lex_.peek().offset, "')'",
                                         "expected ')' at offset " +
                                             std::to_string(lex_.peek().offset));
                    lex_.take();
                    Node call = make_node(NodeKind::call);
                    call.fn = fn;
                    call.children.push_back(std::move(arg));
                    return call;
                }
                if (t.text == "xi") return make_node(NodeKind::variable);
                Node p = make_node(NodeKind::parameter);
                p.name = t.text;
                return p;
            }
            case Tok::lparen: {
                lex_.take();
                Node inner = parse_expression();
                if (lex_.peek().kind != Tok::rparen)
                    throw ParseError(lex_.peek().offset, "')'",
                                     "expected ')' at offset " + std::to_string(lex_.peek().offset));
                lex_.take();
                return inner;
            }
            default:
                throw ParseError(t.offset, "number, identifier, function call, '(' or unary '-'",
                                 "expected an operand at offset " + std::to_string(t.offset));
        }
    }

    static bool lookup_function(const std::string& name, Fn& out) {
        for (const auto& [fname, fn] : kFunctions) {
            if (name == fname) {
                out = fn;
                return true;
            }
        }
        return false;
    }

    Lexer lex_;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

// Raised when a per-node singularity looks removable (0/0, coth at 0, sqrt
// jet at 0); the caller retries with one-sided Richardson extrapolation.
struct RemovableSingularity {};

constexpr double kZeroTol = 1.0e-14;

Jet2 eval_direct(const Node& n, const ParamMap& params, double xi) {
    switch (n.kind) {
        case NodeKind::constant: return jet_const(n.value);
        case NodeKind::variable: return jet_var(xi);
        case NodeKind::parameter: {
            auto it = params.find(n.name);
            if (it == params.end()) throw UnknownParameter("unbound parameter '" + n.name + "'");
            return jet_const(it->second);
        }
        case NodeKind::add: return eval_direct(n.children[0], params, xi) + eval_direct(n.children[1], params, xi);
        case NodeKind::sub: return eval_direct(n.children[0], params, xi) - eval_direct(n.children[1], params, xi);
        case NodeKind::mul: return eval_direct(n.children[0], params, xi) * eval_direct(n.children[1], params, xi);
        case NodeKind::neg: return -eval_direct(n.children[0], params, xi);
        case NodeKind::div: {
            Jet2 num = eval_direct(n.children[0], params, xi);
            Jet2 den = eval_direct(n.children[1], params, xi);
            if (std::abs(den.v) < kZeroTol) {
                if (std::abs(num.v) < kZeroTol) throw RemovableSingularity{};
                throw DomainError("division by zero (pole, not removable)");
            }
            return num / den;
        }
        case NodeKind::pow: {
            Jet2 base = eval_direct(n.children[0], params, xi);
            const Node& e = n.children[1];
            double p;
            if (e.kind == NodeKind::constant) {
                p = e.value;
            } else if (e.kind == NodeKind::neg && e.children[0].kind == NodeKind::constant) {
                p = -e.children[0].value;
            } else if (e.kind == NodeKind::parameter) {
                auto it = params.find(e.name);
                if (it == params.end()) throw UnknownParameter("unbound parameter '" + e.name + "'");
                p = it->second;
            } else {
                // General exponent: base^e = exp(e*log(base)), base > 0.
                Jet2 ex = eval_direct(e, params, xi);
                if (base.v <= 0.0) throw DomainError("general power needs positive base");
                const double lg = std::log(base.v);
                Jet2 lj{lg, base.d1 / base.v, (base.d2 * base.v - base.d1 * base.d1) / (base.v * base.v)};
                return exp(ex * lj);
            }
            if (base.v == 0.0 && p > 0.0 && p < 2.0 && p != 1.0) throw RemovableSingularity{};
            return pow(base, p);
        }
        case NodeKind::call: {
            Jet2 a = eval_direct(n.children[0], params, xi);
            switch (n.fn) {
                case Fn::sqrt:
                    if (a.v < 0.0) throw DomainError("sqrt of negative value");
                    if (a.v < kZeroTol) throw RemovableSingularity{};
                    return sqrt(a);
                case Fn::tanh: return tanh(a);
                case Fn::cosh: return cosh(a);
                case Fn::sinh: return sinh(a);
                case Fn::coth:
                    if (std::abs(a.v) < kZeroTol) throw RemovableSingularity{};
                    return coth(a);
                case Fn::exp: return exp(a);
                case Fn::abs: return abs(a);
            }
            throw Error("unreachable function");
        }
    }
    throw Error("unreachable node kind");
}

// Jet-aware Richardson extrapolation of the right-limit at x0. Each offset
// evaluation carries its own derivatives, so the value channel can be
// back-extrapolated through second order before eliminating the remaining
// error terms. Every channel runs two elimination ladders: one assuming a
// general right-limit expansion (odd powers present, as for |xi|-type
// symbols), one assuming the even-smooth expansion; the ladder with the
// smaller final correction wins.
Jet2 richardson_limit(const Node& root, const ParamMap& params, double x0) {
    constexpr std::array<double, 3> offsets = {1.0e-2, 5.0e-3, 2.5e-3};
    std::array<Jet2, 3> j;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            j[i] = eval_direct(root, params, x0 + offsets[i]);
        } catch (const RemovableSingularity&) {
            throw ExtrapolationDiverged("singular at extrapolation node as well");
        }
        if (!j[i].finite()) throw ExtrapolationDiverged("non-finite value at extrapolation node");
    }

    auto level = [](double fine, double coarse, double order) {
        const double w = std::pow(2.0, order);
        return (w * fine - coarse) / (w - 1.0);
    };
    struct Extrapolant {
        double value;
        double correction;
    };
    auto ladder = [&](const std::array<double, 3>& f, double o1, double o2) -> Extrapolant {
        const double b0 = level(f[1], f[0], o1), b1 = level(f[2], f[1], o1);
        const double c = level(b1, b0, o2);
        return {c, std::abs(c - b1)};
    };
    auto best = [&](const std::array<double, 3>& f, double o1a, double o2a, double o1b,
                    double o2b, double tol, const char* what) {
        const Extrapolant a = ladder(f, o1a, o2a);
        const Extrapolant b = ladder(f, o1b, o2b);
        const Extrapolant chosen = a.correction <= b.correction ? a : b;
        if (chosen.correction > tol * (1.0 + std::abs(chosen.value)))
            throw ExtrapolationDiverged(std::string(what) + " channel not converging");
        return chosen.value;
    };

    std::array<double, 3> T, D, E;
    for (std::size_t i = 0; i < 3; ++i) {
        const double h = offsets[i];
        T[i] = j[i].v - h * j[i].d1 + 0.5 * h * h * j[i].d2;
        D[i] = j[i].d1 - h * j[i].d2;
        E[i] = j[i].d2;
    }

    Jet2 out;
    out.v = best(T, 3.0, 4.0, 4.0, 6.0, 1.0e-4, "value");
    out.d1 = best(D, 2.0, 3.0, 3.0, 5.0, 1.0e-3, "first-derivative");
    out.d2 = best(E, 1.0, 2.0, 2.0, 4.0, 1.0e-2, "second-derivative");
    if (!out.finite()) throw ExtrapolationDiverged("extrapolated jet not finite");
    return out;
}

// abs is differentiable nowhere as an inner factor; the only sanctioned uses
// are the outermost position and directly on the variable.
void check_abs_placement(const Node& n, bool is_root) {
    if (n.kind == NodeKind::call && n.fn == Fn::abs) {
        const bool on_variable = n.children[0].kind == NodeKind::variable;
        if (!is_root && !on_variable)
            throw NonDifferentiable("abs is only permitted outermost or directly on xi");
    }
    for (const Node& c : n.children) check_abs_placement(c, false);
}

void collect_parameters(const Node& n, std::vector<std::string>& out) {
    if (n.kind == NodeKind::parameter) {
        if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
    }
    for (const Node& c : n.children) collect_parameters(c, out);
}

// ---------------------------------------------------------------------------
// Pretty printing
// ---------------------------------------------------------------------------

int precedence(const Node& n) {
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::neg: return 3;
        case NodeKind::pow: return 4;
        default: return 5;
    }
}

void print_node(const Node& n, int parent_prec, std::string& out) {
    const int prec = precedence(n);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case NodeKind::constant: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            break;
        }
        case NodeKind::variable: out += "xi"; break;
        case NodeKind::parameter: out += n.name; break;
        case NodeKind::add:
            print_node(n.children[0], 1, out);
            out += " + ";
            print_node(n.children[1], 2, out);
            break;
        case NodeKind::sub:
            print_node(n.children[0], 1, out);
            out += " - ";
            print_node(n.children[1], 2, out);
            break;
        case NodeKind::mul:
            print_node(n.children[0], 2, out);
            out += "*";
            print_node(n.children[1], 3, out);
            break;
        case NodeKind::div:
            print_node(n.children[0], 2, out);
            out += "/";
            print_node(n.children[1], 3, out);
            break;
        case NodeKind::neg:
            out += '-';
            print_node(n.children[0], 3, out);
            break;
        case NodeKind::pow:
            print_node(n.children[0], 5, out);
            out += '^';
            print_node(n.children[1], 4, out);
            break;
        case NodeKind::call:
            out += to_string(n.fn);
            out += '(';
            print_node(n.children[0], 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

const char* to_string(Fn fn) {
    switch (fn) {
        case Fn::sqrt: return "sqrt";
        case Fn::tanh: return "tanh";
        case Fn::cosh: return "cosh";
        case Fn::sinh: return "sinh";
        case Fn::coth: return "coth";
        case Fn::exp: return "exp";
        case Fn::abs: return "abs";
    }
    return "?";
}

Expr parse(std::string_view text) {
    if (text.empty()) throw ParseError(0, "expression", "empty expression");
    Parser parser(text);
    Node root = parser.parse_expression();
    parser.expect_end();
    return Expr(std::move(root));
}

std::string pretty_print(const Expr& expr) {
    std::string out;
    print_node(expr.root(), 0, out);
    return out;
}

std::vector<std::string> parameter_names(const Expr& expr) {
    std::vector<std::string> names;
    collect_parameters(expr.root(), names);
    return names;
}

void bind_check(const Expr& expr, const ParamMap& params) {
    check_abs_placement(expr.root(), true);
    for (const std::string& name : parameter_names(expr)) {
        if (!params.count(name)) throw UnknownParameter("unbound parameter '" + name + "'");
    }
}

Jet2 eval_jet(const Expr& expr, const ParamMap& params, double xi) {
    if (xi < 0.0) throw DomainError("eval_jet requires xi >= 0");
    check_abs_placement(expr.root(), true);
    if (xi == 0.0) return richardson_limit(expr.root(), params, 0.0);
    try {
        Jet2 j = eval_direct(expr.root(), params, xi);
        if (!j.finite()) throw DomainError("non-finite jet");
        return j;
    } catch (const RemovableSingularity&) {
        return richardson_limit(expr.root(), params, xi);
    }
}

double eval_value(const Expr& expr, const ParamMap& params, double xi) {
    return eval_jet(expr, params, std::abs(xi)).v;
}

}  // namespace gkdv::dsl
