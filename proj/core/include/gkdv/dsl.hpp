#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gkdv/jet.hpp"
#include "gkdv/symbol.hpp"

namespace gkdv::dsl {

enum class NodeKind { constant, variable, parameter, add, sub, mul, div, pow, neg, call };

enum class Fn { sqrt, tanh, cosh, sinh, coth, exp, abs };

const char* to_string(Fn fn);

struct Node {
    NodeKind kind = NodeKind::constant;
    double value = 0.0;        // constant
    std::string name;          // parameter
    Fn fn = Fn::sqrt;          // call
    std::vector<Node> children;
};

/// Immutable parsed expression in the single free variable "xi".
class Expr {
public:
    explicit Expr(Node root) : root_(std::make_shared<const Node>(std::move(root))) {}
    const Node& root() const { return *root_; }

private:
    std::shared_ptr<const Node> root_;
};

/// Parses an expression. Precedence: pow > unary minus > mul/div > add/sub;
/// pow is right-associative; whitespace is insignificant.
/// Throws ParseError (with byte offset and expectation set) or UnknownFunction.
Expr parse(std::string_view text);

/// Renders the expression so that parse(pretty_print(e)) evaluates identically.
std::string pretty_print(const Expr& expr);

/// Collects the parameter names referenced by the expression.
std::vector<std::string> parameter_names(const Expr& expr);

/// Verifies every parameter reference resolves; throws UnknownParameter.
void bind_check(const Expr& expr, const ParamMap& params);

/// Order-2 jet by Taylor-mode arithmetic. At xi = 0 (or at an interior
/// removable 0/0) the right-limit is computed by Richardson extrapolation
/// over offsets {1e-2, 5e-3, 2.5e-3}.
Jet2 eval_jet(const Expr& expr, const ParamMap& params, double xi);

double eval_value(const Expr& expr, const ParamMap& params, double xi);

}  // namespace gkdv::dsl
