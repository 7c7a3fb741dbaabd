#include "riv/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace riv::expr {

enum class Op { add, sub, mul, div, pow, neg, exp, log, sqrt, abs, min, max };

struct Expression::Node {
  enum class Kind { number, variable, unary, binary } kind;
  double value = 0.0;   // number
  std::size_t var = 0;  // variable index
  Op op = Op::add;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Parser {
  std::string_view src;
  std::size_t pos = 0;
  std::vector<std::string>* vars;

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  NodePtr make_num(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::number;
    n->value = v;
    return n;
  }
  NodePtr make_un(Op op, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::unary;
    n->op = op;
    n->a = std::move(a);
    return n;
  }
  NodePtr make_bin(Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr expression() {
    NodePtr n = term();
    for (;;) {
      if (eat('+'))
        n = make_bin(Op::add, n, term());
      else if (eat('-'))
        n = make_bin(Op::sub, n, term());
      else
        return n;
    }
  }

  NodePtr term() {
    NodePtr n = factor();
    for (;;) {
      if (eat('*'))
        n = make_bin(Op::mul, n, factor());
      else if (eat('/'))
        n = make_bin(Op::div, n, factor());
      else
        return n;
    }
  }

  // right-associative power binds tighter than unary minus on the left:
  // -x^2 parses as -(x^2)
  NodePtr factor() {
    skip();
    if (eat('-')) return make_un(Op::neg, factor());
    if (eat('+')) return factor();
    NodePtr base = primary();
    if (eat('^')) return make_bin(Op::pow, base, factor());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos >= src.size()) fail("unexpected end of expression");
    const char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (eat('(')) {
      NodePtr n = expression();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* begin = src.data() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("bad number");
    pos += static_cast<std::size_t>(end - begin);
    return make_num(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name(src.substr(start, pos - start));
    skip();
    if (pos < src.size() && src[pos] == '(') {
      ++pos;
      return call(name);
    }
    if (name == "pi") return make_num(std::numbers::pi);
    if (name == "e") return make_num(std::numbers::e);
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::variable;
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == name) {
        n->var = i;
        return n;
      }
    n->var = vars->size();
    vars->push_back(std::move(name));
    return n;
  }

  NodePtr call(const std::string& name) {
    NodePtr a = expression();
    if (name == "min" || name == "max") {
      if (!eat(',')) fail(name + " takes two arguments");
      NodePtr b = expression();
      if (!eat(')')) fail("expected ')'");
      return make_bin(name == "min" ? Op::min : Op::max, a, b);
    }
    if (!eat(')')) fail("expected ')'");
    if (name == "exp") return make_un(Op::exp, a);
    if (name == "log") return make_un(Op::log, a);
    if (name == "sqrt") return make_un(Op::sqrt, a);
    if (name == "abs") return make_un(Op::abs, a);
    fail("unknown function '" + name + "'");
  }
};

double eval_node(const Node& n, std::span<const double> v) {
  switch (n.kind) {
    case Node::Kind::number:
      return n.value;
    case Node::Kind::variable:
      return v[n.var];
    case Node::Kind::unary: {
      const double a = eval_node(*n.a, v);
      switch (n.op) {
        case Op::neg: return -a;
        case Op::exp: return std::exp(a);
        case Op::log: return std::log(a);
        case Op::sqrt: return std::sqrt(a);
        case Op::abs: return std::fabs(a);
        default: break;
      }
      break;
    }
    case Node::Kind::binary: {
      const double a = eval_node(*n.a, v);
      const double b = eval_node(*n.b, v);
      switch (n.op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        case Op::div: return a / b;
        case Op::pow: return std::pow(a, b);
        case Op::min: return std::min(a, b);
        case Op::max: return std::max(a, b);
        default: break;
      }
      break;
    }
  }
  return 0.0;  // unreachable
}

}  // namespace

Expression Expression::parse(std::string_view src) {
  Expression e;
  e.source_.assign(src);
  Parser p{src, 0, &e.vars_};
  NodePtr root = p.expression();
  p.skip();
  if (p.pos != src.size()) throw ParseError("trailing input", p.pos);
  e.root_ = std::move(root);
  return e;
}

double Expression::eval(std::span<const double> values) const {
  if (values.size() < vars_.size())
    throw std::invalid_argument("expression needs " + std::to_string(vars_.size()) +
                                " variable values");
  return eval_node(*root_, values);
}

double Expression::operator()(double x) const {
  const double v[1] = {x};
  return eval(std::span<const double>(v, vars_.size() <= 1 ? vars_.size() : 1));
}

double Expression::operator()(double x, double y) const {
  const double v[2] = {x, y};
  return eval(std::span<const double>(v, 2));
}

}  // namespace riv::expr
