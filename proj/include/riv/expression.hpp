#pragma once
// Small arithmetic expression grammar used by scenario configs:
// identifiers, + - * / ^, exp, log, sqrt, abs, min, max. '^' is
// right-associative; 'pi' and 'e' are built-in constants.

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riv::expr {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

class Expression {
 public:
  static Expression parse(std::string_view src);

  // Free variables in first-appearance order.
  const std::vector<std::string>& variables() const { return vars_; }

  // Values aligned with variables().
  double eval(std::span<const double> values) const;

  // Conveniences for the common single/double variable cases; the
  // expression may use fewer variables than supplied.
  double operator()(double x) const;
  double operator()(double x, double y) const;

  const std::string& source() const { return source_; }

 private:
  struct Node;
  Expression() = default;
  std::shared_ptr<const Node> root_;
  std::vector<std::string> vars_;
  std::string source_;
};

}  // namespace riv::expr
