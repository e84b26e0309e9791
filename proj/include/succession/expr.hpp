#pragma once

#include "succession/rational.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace succession {

/// Raised by parse_expr. `offset` is the byte position in the source text.
class ParseError : public std::runtime_error {
 public:
  enum class Reason { Syntax, CoordinateOutOfRange };

  ParseError(Reason reason, std::size_t offset, const std::string& message);

  Reason reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Reason reason_;
  std::size_t offset_;
};

class DivisionByZeroError : public std::runtime_error {
 public:
  DivisionByZeroError() : std::runtime_error("division by zero") {}
};

/// Immutable utility expression over state coordinates x1..xd.
///
/// Nodes are shared, so copying an Expr is cheap and never aliases mutable
/// state. Coordinate indices are 1-based, matching the surface syntax.
class Expr {
 public:
  enum class Kind { Literal, Coordinate, Negate, Add, Subtract, Multiply, Divide, Min, Max };

  static Expr literal(Rational value);
  static Expr coordinate(std::size_t index);
  static Expr negate(Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr extremum(Kind kind, std::vector<Expr> operands);

  Kind kind() const;
  const Rational& value() const;         // Literal only
  std::size_t coordinate_index() const;  // Coordinate only
  std::span<const Expr> operands() const;

  /// Largest coordinate index referenced, 0 for constant expressions.
  std::size_t max_coordinate() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | NUMBER | COORD | '(' expr ')'
///           | ('min'|'max') '(' expr (',' expr)+ ')'
///   COORD  := 'x' [1-9][0-9]*
/// Decimal literals are converted exactly ("0.5" is 1/2).
Expr parse_expr(std::string_view text, std::size_t dimension);

/// Exact evaluation. Throws DivisionByZeroError.
Rational evaluate(const Expr& expr, std::span<const Rational> coords);

/// Canonical printer with minimal parentheses; parse_expr(to_string(e)) == e
/// for every expression produced by parse_expr.
std::string to_string(const Expr& expr);

}  // namespace succession
