#include "succession/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace succession {

struct Expr::Node {
  Kind kind;
  Rational value;
  std::size_t index = 0;
  std::vector<Expr> operands;
};

ParseError::ParseError(Reason reason, std::size_t offset, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      reason_(reason),
      offset_(offset) {}

Expr Expr::literal(Rational value) {
  return Expr(std::make_shared<const Node>(Node{Kind::Literal, std::move(value), 0, {}}));
}

Expr Expr::coordinate(std::size_t index) {
  if (index == 0) throw std::invalid_argument("coordinate indices are 1-based");
  return Expr(std::make_shared<const Node>(Node{Kind::Coordinate, Rational(0), index, {}}));
}

Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{Kind::Negate, Rational(0), 0, {std::move(operand)}}));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  if (kind != Kind::Add && kind != Kind::Subtract && kind != Kind::Multiply && kind != Kind::Divide) {
    throw std::invalid_argument("not a binary operator");
  }
  return Expr(std::make_shared<const Node>(Node{kind, Rational(0), 0, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::extremum(Kind kind, std::vector<Expr> operands) {
  if (kind != Kind::Min && kind != Kind::Max) throw std::invalid_argument("not min/max");
  if (operands.empty()) throw std::invalid_argument("min/max needs at least one operand");
  return Expr(std::make_shared<const Node>(Node{kind, Rational(0), 0, std::move(operands)}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
std::size_t Expr::coordinate_index() const { return node_->index; }
std::span<const Expr> Expr::operands() const { return node_->operands; }

std::size_t Expr::max_coordinate() const {
  std::size_t best = node_->kind == Kind::Coordinate ? node_->index : 0;
  for (const auto& op : node_->operands) best = std::max(best, op.max_coordinate());
  return best;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Literal:
      return a.value() == b.value();
    case Expr::Kind::Coordinate:
      return a.coordinate_index() == b.coordinate_index();
    default:
      return std::ranges::equal(a.operands(), b.operands());
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dimension) : text_(text), dimension_(dimension) {}

  Expr parse() {
    skip_blanks();
    if (pos_ == text_.size()) fail("empty expression");
    Expr e = expr();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Reason::Syntax, pos_, message);
  }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::Subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::Multiply, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::Divide, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_blanks();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return Expr::negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == frac) fail("expected digits after decimal point");
    }
    return Expr::literal(parse_rational(text_.substr(start, pos_ - start)));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "min" || word == "max") {
      const auto kind = word == "min" ? Expr::Kind::Min : Expr::Kind::Max;
      expect('(');
      std::vector<Expr> args{expr()};
      while (accept(',')) args.push_back(expr());
      if (args.size() < 2) fail("min/max needs at least two arguments");
      expect(')');
      return Expr::extremum(kind, std::move(args));
    }
    if (word.size() >= 2 && word[0] == 'x' && word[1] != '0' &&
        std::all_of(word.begin() + 1, word.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      std::size_t index = 0;
      for (char d : word.substr(1)) {
        index = index * 10 + static_cast<std::size_t>(d - '0');
        if (index > dimension_) break;
      }
      if (index > dimension_) {
        throw ParseError(ParseError::Reason::CoordinateOutOfRange, start,
                         "coordinate " + std::string(word) + " exceeds dimension " + std::to_string(dimension_));
      }
      return Expr::coordinate(index);
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t dimension_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Subtract:
      return 1;
    case Expr::Kind::Multiply:
    case Expr::Kind::Divide:
      return 2;
    case Expr::Kind::Negate:
      return 3;
    case Expr::Kind::Literal:
      return e.value() < 0 ? 3 : 4;
    default:
      return 4;
  }
}

void print(const Expr& e, std::ostream& out);

void print_wrapped(const Expr& e, bool wrap, std::ostream& out) {
  if (wrap) out << '(';
  print(e, out);
  if (wrap) out << ')';
}

void print(const Expr& e, std::ostream& out) {
  switch (e.kind()) {
    case Expr::Kind::Literal: {
      const Rational& v = e.value();
      const Rational magnitude = abs(v);
      if (v < 0) out << '-';
      if (has_terminating_decimal(magnitude)) {
        out << format_rational(magnitude);
      } else {
        out << '(' << format_rational(magnitude) << ')';
      }
      return;
    }
    case Expr::Kind::Coordinate:
      out << 'x' << e.coordinate_index();
      return;
    case Expr::Kind::Negate:
      out << '-';
      print_wrapped(e.operands()[0], precedence(e.operands()[0]) < 3, out);
      return;
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      out << (e.kind() == Expr::Kind::Min ? "min(" : "max(");
      bool first = true;
      for (const auto& op : e.operands()) {
        if (!first) out << ", ";
        first = false;
        print(op, out);
      }
      out << ')';
      return;
    }
    default: {
      const int p = precedence(e);
      const auto& lhs = e.operands()[0];
      const auto& rhs = e.operands()[1];
      print_wrapped(lhs, precedence(lhs) < p, out);
      switch (e.kind()) {
        case Expr::Kind::Add: out << " + "; break;
        case Expr::Kind::Subtract: out << " - "; break;
        case Expr::Kind::Multiply: out << '*'; break;
        default: out << '/'; break;
      }
      print_wrapped(rhs, precedence(rhs) <= p, out);
      return;
    }
  }
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dimension) { return Parser(text, dimension).parse(); }

Rational evaluate(const Expr& expr, std::span<const Rational> coords) {
  switch (expr.kind()) {
    case Expr::Kind::Literal:
      return expr.value();
    case Expr::Kind::Coordinate:
      if (expr.coordinate_index() > coords.size()) throw std::out_of_range("coordinate beyond state dimension");
      return coords[expr.coordinate_index() - 1];
    case Expr::Kind::Negate:
      return -evaluate(expr.operands()[0], coords);
    case Expr::Kind::Add:
      return evaluate(expr.operands()[0], coords) + evaluate(expr.operands()[1], coords);
    case Expr::Kind::Subtract:
      return evaluate(expr.operands()[0], coords) - evaluate(expr.operands()[1], coords);
    case Expr::Kind::Multiply:
      return evaluate(expr.operands()[0], coords) * evaluate(expr.operands()[1], coords);
    case Expr::Kind::Divide: {
      Rational den = evaluate(expr.operands()[1], coords);
      if (den == 0) throw DivisionByZeroError();
      return evaluate(expr.operands()[0], coords) / den;
    }
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      const bool is_min = expr.kind() == Expr::Kind::Min;
      Rational best = evaluate(expr.operands()[0], coords);
      for (const auto& op : expr.operands().subspan(1)) {
        Rational v = evaluate(op, coords);
        if (is_min ? v < best : v > best) best = std::move(v);
      }
      return best;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

std::string to_string(const Expr& expr) {
  std::ostringstream out;
  print(expr, out);
  return out.str();
}

}  // namespace succession
