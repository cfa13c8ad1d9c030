#pragma once

#include "capelli/capalg.hpp"
#include "capelli/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capelli {

/// Syntax error with the byte offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 4096;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression over the generators f, theta, delta and non-negative rational
/// literals with +, -, * and ^ (non-negative integer exponent).
struct Expr {
  enum class Kind { F, Theta, Delta, Number, Add, Sub, Mul, Pow };

  Kind kind = Kind::Number;
  Rational value;         // Number
  unsigned exponent = 0;  // Pow
  ExprPtr lhs;            // Add, Sub, Mul, Pow (base)
  ExprPtr rhs;            // Add, Sub, Mul

  static ExprPtr atom(Kind k);
  static ExprPtr number(const Rational& v);
  static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
  static ExprPtr power(ExprPtr base, unsigned exp);
};

bool structurally_equal(const Expr& a, const Expr& b);

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := 'f' | 'theta' | 'delta' | rational | '(' expr ')'
/// Whitespace is ignored between tokens; binary operators associate left.
ExprPtr parse_expr(std::string_view text);

/// Minimal-parenthesis printer; parse_expr(fmt_expr(e)) is structurally e.
/// Throws std::invalid_argument on a negative literal, which the grammar cannot express.
std::string fmt_expr(const Expr& e);

AElement evaluate(const Expr& e, const PresentationPtr& pres);

}  // namespace capelli
