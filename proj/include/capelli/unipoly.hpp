#pragma once

#include "capelli/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace capelli {

enum class Symbol { S, Theta };

std::string symbol_name(Symbol sym);

/// Dense univariate polynomial c0 + c1 t + ... in a tagged symbol.
/// The highest stored coefficient is nonzero; zero has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Symbol sym) : sym_(sym) {}
  UniPoly(Symbol sym, std::vector<Rational> coeffs);

  static UniPoly constant(Symbol sym, const Rational& c);
  /// The identity polynomial t.
  static UniPoly identity(Symbol sym);
  /// Product of (t + r) over the offsets.
  static UniPoly from_root_offsets(Symbol sym, const std::vector<Rational>& offsets);

  Symbol symbol() const { return sym_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const;
  Rational coefficient(std::size_t k) const;

  Rational evaluate(const Rational& t) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& c) const;
  UniPoly monic() const;
  /// p(a t + b).
  UniPoly compose_linear(const Rational& a, const Rational& b) const;
  UniPoly with_symbol(Symbol sym) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.sym_ == b.sym_ && a.coeffs_ == b.coeffs_; }

  /// Expanded form, highest power first, e.g. "s^2 + 3*s + 2".
  std::string to_string() const;

 private:
  void trim();

  Symbol sym_ = Symbol::S;
  std::vector<Rational> coeffs_;
};

/// t -> p(t + shift).
UniPoly upoly_shift(const UniPoly& p, const Rational& shift);

/// Rational roots with multiplicity (root -> multiplicity), found by testing
/// the candidates +-a/b with a | trailing and b | leading coefficient after
/// clearing denominators. Irrational factors contribute nothing.
/// Throws std::invalid_argument for the zero polynomial.
std::map<Rational, int> rational_roots(const UniPoly& p);

/// Factored display of a polynomial whose roots are all rational, e.g.
/// "(s+1)(s+3/2)". Falls back to the expanded form otherwise.
std::string factored_string(const UniPoly& p);

}  // namespace capelli
