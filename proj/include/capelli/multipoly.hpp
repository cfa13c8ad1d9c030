#pragma once

#include "capelli/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace capelli {

/// Largest number of variables a polynomial may carry (case variables plus s).
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with cached total degree. Entries past the owning
/// polynomial's arity are always zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial unit(std::size_t var, std::uint16_t power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, std::uint16_t e);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) == true for `other / *this`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then x1 > x2 > ...
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted ascending in grlex order with no zero coefficients, so structural
/// equality is value equality.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity);

  static MultiPoly constant(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(std::size_t arity, const Monomial& m, const Rational& c);
  /// Sorts, merges duplicates and drops zeros.
  static MultiPoly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Largest term in grlex order. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.back(); }
  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c) const;

  MultiPoly derivative(std::size_t var) const;
  /// Replaces one variable by a value; the arity is unchanged.
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  /// Re-embeds into a ring with more variables (new variables appended).
  MultiPoly with_arity(std::size_t arity) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  std::string to_string(std::span<const std::string> names) const;

 private:
  friend class PolyAccumulator;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Hash-based term accumulator used by the product kernels.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(std::size_t arity) : arity_(arity) {}
  void add(const Monomial& m, const Rational& c);
  void add_product(const Monomial& m, const Rational& a, const Rational& b);
  void merge(PolyAccumulator&& other);
  void add(const MultiPoly& p);
  MultiPoly finish() &&;
  std::size_t size() const { return map_.size(); }

 private:
  std::size_t arity_;
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

/// Exact product; the outer loop over terms of `p` runs under OpenMP when the
/// product is large enough. Throws std::invalid_argument on arity mismatch.
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
/// Single-threaded reference for poly_mul.
MultiPoly poly_mul_serial(const MultiPoly& p, const MultiPoly& q);

/// r with q * r == p, or nullopt when p is not in the ideal (q).
/// Throws std::invalid_argument when q is zero or arities differ.
std::optional<MultiPoly> poly_div_exact(const MultiPoly& p, const MultiPoly& q);

MultiPoly poly_pow(const MultiPoly& p, unsigned exp);

void require_same_arity(std::size_t a, std::size_t b, const char* what);

}  // namespace capelli
