#pragma once

#include "capelli/multipoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// One normally ordered word x^alpha d^beta.
struct WeylKey {
  Monomial x;
  Monomial d;
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

bool weyl_key_less(const WeylKey& a, const WeylKey& b);

struct WeylKeyHash {
  std::size_t operator()(const WeylKey& k) const noexcept;
};

/// Differential operator with polynomial coefficients, stored as a sum of
/// normally ordered words (positions left of derivatives) with nonzero
/// rational coefficients in a canonical order.
class WeylOp {
 public:
  using Term = std::pair<WeylKey, Rational>;

  WeylOp() = default;
  explicit WeylOp(std::size_t arity);

  static WeylOp from_terms(std::size_t arity, std::vector<Term> terms);
  static WeylOp identity(std::size_t arity);
  /// Multiplication by a polynomial.
  static WeylOp multiplication(const MultiPoly& p);
  static WeylOp partial(std::size_t arity, std::size_t var);
  /// Constant-coefficient operator obtained by substituting d_i for x_i in p.
  static WeylOp from_symbol(const MultiPoly& p);
  /// Euler field sum_i x_i d_i.
  static WeylOp euler(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;
  WeylOp scaled(const Rational& c) const;

  /// True when no term carries a derivative.
  bool is_multiplication() const;
  /// The polynomial p with *this == multiplication(p); requires is_multiplication().
  MultiPoly as_polynomial() const;

  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Normally ordered product via the Leibniz rule.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

/// Commutator ab - ba.
WeylOp weyl_bracket(const WeylOp& a, const WeylOp& b);

/// Action on C[V]; operator terms are distributed over OpenMP threads.
MultiPoly weyl_apply(const WeylOp& a, const MultiPoly& p);
/// Single-threaded reference for weyl_apply.
MultiPoly weyl_apply_serial(const WeylOp& a, const MultiPoly& p);

/// q(x, s) * f^(s - level) in C[V][1/f] f^s. The numerator has one more
/// variable than the case variables; the last one is the symbol s.
struct TwistedElement {
  MultiPoly numerator;
  unsigned level = 0;

  /// f^(s + k) for any integer k.
  static TwistedElement power_of_f(const MultiPoly& f, int k);

  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

/// Index of the s variable in a numerator built for f.
inline std::size_t s_index(const MultiPoly& f) { return f.arity(); }

/// Divides f out of the numerator while the level is positive and the
/// division is exact; zero is (0, 0).
TwistedElement twisted_canonical(const TwistedElement& e, const MultiPoly& f);

/// Applies a to e using d_i(q f^(s-m)) = (d_i q) f^(s-m) + (s-m) q (d_i f) f^(s-m-1).
/// The result is canonical. Operator terms run under OpenMP.
TwistedElement twisted_apply(const WeylOp& a, const TwistedElement& e, const MultiPoly& f);
/// Single-threaded reference for twisted_apply.
TwistedElement twisted_apply_serial(const WeylOp& a, const TwistedElement& e, const MultiPoly& f);

/// twisted_apply followed by specialize_s(value), with s = value substituted
/// at every Leibniz step.
TwistedElement twisted_apply_at(const WeylOp& a, const TwistedElement& e, const MultiPoly& f, const Rational& value);

/// Substitutes a value for s and re-canonicalizes.
TwistedElement specialize_s(const TwistedElement& e, const Rational& value, const MultiPoly& f);

/// For s = k a non-negative integer with k >= level: the polynomial q(x, k) f^(k - level).
/// Throws std::domain_error when k < level.
MultiPoly evaluate_at_integer(const TwistedElement& e, unsigned k, const MultiPoly& f);

/// For an s-free element q f^(s-m), the scalar mu with q f^(s-m) = mu f^(s+j),
/// or nullopt when the element is not proportional to that power.
std::optional<Rational> coefficient_on_power(const TwistedElement& e, const MultiPoly& f, int j);

}  // namespace capelli
