#pragma once

#include "capelli/bsat.hpp"
#include "capelli/unipoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace capelli {

/// Presentation of A = C<f, theta, Delta> by
///   [theta, f] = d f,  [theta, Delta] = -d Delta,
///   Delta f = B(theta),  f Delta = B(theta - d),
/// with B(theta) = c b(theta / d).
struct APresentation {
  int d = 0;
  UniPoly B;  // in theta

  /// Throws std::invalid_argument unless deg B = d, B has a positive leading
  /// coefficient and B(-d) = 0.
  APresentation(int d, UniPoly B);

  static APresentation from_b(int d, const BFunction& bf);
  static std::shared_ptr<const APresentation> for_instance(const CaseInstance& inst);

  friend bool operator==(const APresentation& a, const APresentation& b) { return a.d == b.d && a.B == b.B; }
};

using PresentationPtr = std::shared_ptr<const APresentation>;

/// Normal form sum_{a>=1} f^a p_a(theta) + p_0(theta) + sum_{b>=1} q_b(theta) Delta^b.
/// Components are keyed by the signed power: +a for f^a p_a, 0, -b for q_b Delta^b.
class AElement {
 public:
  explicit AElement(PresentationPtr pres);

  static AElement scalar(PresentationPtr pres, const Rational& c);
  static AElement f_power(PresentationPtr pres, unsigned a);
  static AElement delta_power(PresentationPtr pres, unsigned b);
  static AElement theta_poly(PresentationPtr pres, const UniPoly& p);
  /// f^a p(theta) for key > 0, p(theta) for key 0, p(theta) Delta^-key for key < 0.
  static AElement component(PresentationPtr pres, int key, const UniPoly& p);

  const PresentationPtr& presentation() const { return pres_; }
  const std::map<int, UniPoly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// p_a for a > 0 (zero polynomial when absent).
  UniPoly pos(int a) const;
  UniPoly mid() const;
  UniPoly neg(int b) const;

  AElement operator+(const AElement& o) const;
  AElement operator-(const AElement& o) const;
  AElement operator*(const AElement& o) const;
  AElement scaled(const Rational& c) const;

  friend bool operator==(const AElement& a, const AElement& b);

  /// Text in the expression grammar, e.g. "f^2*(theta + 1) + 3/2 + theta*delta".
  std::string to_string() const;

 private:
  void add_component(int key, const UniPoly& p);

  PresentationPtr pres_;
  std::map<int, UniPoly> comps_;
};

AElement a_add(const AElement& x, const AElement& y);
AElement a_mul(const AElement& x, const AElement& y);

/// theta-degree k -> homogeneous component of x.
std::map<int, AElement> graded_components(const AElement& x);

enum class Letter : std::uint8_t { F, Theta, Delta, Scalar };

struct WordToken {
  Letter letter = Letter::F;
  Rational scalar;  // used when letter == Scalar

  static WordToken f() { return {Letter::F, Rational(0)}; }
  static WordToken theta() { return {Letter::Theta, Rational(0)}; }
  static WordToken delta() { return {Letter::Delta, Rational(0)}; }
  static WordToken number(const Rational& c) { return {Letter::Scalar, c}; }
};

using Word = std::vector<WordToken>;

std::string word_to_string(const Word& w);

/// Order in which the rewriting engine picks redexes.
enum class Strategy { Leftmost, Rightmost, Random };

/// Normal form of a product of generators by string rewriting with
///   P F -> F P(theta+d),  Delta P -> P(theta+d) Delta,  Delta F -> B(theta),
///   F Delta -> B(theta-d),  F P Delta -> B(theta-d) P(theta-d),  P Q -> PQ
/// where P, Q are polynomials in theta.
AElement from_word(PresentationPtr pres, const Word& word, Strategy strategy = Strategy::Leftmost,
                   std::uint64_t seed = 0);

/// Normal form computed by folding a_mul over the letters.
AElement from_word_by_products(PresentationPtr pres, const Word& word);

struct ConfluenceReport {
  std::size_t checks = 0;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

/// Random triples u, v, w: every rewriting strategy and both bracketings of
/// a_mul must give the same normal form.
ConfluenceReport confluence_fuzz(PresentationPtr pres, std::size_t trials, std::uint64_t seed,
                                 std::size_t max_word_length = 4);

/// Every word over {F, THETA, DELTA} of length <= max_length.
ConfluenceReport confluence_exhaustive(PresentationPtr pres, std::size_t max_length);

}  // namespace capelli
