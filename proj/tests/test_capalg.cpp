#include <doctest.h>

#include "capelli/capalg.hpp"

#include <random>

using namespace capelli;

namespace {

UniPoly th(std::vector<int> c) {
  std::vector<Rational> r;
  for (int x : c) r.emplace_back(x);
  return UniPoly(Symbol::Theta, r);
}

// d = 2, B(theta) = (theta + 2)(theta + 4) / 4, the determinant of 2x2 matrices.
PresentationPtr det2() {
  return std::make_shared<const APresentation>(2, th({8, 6, 1}).scaled(make_rational(1, 4)));
}

AElement random_element(std::mt19937_64& rng, const PresentationPtr& p) {
  std::uniform_int_distribution<int> key(-3, 3), c(-3, 3), deg(0, 2);
  AElement x(p);
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> coeffs;
    for (int k = 0, n = deg(rng); k <= n; ++k) coeffs.emplace_back(c(rng));
    x = x + AElement::component(p, key(rng), UniPoly(Symbol::Theta, coeffs));
  }
  return x;
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(APresentation(2, th({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(APresentation(1, th({-1, -1})), std::invalid_argument);
  CHECK_THROWS_AS(APresentation(1, th({2, 1}).scaled(-1)), std::invalid_argument);
  CHECK_THROWS_AS(APresentation(1, th({2, 1})), std::invalid_argument);
  CHECK_NOTHROW(APresentation(1, th({1, 1})));
  const APresentation p = APresentation::from_b(2, {UniPoly::from_root_offsets(Symbol::S, {Rational(1), Rational(2)}), Rational(1)});
  CHECK(p.B == th({8, 6, 1}).scaled(make_rational(1, 4)));
}

TEST_CASE("defining relations") {
  const auto p = det2();
  const auto f = AElement::f_power(p, 1), delta = AElement::delta_power(p, 1);
  const auto theta = AElement::theta_poly(p, th({0, 1}));
  CHECK(delta * f == AElement::theta_poly(p, p->B));
  CHECK(f * delta == AElement::theta_poly(p, upoly_shift(p->B, -2)));
  CHECK(theta * f - f * theta == f.scaled(2));
  CHECK(theta * delta - delta * theta == delta.scaled(-2));
  CHECK((delta * f - f * delta).to_string() == "theta + 2");
  CHECK(f.to_string() == "f");
  CHECK((f * f * delta).to_string() == "f*(1/4*theta^2 + 1/2*theta)");
}

TEST_CASE("associativity and distributivity") {
  const auto p = det2();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_element(rng, p), y = random_element(rng, p), z = random_element(rng, p);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
  }
}

TEST_CASE("graded components") {
  const auto p = det2();
  const auto x = AElement::f_power(p, 2) + AElement::theta_poly(p, th({1, 1})) + AElement::delta_power(p, 1);
  const auto parts = graded_components(x);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(4) == AElement::f_power(p, 2));
  CHECK(parts.at(-2) == AElement::delta_power(p, 1));
}

TEST_CASE("rewriting strategies agree") {
  const auto p = det2();
  const Word w{WordToken::delta(), WordToken::theta(), WordToken::f(), WordToken::number(3), WordToken::f(),
               WordToken::delta(), WordToken::delta(), WordToken::f()};
  const auto ref = from_word(p, w, Strategy::Leftmost);
  CHECK(from_word(p, w, Strategy::Rightmost) == ref);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(from_word(p, w, Strategy::Random, seed) == ref);
  CHECK(from_word_by_products(p, w) == ref);
  CHECK(word_to_string(w) == "delta*theta*f*3*f*delta*delta*f");
  CHECK(from_word(p, {}) == AElement::scalar(p, 1));
}

TEST_CASE("confluence") {
  const auto p = det2();
  const auto r = confluence_fuzz(p, 200, 17);
  CHECK(r.ok());
  CHECK(r.checks > 0);
  CHECK(confluence_exhaustive(p, 4).ok());
}
