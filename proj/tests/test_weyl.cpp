#include <doctest.h>

#include "capelli/catalog.hpp"
#include "capelli/weyl.hpp"

#include <random>

using namespace capelli;

namespace {

// Independent reference: apply x^a d^b term by term with repeated derivative().
MultiPoly apply_by_derivatives(const WeylOp& op, const MultiPoly& p) {
  MultiPoly out(p.arity());
  for (const auto& [key, c] : op.terms()) {
    MultiPoly q = p;
    for (std::size_t v = 0; v < p.arity(); ++v)
      for (int k = 0; k < key.d[v]; ++k) q = q.derivative(v);
    out = out + q.times_monomial(key.x, c);
  }
  return out;
}

WeylOp random_op(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  std::vector<WeylOp::Term> t;
  for (int i = 0; i < 3; ++i) {
    WeylKey k;
    for (std::size_t v = 0; v < arity; ++v) {
      k.x.set(v, static_cast<std::uint16_t>(e(rng)));
      k.d.set(v, static_cast<std::uint16_t>(e(rng)));
    }
    t.emplace_back(k, Rational(c(rng)));
  }
  return WeylOp::from_terms(arity, t);
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  std::vector<MultiPoly::Term> t;
  for (int i = 0; i < 4; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < arity; ++v) m.set(v, static_cast<std::uint16_t>(e(rng)));
    t.emplace_back(m, Rational(c(rng)));
  }
  return MultiPoly::from_terms(arity, t);
}

}  // namespace

TEST_CASE("canonical commutation") {
  const auto x = WeylOp::multiplication(MultiPoly::variable(2, 0));
  const auto dx = WeylOp::partial(2, 0), dy = WeylOp::partial(2, 1);
  CHECK(weyl_bracket(dx, x) == WeylOp::identity(2));
  CHECK(weyl_bracket(dy, x).is_zero());
  CHECK((dx * x).terms().size() == 2);
  CHECK((x * dx).terms().size() == 1);
}

TEST_CASE("weyl product is associative and acts as composition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_op(rng, 2), b = random_op(rng, 2), c = random_op(rng, 2);
    const auto p = random_poly(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(weyl_apply(a * b, p) == weyl_apply(a, weyl_apply(b, p)));
    CHECK(weyl_apply(a, p) == apply_by_derivatives(a, p));
    CHECK(weyl_apply_serial(a, p) == weyl_apply(a, p));
  }
}

TEST_CASE("euler operator measures degree") {
  const auto theta = WeylOp::euler(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Monomial m;
    for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<std::uint16_t>(rng() % 4));
    const auto p = MultiPoly::monomial(3, m, Rational(2));
    CHECK(weyl_apply(theta, p) == p.scaled(m.degree));
  }
}

TEST_CASE("relations on every minimal instance") {
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const auto inst = instantiate(id, minimal_size(id));
    const auto f = WeylOp::multiplication(inst.f);
    const Rational d(inst.d);
    CHECK(weyl_bracket(inst.theta, f) == f.scaled(d));
    CHECK(weyl_bracket(inst.theta, inst.delta) == inst.delta.scaled(-d));
    CHECK(inst.f.is_homogeneous());
    CHECK(inst.f.total_degree() == inst.d);
  }
}

TEST_CASE("twisted action specializes to integer powers") {
  const auto inst = instantiate(4, 2);
  const auto& f = inst.f;
  const auto s_plus_1 = TwistedElement::power_of_f(f, 1);
  const auto image = twisted_apply(inst.delta, s_plus_1, f);
  CHECK(image == twisted_apply_serial(inst.delta, s_plus_1, f));
  for (unsigned k = 0; k <= 4; ++k) {
    CAPTURE(k);
    const MultiPoly direct = weyl_apply(inst.delta, poly_pow(f, k + 1));
    CHECK(evaluate_at_integer(image, k, f) == direct);
  }
  // theta f^(s) = d s f^s
  const auto t = twisted_apply(inst.theta, TwistedElement::power_of_f(f, 0), f);
  const auto at_half = specialize_s(t, make_rational(1, 2), f);
  CHECK(coefficient_on_power(at_half, f, 0) == std::optional<Rational>(Rational(1)));
}

TEST_CASE("negative powers of f") {
  const auto inst = instantiate(1, 2);
  const auto e = TwistedElement::power_of_f(inst.f, -2);
  CHECK(e.level == 2);
  const auto fe = twisted_apply(WeylOp::multiplication(inst.f), e, inst.f);
  CHECK(twisted_canonical(fe, inst.f) == TwistedElement::power_of_f(inst.f, -1));
}

TEST_CASE("early specialization agrees with late specialization") {
  for (int id : {2, 3, 5}) {
    const auto inst = instantiate(id, minimal_size(id));
    for (int k : {-2, 0, 1})
      for (const Rational& v : {Rational(0), make_rational(1, 2), make_rational(-7, 3)}) {
        const auto e = TwistedElement::power_of_f(inst.f, k);
        CHECK(twisted_apply_at(inst.delta, e, inst.f, v) == specialize_s(twisted_apply(inst.delta, e, inst.f), v, inst.f));
      }
  }
}
