#include <doctest.h>

#include "capelli/bsat.hpp"
#include "capelli/catalog.hpp"

using namespace capelli;

namespace {

std::string bstr(int id, int size) {
  const BFunction bf = compute_b(instantiate(id, size));
  return factored_string(bf.b) + " c=" + to_string(bf.c);
}

}  // namespace

// Values frozen from an independent computer-algebra evaluation of
// Delta(f^(k+1)) / f^k for k = 0..deg f, interpolated in k.
TEST_CASE("b-functions at minimal sizes") {
  CHECK(bstr(1, 2) == "(s+1)^2 c=4");
  CHECK(bstr(2, 2) == "(s+1)(s+3/2) c=1");
  CHECK(bstr(3, 4) == "(s+1)(s+3) c=1");
  CHECK(bstr(4, 2) == "(s+1)(s+2) c=1");
  CHECK(bstr(5, 2) == "(s+1)(s+4) c=1");
  CHECK(bstr(6, 8) == "(s+1)(s+4) c=4");
  CHECK(bstr(7, 7) == "(s+1)(s+7/2) c=4");
  CHECK(bstr(8, 4) == "(s+1)(s+2)(s+3)(s+4) c=1");
}

TEST_CASE("b-functions at the next sizes") {
  CHECK(bstr(4, 3) == "(s+1)(s+2)(s+3) c=1");
  CHECK(bstr(2, 3) == "(s+1)(s+3/2)(s+2) c=1");
  CHECK(bstr(1, 3) == "(s+1)(s+3/2) c=4");
}

TEST_CASE("verdicts") {
  const auto s = UniPoly::identity(Symbol::S);
  const auto a = upoly_shift(s, 1), b = upoly_shift(s, 2);
  CHECK(judge(a, a, a, false) == Verdict::Match);
  CHECK(judge(a, b, a, true) == Verdict::MismatchDisputedRow);
  CHECK(judge(a, b, a, false) == Verdict::Mismatch);
  CHECK(judge(a, b, b, true) == Verdict::Mismatch);
  CHECK(parse_verdict(verdict_name(Verdict::MismatchDisputedRow)) == Verdict::MismatchDisputedRow);
  CHECK(verdict_name(Verdict::Match) == "match");
  CHECK_THROWS_AS(parse_verdict("nope"), std::invalid_argument);
}

TEST_CASE("certificates") {
  const auto cert = verify_table(6, 8);
  CHECK(cert.verdict == Verdict::MismatchDisputedRow);
  CHECK(factored_string(cert.b_expected) == "(s+2)(s+4)");
  CHECK(factored_string(cert.b_catalog) == "(s+1)(s+4)");
  CHECK(cert.roots == std::map<Rational, int>{{Rational(-4), 1}, {Rational(-1), 1}});
  const auto ok = verify_table(7, 7);
  CHECK(ok.verdict == Verdict::Match);
  CHECK(ok.c == 4);
}

TEST_CASE("non-proportional operator is rejected") {
  auto inst = instantiate(1, 2);
  inst.delta = WeylOp::partial(inst.arity(), 0);
  CHECK_THROWS_AS(compute_b(inst), NotProportional);
}

TEST_CASE("omega0 annihilation") {
  for (int id : {1, 2, 4, 5}) {
    CAPTURE(id);
    const auto r = verify_omega0(instantiate(id, minimal_size(id)));
    CHECK(r.pass);
  }
  // a wrong constant is caught
  const auto inst = instantiate(4, 2);
  BFunction bf = compute_b(inst);
  bf.c = 2;
  const auto bad = verify_omega0(inst, bf, 3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_failing_m.has_value());
}

TEST_CASE("verification targets") {
  CHECK(verification_targets(SizeSet::Min).size() == 8);
  CHECK(verification_targets(SizeSet::Default).size() == 13);
}
