#include "capelli/bsat.hpp"

#include "capelli/weyl.hpp"

#include <omp.h>

namespace capelli {

BFunction compute_b(const CaseInstance& inst) {
  const MultiPoly& f = inst.f;
  const std::size_t s = s_index(f);
  TwistedElement image = twisted_apply(inst.delta, TwistedElement::power_of_f(f, 1), f);
  if (image.level != 0)
    throw NotProportional("Delta f^(s+1) keeps a pole of order " + std::to_string(image.level) + " along f");

  std::vector<Rational> coeffs;
  for (const auto& [m, c] : image.numerator.terms()) {
    if (m.degree != m[s]) throw NotProportional("Delta f^(s+1) / f^s depends on the case variables");
    if (coeffs.size() <= m[s]) coeffs.resize(m[s] + 1u);
    coeffs[m[s]] = c;
  }
  UniPoly full(Symbol::S, std::move(coeffs));
  if (full.is_zero()) throw NotProportional("Delta f^(s+1) vanishes identically");
  Rational c = full.leading_coefficient();
  if (sgn(c) <= 0) throw NotProportional("leading constant c is not positive: " + to_string(c));
  return {full.monic(), c};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::MismatchDisputedRow:
      return "mismatch-disputed-row";
    case Verdict::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

Verdict parse_verdict(const std::string& name) {
  for (Verdict v : {Verdict::Match, Verdict::MismatchDisputedRow, Verdict::Mismatch})
    if (verdict_name(v) == name) return v;
  throw std::invalid_argument("unknown verdict: " + name);
}

Verdict judge(const UniPoly& computed, const UniPoly& printed, const UniPoly& catalog, bool disputed) {
  if (computed == printed) return Verdict::Match;
  if (disputed && computed == catalog) return Verdict::MismatchDisputedRow;
  return Verdict::Mismatch;
}

BCertificate certify(const CaseInstance& inst) {
  BFunction bf = compute_b(inst);
  BCertificate cert;
  cert.case_id = inst.case_id;
  cert.size = inst.size;
  cert.roots = rational_roots(bf.b);
  cert.b = std::move(bf.b);
  cert.c = std::move(bf.c);
  cert.b_expected = inst.printed_b;
  cert.b_catalog = inst.expected_b;
  cert.verdict = judge(cert.b, cert.b_expected, cert.b_catalog, inst.disputed);
  return cert;
}

BCertificate verify_table(int case_id, int size) { return certify(instantiate(case_id, size)); }

Omega0Report verify_omega0(const CaseInstance& inst, const BFunction& bf, int m_max) {
  if (m_max < 0) throw std::invalid_argument("verify_omega0: m_max must be >= 0");
  const MultiPoly& f = inst.f;
  const WeylOp f_delta = weyl_mul(WeylOp::multiplication(f), inst.delta);
  MultiPoly f_power = MultiPoly::constant(f.arity(), Rational(1));
  for (int m = 0; m <= m_max; ++m) {
    MultiPoly lhs = weyl_apply(f_delta, f_power);
    MultiPoly rhs = f_power.scaled(bf.c * bf.b.evaluate(Rational(m - 1)));
    if (lhs != rhs) return {false, m};
    if (m < m_max) f_power = f_power * f;
  }
  return {true, std::nullopt};
}

Omega0Report verify_omega0(const CaseInstance& inst, int m_max) { return verify_omega0(inst, compute_b(inst), m_max); }

std::vector<std::pair<int, int>> verification_targets(SizeSet sizes) {
  std::vector<std::pair<int, int>> out;
  for (int id = 1; id <= 8; ++id) {
    out.emplace_back(id, minimal_size(id));
    if (sizes == SizeSet::Default && !case_spec(id).fixed_size) {
      const int next = minimal_size(id) + (case_spec(id).even_only ? 2 : 1);
      out.emplace_back(id, next);
    }
  }
  return out;
}

namespace {

void certify_target(VerifyAllResult& r, std::size_t i) {
  try {
    r.certificates[i] = verify_table(r.targets[i].first, r.targets[i].second);
  } catch (const std::exception& e) {
    r.errors[i] = e.what();
  }
}

VerifyAllResult prepare(SizeSet sizes) {
  VerifyAllResult r;
  r.targets = verification_targets(sizes);
  r.certificates.resize(r.targets.size());
  r.errors.resize(r.targets.size());
  return r;
}

}  // namespace

VerifyAllResult verify_all_serial(SizeSet sizes) {
  VerifyAllResult r = prepare(sizes);
  for (std::size_t i = 0; i < r.targets.size(); ++i) certify_target(r, i);
  return r;
}

VerifyAllResult verify_all(SizeSet sizes) {
  VerifyAllResult r = prepare(sizes);
  const long n = static_cast<long>(r.targets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) certify_target(r, static_cast<std::size_t>(i));
  return r;
}

}  // namespace capelli
