#include "capelli/multipoly.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

constexpr std::size_t kParallelProductThreshold = 1u << 14;

std::uint16_t checked_exp(std::uint32_t e) {
  if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": arity mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t var, std::uint16_t power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  degree = degree - exp[i] + e;
  exp[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exp[i] = checked_exp(std::uint32_t(exp[i]) + other.exp[i]);
  out.degree = degree + other.degree;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  out.degree = degree - other.degree;
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint16_t e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------
// PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add_product(const Monomial& m, const Rational& a, const Rational& b) {
  auto [it, inserted] = map_.try_emplace(m);
  if (inserted)
    mpq_mul(it->second.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  else
    it->second += a * b;
}

void PolyAccumulator::merge(PolyAccumulator&& other) {
  if (map_.size() < other.map_.size()) std::swap(map_, other.map_);
  for (auto& [m, c] : other.map_) add(m, c);
  other.map_.clear();
}

void PolyAccumulator::add(const MultiPoly& p) {
  require_same_arity(arity_, p.arity(), "accumulate");
  for (const auto& [m, c] : p.terms()) add(m, c);
}

MultiPoly PolyAccumulator::finish() && {
  MultiPoly out(arity_);
  out.terms_.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (sgn(c) != 0) out.terms_.emplace_back(m, std::move(c));
  map_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return grlex_less(a.first, b.first); });
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
  if (arity > kMaxVars) throw std::invalid_argument("polynomial arity exceeds " + std::to_string(kMaxVars));
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly out(arity);
  if (sgn(c) != 0) out.terms_.emplace_back(Monomial{}, c);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  return monomial(arity, Monomial::unit(index), Rational(1));
}

MultiPoly MultiPoly::monomial(std::size_t arity, const Monomial& m, const Rational& c) {
  MultiPoly out(arity);
  if (sgn(c) != 0) out.terms_.emplace_back(m, c);
  return out;
}

MultiPoly MultiPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
  MultiPoly out(arity);
  for (auto& t : terms) {
    for (std::size_t i = arity; i < kMaxVars; ++i)
      if (t.first.exp[i] != 0) throw std::invalid_argument("monomial uses a variable beyond the arity");
    if (!out.terms_.empty() && out.terms_.back().first == t.first)
      out.terms_.back().second += t.second;
    else
      out.terms_.push_back(std::move(t));
    if (sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
  }
  return out;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_less(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.degree == 0) return terms_.front().second;
  return Rational(0);
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.degree); }

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().first.degree == terms_.back().first.degree;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_arity(arity_, o.arity_, "poly_add");
  MultiPoly out(arity_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_less(a->first, b->first))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || grlex_less(b->first, a->first)) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (sgn(c) != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return poly_mul(*this, o); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly(arity_);
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly(arity_);
  MultiPoly out(arity_);
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grlex order.
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_back(mm * m, cc * c);
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= arity_) throw std::out_of_range("derivative variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.set(var, m.exp[var] - 1);
    out.emplace_back(d, c * m.exp[var]);
  }
  return from_terms(arity_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= arity_) throw std::out_of_range("substitution variable out of range");
  PolyAccumulator acc(arity_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced.set(var, 0);
    acc.add(reduced, c * pow(value, m.exp[var]));
  }
  return std::move(acc).finish();
}

MultiPoly MultiPoly::with_arity(std::size_t arity) const {
  if (arity < arity_) {
    for (const auto& [m, c] : terms_)
      for (std::size_t i = arity; i < arity_; ++i)
        if (m.exp[i] != 0) throw std::invalid_argument("cannot drop a variable that occurs");
  }
  MultiPoly out(arity);
  out.terms_ = terms_;
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  require_same_arity(arity_, point.size(), "evaluate");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i)
      if (m.exp[i]) t *= pow(point[i], m.exp[i]);
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree == 0) {
      os << capelli::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      if (!m.exp[i]) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Kernels

MultiPoly poly_mul_serial(const MultiPoly& p, const MultiPoly& q) {
  require_same_arity(p.arity(), q.arity(), "poly_mul");
  PolyAccumulator acc(p.arity());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) acc.add_product(mp * mq, cp, cq);
  return std::move(acc).finish();
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  require_same_arity(p.arity(), q.arity(), "poly_mul");
  if (p.size() * q.size() < kParallelProductThreshold || omp_get_max_threads() == 1 || omp_in_parallel())
    return poly_mul_serial(p, q);

  const MultiPoly& outer = p.size() >= q.size() ? p : q;
  const MultiPoly& inner = p.size() >= q.size() ? q : p;
  const auto& outer_terms = outer.terms();
  const auto& inner_terms = inner.terms();
  const long n = static_cast<long>(outer_terms.size());

  std::vector<PolyAccumulator> partial;
  partial.reserve(static_cast<std::size_t>(omp_get_max_threads()));
  for (int t = 0; t < omp_get_max_threads(); ++t) partial.emplace_back(p.arity());

#pragma omp parallel
  {
    PolyAccumulator& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [mo, co] = outer_terms[static_cast<std::size_t>(i)];
      for (const auto& [mi, ci] : inner_terms) local.add_product(mo * mi, co, ci);
    }
  }
  PolyAccumulator total = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t) total.merge(std::move(partial[t]));
  return std::move(total).finish();
}

std::optional<MultiPoly> poly_div_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_arity(p.arity(), q.arity(), "poly_div_exact");
  if (q.is_zero()) throw std::invalid_argument("poly_div_exact: division by zero polynomial");
  const auto& [lead_m, lead_c] = q.leading_term();

  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);

  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead_m.divides(top->first)) return std::nullopt;
    Monomial qm = top->first / lead_m;
    Rational qc = top->second / lead_c;
    for (const auto& [m, c] : q.terms()) {
      Monomial prod = m * qm;
      auto [it, inserted] = rem.try_emplace(prod);
      it->second -= c * qc;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return MultiPoly::from_terms(p.arity(), std::move(quotient));
}

MultiPoly poly_pow(const MultiPoly& p, unsigned exp) {
  MultiPoly result = MultiPoly::constant(p.arity(), Rational(1));
  MultiPoly base = p;
  while (exp) {
    if (exp & 1u) result = poly_mul(result, base);
    exp >>= 1;
    if (exp) base = poly_mul(base, base);
  }
  return result;
}

}  // namespace capelli
