#include "capelli/weyl.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace capelli {

namespace {

using WeylAccumulator = std::unordered_map<WeylKey, Rational, WeylKeyHash>;

void accumulate(WeylAccumulator& acc, const WeylKey& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) it->second += c;
}

// n (n-1) ... (n-k+1)
Integer falling(unsigned n, unsigned k) {
  Integer out = 1;
  for (unsigned i = 0; i < k; ++i) out *= (n - i);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_arity(const WeylOp& a, std::size_t arity, const char* what) { require_same_arity(a.arity(), arity, what); }

}  // namespace

bool weyl_key_less(const WeylKey& a, const WeylKey& b) {
  const auto da = a.x.degree + a.d.degree;
  const auto db = b.x.degree + b.d.degree;
  if (da != db) return da < db;
  if (grlex_less(a.x, b.x)) return true;
  if (grlex_less(b.x, a.x)) return false;
  return grlex_less(a.d, b.d);
}

std::size_t WeylKeyHash::operator()(const WeylKey& k) const noexcept {
  MonomialHash h;
  return h(k.x) * 31u ^ (h(k.d) + 0x9e3779b97f4a7c15ull);
}

// ---------------------------------------------------------------------------
// WeylOp

WeylOp::WeylOp(std::size_t arity) : arity_(arity) {
  if (arity > kMaxVars) throw std::invalid_argument("operator arity exceeds " + std::to_string(kMaxVars));
}

WeylOp WeylOp::from_terms(std::size_t arity, std::vector<Term> terms) {
  WeylAccumulator acc;
  for (auto& [k, c] : terms) accumulate(acc, k, c);
  WeylOp out(arity);
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) out.terms_.emplace_back(k, std::move(c));
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return weyl_key_less(a.first, b.first); });
  return out;
}

WeylOp WeylOp::identity(std::size_t arity) { return from_terms(arity, {{WeylKey{}, Rational(1)}}); }

WeylOp WeylOp::multiplication(const MultiPoly& p) {
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back({WeylKey{m, Monomial{}}, c});
  return from_terms(p.arity(), std::move(terms));
}

WeylOp WeylOp::partial(std::size_t arity, std::size_t var) {
  if (var >= arity) throw std::out_of_range("partial: variable out of range");
  return from_terms(arity, {{WeylKey{Monomial{}, Monomial::unit(var)}, Rational(1)}});
}

WeylOp WeylOp::from_symbol(const MultiPoly& p) {
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back({WeylKey{Monomial{}, m}, c});
  return from_terms(p.arity(), std::move(terms));
}

WeylOp WeylOp::euler(std::size_t arity) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < arity; ++i) terms.push_back({WeylKey{Monomial::unit(i), Monomial::unit(i)}, Rational(1)});
  return from_terms(arity, std::move(terms));
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  require_same_arity(arity_, o.arity_, "weyl_add");
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(arity_, std::move(all));
}

WeylOp WeylOp::operator-(const WeylOp& o) const { return *this + o.scaled(Rational(-1)); }

WeylOp WeylOp::operator*(const WeylOp& o) const { return weyl_mul(*this, o); }

WeylOp WeylOp::scaled(const Rational& c) const {
  if (sgn(c) == 0) return WeylOp(arity_);
  WeylOp out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

bool WeylOp::is_multiplication() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.d.degree == 0; });
}

MultiPoly WeylOp::as_polynomial() const {
  if (!is_multiplication()) throw std::logic_error("operator involves derivatives");
  std::vector<MultiPoly::Term> terms;
  for (const auto& [k, c] : terms_) terms.emplace_back(k.x, c);
  return MultiPoly::from_terms(arity_, std::move(terms));
}

std::string WeylOp::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (k.x.degree == 0 && k.d.degree == 0)) factors.push_back(capelli::to_string(mag));
    auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "v" + std::to_string(i); };
    for (std::size_t i = 0; i < arity_; ++i)
      if (k.x[i]) factors.push_back(name(i) + (k.x[i] > 1 ? "^" + std::to_string(k.x[i]) : ""));
    for (std::size_t i = 0; i < arity_; ++i)
      if (k.d[i]) factors.push_back("d_" + name(i) + (k.d[i] > 1 ? "^" + std::to_string(k.d[i]) : ""));
    for (std::size_t j = 0; j < factors.size(); ++j) os << (j ? "*" : "") << factors[j];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Products and actions

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  require_same_arity(a.arity(), b.arity(), "weyl_mul");
  const std::size_t n = a.arity();
  WeylAccumulator acc;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // d^beta x^gamma = sum_k prod_i C(beta_i, k_i) gamma_i^(k_i falling) x^(gamma-k) d^(beta-k)
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < n; ++i)
        if (ka.d[i] && kb.x[i]) vars.push_back(i);
      std::vector<unsigned> k(vars.size(), 0);
      while (true) {
        Integer coef = 1;
        Monomial x = ka.x * kb.x;
        Monomial d = ka.d * kb.d;
        for (std::size_t j = 0; j < vars.size(); ++j) {
          const std::size_t i = vars[j];
          coef *= binomial(ka.d[i], k[j]) * falling(kb.x[i], k[j]);
          x.set(i, static_cast<std::uint16_t>(x[i] - k[j]));
          d.set(i, static_cast<std::uint16_t>(d[i] - k[j]));
        }
        accumulate(acc, WeylKey{x, d}, ca * cb * Rational(coef));
        std::size_t j = 0;
        for (; j < vars.size(); ++j) {
          const std::size_t i = vars[j];
          if (k[j] < std::min<unsigned>(ka.d[i], kb.x[i])) {
            ++k[j];
            break;
          }
          k[j] = 0;
        }
        if (j == vars.size()) break;
      }
    }
  }
  std::vector<WeylOp::Term> terms(acc.begin(), acc.end());
  return WeylOp::from_terms(n, std::move(terms));
}

WeylOp weyl_bracket(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b) - weyl_mul(b, a); }

namespace {

void apply_term(const WeylOp::Term& term, const MultiPoly& p, PolyAccumulator& acc) {
  const auto& [k, c] = term;
  for (const auto& [m, pc] : p.terms()) {
    if (!k.d.divides(m)) continue;
    Integer coef = 1;
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (k.d[i]) coef *= falling(m[i], k.d[i]);
    acc.add(k.x * (m / k.d), c * pc * Rational(coef));
  }
}

}  // namespace

MultiPoly weyl_apply_serial(const WeylOp& a, const MultiPoly& p) {
  check_arity(a, p.arity(), "weyl_apply");
  PolyAccumulator acc(p.arity());
  for (const auto& term : a.terms()) apply_term(term, p, acc);
  return std::move(acc).finish();
}

MultiPoly weyl_apply(const WeylOp& a, const MultiPoly& p) {
  check_arity(a, p.arity(), "weyl_apply");
  if (a.terms().size() < 2 || omp_get_max_threads() == 1 || omp_in_parallel()) return weyl_apply_serial(a, p);
  const long n = static_cast<long>(a.terms().size());
  std::vector<PolyAccumulator> partial;
  for (int t = 0; t < omp_get_max_threads(); ++t) partial.emplace_back(p.arity());
#pragma omp parallel
  {
    PolyAccumulator& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i) apply_term(a.terms()[static_cast<std::size_t>(i)], p, local);
  }
  PolyAccumulator total = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t) total.merge(std::move(partial[t]));
  return std::move(total).finish();
}

// ---------------------------------------------------------------------------
// Twisted module

TwistedElement TwistedElement::power_of_f(const MultiPoly& f, int k) {
  const std::size_t arity = f.arity() + 1;
  if (k >= 0) return {poly_pow(f.with_arity(arity), static_cast<unsigned>(k)), 0};
  return {MultiPoly::constant(arity, Rational(1)), static_cast<unsigned>(-k)};
}

TwistedElement twisted_canonical(const TwistedElement& e, const MultiPoly& f) {
  if (e.numerator.is_zero()) return {e.numerator, 0};
  const MultiPoly lifted = f.with_arity(e.numerator.arity());
  TwistedElement out = e;
  while (out.level > 0) {
    auto q = poly_div_exact(out.numerator, lifted);
    if (!q) break;
    out.numerator = std::move(*q);
    --out.level;
  }
  return out;
}

namespace {

struct TwistContext {
  std::size_t n;
  MultiPoly f;                  // lifted to n + 1 variables
  std::vector<MultiPoly> grad;  // d_i f, lifted
  std::optional<Rational> s_value;

  TwistContext(const MultiPoly& f0, std::optional<Rational> s0 = std::nullopt)
      : n(f0.arity()), f(f0.with_arity(f0.arity() + 1)), s_value(std::move(s0)) {
    for (std::size_t i = 0; i < n; ++i) grad.push_back(f0.derivative(i).with_arity(n + 1));
  }

  // d_i applied to q f^(s-m).
  TwistedElement leibniz(const TwistedElement& e, std::size_t i) const {
    if (s_value) {
      MultiPoly q = e.numerator.derivative(i) * f + (e.numerator * grad[i]).scaled(*s_value - e.level);
      return {std::move(q), e.level + 1};
    }
    MultiPoly s_minus_m = MultiPoly::variable(n + 1, n) - MultiPoly::constant(n + 1, Rational(e.level));
    MultiPoly q = e.numerator.derivative(i) * f + e.numerator * grad[i] * s_minus_m;
    return {std::move(q), e.level + 1};
  }

  TwistedElement apply_term(const WeylOp::Term& term, const TwistedElement& e) const {
    const auto& [k, c] = term;
    TwistedElement cur = e;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned r = 0; r < k.d[i]; ++r) cur = leibniz(cur, i);
    cur.numerator = cur.numerator.times_monomial(k.x, c);
    return cur;
  }

  TwistedElement combine(std::vector<TwistedElement>& parts) const {
    unsigned top = 0;
    for (const auto& p : parts) top = std::max(top, p.level);
    std::vector<MultiPoly> f_powers{MultiPoly::constant(n + 1, Rational(1))};
    PolyAccumulator acc(n + 1);
    for (auto& p : parts) {
      const unsigned gap = top - p.level;
      while (f_powers.size() <= gap) f_powers.push_back(f_powers.back() * f);
      acc.add(gap ? p.numerator * f_powers[gap] : p.numerator);
    }
    return {std::move(acc).finish(), top};
  }
};

void check_twisted(const WeylOp& a, const TwistedElement& e, const MultiPoly& f) {
  check_arity(a, f.arity(), "twisted_apply");
  require_same_arity(e.numerator.arity(), f.arity() + 1, "twisted_apply numerator");
  if (f.is_zero()) throw std::invalid_argument("twisted_apply: f must be nonzero");
}

}  // namespace

TwistedElement twisted_apply_serial(const WeylOp& a, const TwistedElement& e, const MultiPoly& f) {
  check_twisted(a, e, f);
  TwistContext ctx(f);
  std::vector<TwistedElement> parts;
  for (const auto& term : a.terms()) parts.push_back(ctx.apply_term(term, e));
  if (parts.empty()) return {MultiPoly(f.arity() + 1), 0};
  return twisted_canonical(ctx.combine(parts), f);
}

TwistedElement twisted_apply(const WeylOp& a, const TwistedElement& e, const MultiPoly& f) {
  check_twisted(a, e, f);
  if (a.terms().size() < 2 || omp_get_max_threads() == 1 || omp_in_parallel()) return twisted_apply_serial(a, e, f);
  TwistContext ctx(f);
  const long n = static_cast<long>(a.terms().size());
  std::vector<TwistedElement> parts(a.terms().size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i)] = ctx.apply_term(a.terms()[static_cast<std::size_t>(i)], e);
  return twisted_canonical(ctx.combine(parts), f);
}

TwistedElement twisted_apply_at(const WeylOp& a, const TwistedElement& e, const MultiPoly& f, const Rational& value) {
  check_twisted(a, e, f);
  const TwistContext ctx(f, value);
  const TwistedElement start{e.numerator.substitute(s_index(f), value), e.level};
  const long n = static_cast<long>(a.terms().size());
  std::vector<TwistedElement> parts(a.terms().size());
#pragma omp parallel for schedule(dynamic) if (n > 1 && !omp_in_parallel())
  for (long i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i)] = ctx.apply_term(a.terms()[static_cast<std::size_t>(i)], start);
  if (parts.empty()) return {MultiPoly(f.arity() + 1), 0};
  return twisted_canonical(ctx.combine(parts), f);
}

TwistedElement specialize_s(const TwistedElement& e, const Rational& value, const MultiPoly& f) {
  return twisted_canonical({e.numerator.substitute(s_index(f), value), e.level}, f);
}

MultiPoly evaluate_at_integer(const TwistedElement& e, unsigned k, const MultiPoly& f) {
  if (k < e.level) throw std::domain_error("evaluate_at_integer: negative power of f");
  MultiPoly q = e.numerator.substitute(s_index(f), Rational(k)).with_arity(f.arity());
  return q * poly_pow(f, k - e.level);
}

std::optional<Rational> coefficient_on_power(const TwistedElement& e, const MultiPoly& f, int j) {
  const std::size_t arity = f.arity() + 1;
  if (e.numerator.degree_in(s_index(f)) > 0) throw std::invalid_argument("coefficient_on_power: element depends on s");
  if (e.numerator.is_zero()) return Rational(0);
  // q f^(s-m) = mu f^(s+j)  <=>  q = mu f^(j+m)
  const long power = static_cast<long>(j) + static_cast<long>(e.level);
  MultiPoly lhs = e.numerator;
  MultiPoly rhs = MultiPoly::constant(arity, Rational(1));
  const MultiPoly lifted = f.with_arity(arity);
  if (power >= 0)
    rhs = poly_pow(lifted, static_cast<unsigned>(power));
  else
    lhs = lhs * poly_pow(lifted, static_cast<unsigned>(-power));
  if (lhs.size() != rhs.size()) return std::nullopt;
  Rational mu = lhs.leading_term().second / rhs.leading_term().second;
  if (lhs != rhs.scaled(mu)) return std::nullopt;
  return mu;
}

}  // namespace capelli
