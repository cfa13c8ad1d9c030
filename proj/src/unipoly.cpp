#include "capelli/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace capelli {

std::string symbol_name(Symbol sym) { return sym == Symbol::S ? "s" : "theta"; }

UniPoly::UniPoly(Symbol sym, std::vector<Rational> coeffs) : sym_(sym), coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Symbol sym, const Rational& c) { return UniPoly(sym, {c}); }

UniPoly UniPoly::identity(Symbol sym) { return UniPoly(sym, {Rational(0), Rational(1)}); }

UniPoly UniPoly::from_root_offsets(Symbol sym, const std::vector<Rational>& offsets) {
  UniPoly out = constant(sym, Rational(1));
  for (const auto& r : offsets) out = out * UniPoly(sym, {r, Rational(1)});
  return out;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + o.coefficient(i);
  return UniPoly(sym_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(sym_);
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(sym_, std::move(c));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(sym_, std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: p(u) with u = a t + b.
  UniPoly u(sym_, {b, a});
  UniPoly acc(sym_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + constant(sym_, *it);
  return acc;
}

UniPoly UniPoly::with_symbol(Symbol sym) const { return UniPoly(sym, coeffs_); }

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  const std::string t = symbol_name(sym_);
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << capelli::to_string(mag);
      continue;
    }
    if (mag != 1) os << capelli::to_string(mag) << "*";
    os << t;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly upoly_shift(const UniPoly& p, const Rational& shift) { return p.compose_linear(Rational(1), shift); }

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Divides p by (t - r); p(r) must be zero.
UniPoly deflate(const UniPoly& p, const Rational& r) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  q[n - 1] = c[n];
  for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = c[k] + r * q[k];
  return UniPoly(p.symbol(), std::move(q));
}

}  // namespace

std::map<Rational, int> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::map<Rational, int> roots;

  UniPoly work = p;
  while (work.degree() > 0 && sgn(work.coefficient(0)) == 0) {
    work = UniPoly(work.symbol(), std::vector<Rational>(work.coeffs().begin() + 1, work.coeffs().end()));
    ++roots[Rational(0)];
  }
  if (work.degree() <= 0) return roots;

  Integer lcm_den = 1;
  for (const auto& c : work.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Rational scale(lcm_den);
  Integer trailing = Rational(work.coeffs().front() * scale).get_num();
  Integer leading = Rational(work.coeffs().back() * scale).get_num();

  std::set<Rational> candidates;
  for (const auto& a : divisors(trailing))
    for (const auto& b : divisors(leading)) {
      Rational r(a, b);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }

  for (const auto& r : candidates) {
    while (work.degree() > 0 && sgn(work.evaluate(r)) == 0) {
      work = deflate(work, r);
      ++roots[r];
    }
  }
  return roots;
}

std::string factored_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  auto roots = rational_roots(p);
  int total = 0;
  for (const auto& [r, m] : roots) total += m;
  if (total != p.degree()) return p.to_string();

  const std::string t = symbol_name(p.symbol());
  std::ostringstream os;
  Rational lc = p.leading_coefficient();
  if (lc != 1 || roots.empty()) os << to_string(lc);
  // Descending roots give (s+1)(s+2)... for negative roots.
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const auto& [r, m] = *it;
    std::string factor;
    if (sgn(r) == 0)
      factor = t;
    else if (sgn(r) < 0)
      factor = "(" + t + "+" + to_string(-r) + ")";
    else
      factor = "(" + t + "-" + to_string(r) + ")";
    os << factor;
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace capelli
