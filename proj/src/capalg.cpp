#include "capelli/capalg.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace capelli {

// ---------------------------------------------------------------------------
// APresentation

APresentation::APresentation(int d_, UniPoly B_) : d(d_), B(B_.with_symbol(Symbol::Theta)) {
  if (d <= 0) throw std::invalid_argument("presentation degree must be positive");
  if (B.degree() != d) throw std::invalid_argument("deg B must equal d");
  if (sgn(B.leading_coefficient()) <= 0) throw std::invalid_argument("B must have a positive leading coefficient");
  if (sgn(B.evaluate(Rational(-d))) != 0) throw std::invalid_argument("B(-d) must vanish");
}

APresentation APresentation::from_b(int d, const BFunction& bf) {
  // B(theta) = c b(theta / d)
  return APresentation(d, bf.b.compose_linear(make_rational(1, d), Rational(0)).scaled(bf.c).with_symbol(Symbol::Theta));
}

PresentationPtr APresentation::for_instance(const CaseInstance& inst) {
  return std::make_shared<const APresentation>(from_b(inst.d, compute_b(inst)));
}

namespace {

void require_same(const PresentationPtr& a, const PresentationPtr& b) {
  if (a != b && !(a && b && *a == *b)) throw std::invalid_argument("AElement presentation mismatch");
}

UniPoly shift_theta(const UniPoly& p, long k) { return upoly_shift(p, Rational(k)); }

UniPoly one() { return UniPoly::constant(Symbol::Theta, Rational(1)); }

// f^a p Delta^b, not necessarily normal.
struct Triple {
  unsigned a = 0;
  UniPoly p;
  unsigned b = 0;
};

// f^a p Delta^b -> f^(a-1) B(theta-d) p(theta-d) Delta^(b-1) until one side is empty.
Triple normalize(const APresentation& pres, Triple t) {
  const UniPoly b_down = shift_theta(pres.B, -pres.d);
  while (t.a > 0 && t.b > 0 && !t.p.is_zero()) {
    t.p = b_down * shift_theta(t.p, -pres.d);
    --t.a;
    --t.b;
  }
  return t;
}

// Delta^b f^a in normal form.
Triple delta_f(const APresentation& pres, unsigned b, unsigned a) {
  const unsigned k = std::min(a, b);
  UniPoly q = one();
  for (unsigned i = 0; i < k; ++i) q = q * shift_theta(pres.B, static_cast<long>(i) * pres.d);
  if (b > k) return {0, shift_theta(q, static_cast<long>(b - k) * pres.d), b - k};
  if (a > k) return {a - k, shift_theta(q, static_cast<long>(a - k) * pres.d), 0};
  return {0, q, 0};
}

Triple to_triple(int key, const UniPoly& p) {
  return {static_cast<unsigned>(std::max(key, 0)), p, static_cast<unsigned>(std::max(-key, 0))};
}

int key_of(const Triple& t) { return t.a > 0 ? static_cast<int>(t.a) : -static_cast<int>(t.b); }

Triple multiply(const APresentation& pres, const Triple& x, const Triple& y) {
  Triple mid = delta_f(pres, x.b, y.a);
  const long d = pres.d;
  UniPoly p = shift_theta(x.p, static_cast<long>(mid.a) * d) * mid.p * shift_theta(y.p, static_cast<long>(mid.b) * d);
  return normalize(pres, {x.a + mid.a, std::move(p), mid.b + y.b});
}

}  // namespace

// ---------------------------------------------------------------------------
// AElement

AElement::AElement(PresentationPtr pres) : pres_(std::move(pres)) {
  if (!pres_) throw std::invalid_argument("AElement requires a presentation");
}

AElement AElement::scalar(PresentationPtr pres, const Rational& c) {
  return component(std::move(pres), 0, UniPoly::constant(Symbol::Theta, c));
}

AElement AElement::f_power(PresentationPtr pres, unsigned a) { return component(std::move(pres), static_cast<int>(a), one()); }

AElement AElement::delta_power(PresentationPtr pres, unsigned b) {
  return component(std::move(pres), -static_cast<int>(b), one());
}

AElement AElement::theta_poly(PresentationPtr pres, const UniPoly& p) { return component(std::move(pres), 0, p); }

AElement AElement::component(PresentationPtr pres, int key, const UniPoly& p) {
  AElement out(std::move(pres));
  out.add_component(key, p);
  return out;
}

void AElement::add_component(int key, const UniPoly& p) {
  if (p.is_zero()) return;
  UniPoly q = p.with_symbol(Symbol::Theta);
  auto it = comps_.find(key);
  if (it == comps_.end()) {
    comps_.emplace(key, std::move(q));
    return;
  }
  it->second = it->second + q;
  if (it->second.is_zero()) comps_.erase(it);
}

UniPoly AElement::pos(int a) const {
  auto it = comps_.find(a);
  return it == comps_.end() ? UniPoly(Symbol::Theta) : it->second;
}
UniPoly AElement::mid() const { return pos(0); }
UniPoly AElement::neg(int b) const { return pos(-b); }

AElement AElement::operator+(const AElement& o) const {
  require_same(pres_, o.pres_);
  AElement out = *this;
  for (const auto& [k, p] : o.comps_) out.add_component(k, p);
  return out;
}

AElement AElement::operator-(const AElement& o) const { return *this + o.scaled(Rational(-1)); }

AElement AElement::scaled(const Rational& c) const {
  AElement out(pres_);
  for (const auto& [k, p] : comps_) out.add_component(k, p.scaled(c));
  return out;
}

AElement AElement::operator*(const AElement& o) const {
  require_same(pres_, o.pres_);
  AElement out(pres_);
  for (const auto& [kx, px] : comps_)
    for (const auto& [ky, py] : o.comps_) {
      Triple t = multiply(*pres_, to_triple(kx, px), to_triple(ky, py));
      out.add_component(key_of(t), t.p);
    }
  return out;
}

bool operator==(const AElement& a, const AElement& b) {
  return (a.pres_ == b.pres_ || *a.pres_ == *b.pres_) && a.comps_ == b.comps_;
}

namespace {

struct Piece {
  bool negative = false;
  std::string body;
};

// A theta-polynomial with its sign pulled out so the body parses on its own.
Piece poly_piece(const UniPoly& p) {
  Piece out;
  out.negative = sgn(p.leading_coefficient()) < 0;
  out.body = (out.negative ? -p : p).to_string();
  return out;
}

bool single_term(const UniPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += sgn(c) != 0;
  return nonzero == 1;
}

}  // namespace

std::string AElement::to_string() const {
  if (comps_.empty()) return "0";
  std::vector<Piece> pieces;
  for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
    const auto& [key, p] = *it;
    Piece piece = poly_piece(p);
    const bool is_one = piece.body == "1";
    const std::string wrapped = single_term(p) ? piece.body : "(" + piece.body + ")";
    if (key > 0) {
      std::string gen = key == 1 ? "f" : "f^" + std::to_string(key);
      piece.body = is_one ? gen : gen + "*" + wrapped;
    } else if (key < 0) {
      std::string gen = key == -1 ? "delta" : "delta^" + std::to_string(-key);
      piece.body = is_one ? gen : wrapped + "*" + gen;
    } else if (comps_.size() > 1 || piece.negative) {
      piece.body = wrapped;
    }
    pieces.push_back(std::move(piece));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      os << (pieces[i].negative ? "0 - " : "");
    else
      os << (pieces[i].negative ? " - " : " + ");
    os << pieces[i].body;
  }
  return os.str();
}

AElement a_add(const AElement& x, const AElement& y) { return x + y; }
AElement a_mul(const AElement& x, const AElement& y) { return x * y; }

std::map<int, AElement> graded_components(const AElement& x) {
  std::map<int, AElement> out;
  const int d = x.presentation()->d;
  for (const auto& [key, p] : x.components()) out.emplace(key * d, AElement::component(x.presentation(), key, p));
  return out;
}

// ---------------------------------------------------------------------------
// Words and rewriting

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    switch (w[i].letter) {
      case Letter::F:
        os << "f";
        break;
      case Letter::Theta:
        os << "theta";
        break;
      case Letter::Delta:
        os << "delta";
        break;
      case Letter::Scalar:
        os << capelli::to_string(w[i].scalar);
        break;
    }
  }
  return os.str();
}

namespace {

enum class NodeKind { F, D, P };

struct Node {
  NodeKind kind;
  UniPoly poly;  // for P
};

struct Redex {
  std::size_t pos;
  std::size_t len;
};

std::vector<Redex> find_redexes(const std::vector<Node>& w) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const NodeKind a = w[i].kind;
    const NodeKind b = w[i + 1].kind;
    const bool two = (a == NodeKind::P && b == NodeKind::P) || (a == NodeKind::P && b == NodeKind::F) ||
                     (a == NodeKind::D && b == NodeKind::P) || (a == NodeKind::D && b == NodeKind::F) ||
                     (a == NodeKind::F && b == NodeKind::D);
    if (two)
      out.push_back({i, 2});
    else if (a == NodeKind::F && b == NodeKind::P && i + 2 < w.size() && w[i + 2].kind == NodeKind::D)
      out.push_back({i, 3});
  }
  return out;
}

void rewrite(const APresentation& pres, std::vector<Node>& w, const Redex& r) {
  const long d = pres.d;
  std::vector<Node> replacement;
  const Node& a = w[r.pos];
  const Node& b = w[r.pos + 1];
  if (r.len == 3) {
    replacement.push_back({NodeKind::P, shift_theta(pres.B, -d) * shift_theta(b.poly, -d)});
  } else if (a.kind == NodeKind::P && b.kind == NodeKind::P) {
    replacement.push_back({NodeKind::P, a.poly * b.poly});
  } else if (a.kind == NodeKind::P && b.kind == NodeKind::F) {
    replacement = {{NodeKind::F, {}}, {NodeKind::P, shift_theta(a.poly, d)}};
  } else if (a.kind == NodeKind::D && b.kind == NodeKind::P) {
    replacement = {{NodeKind::P, shift_theta(b.poly, d)}, {NodeKind::D, {}}};
  } else if (a.kind == NodeKind::D && b.kind == NodeKind::F) {
    replacement.push_back({NodeKind::P, pres.B});
  } else {  // F D
    replacement.push_back({NodeKind::P, shift_theta(pres.B, -d)});
  }
  auto first = w.begin() + static_cast<long>(r.pos);
  w.erase(first, first + static_cast<long>(r.len));
  w.insert(w.begin() + static_cast<long>(r.pos), replacement.begin(), replacement.end());
}

}  // namespace

AElement from_word(PresentationPtr pres, const Word& word, Strategy strategy, std::uint64_t seed) {
  std::vector<Node> w;
  for (const auto& t : word) {
    switch (t.letter) {
      case Letter::F:
        w.push_back({NodeKind::F, {}});
        break;
      case Letter::Delta:
        w.push_back({NodeKind::D, {}});
        break;
      case Letter::Theta:
        w.push_back({NodeKind::P, UniPoly::identity(Symbol::Theta)});
        break;
      case Letter::Scalar:
        w.push_back({NodeKind::P, UniPoly::constant(Symbol::Theta, t.scalar)});
        break;
    }
  }
  std::mt19937_64 rng(seed);
  while (true) {
    for (const auto& n : w)
      if (n.kind == NodeKind::P && n.poly.is_zero()) return AElement(pres);
    auto redexes = find_redexes(w);
    if (redexes.empty()) break;
    Redex pick = redexes.front();
    if (strategy == Strategy::Rightmost) {
      pick = redexes.back();
    } else if (strategy == Strategy::Random) {
      std::uniform_int_distribution<std::size_t> dist(0, redexes.size() - 1);
      pick = redexes[dist(rng)];
    }
    rewrite(*pres, w, pick);
  }
  // Irreducible words are F^a [P] or [P] D^b.
  unsigned a = 0, b = 0;
  UniPoly p = one();
  for (const auto& n : w) {
    if (n.kind == NodeKind::F) ++a;
    if (n.kind == NodeKind::D) ++b;
    if (n.kind == NodeKind::P) p = n.poly;
  }
  if (a > 0 && b > 0) throw std::logic_error("rewriting stopped on a non-normal word");
  return AElement::component(pres, a > 0 ? static_cast<int>(a) : -static_cast<int>(b), p);
}

AElement from_word_by_products(PresentationPtr pres, const Word& word) {
  AElement acc = AElement::scalar(pres, Rational(1));
  for (const auto& t : word) {
    switch (t.letter) {
      case Letter::F:
        acc = acc * AElement::f_power(pres, 1);
        break;
      case Letter::Delta:
        acc = acc * AElement::delta_power(pres, 1);
        break;
      case Letter::Theta:
        acc = acc * AElement::theta_poly(pres, UniPoly::identity(Symbol::Theta));
        break;
      case Letter::Scalar:
        acc = acc.scaled(t.scalar);
        break;
    }
  }
  return acc;
}

namespace {

void check_word(const PresentationPtr& pres, const Word& u, const Word& v, const Word& w, std::uint64_t seed,
                ConfluenceReport& report) {
  Word uvw = u;
  uvw.insert(uvw.end(), v.begin(), v.end());
  uvw.insert(uvw.end(), w.begin(), w.end());
  const AElement left = from_word(pres, uvw, Strategy::Leftmost);
  const AElement right = from_word(pres, uvw, Strategy::Rightmost);
  const AElement random = from_word(pres, uvw, Strategy::Random, seed);
  const AElement nu = from_word(pres, u), nv = from_word(pres, v), nw = from_word(pres, w);
  const AElement assoc_left = (nu * nv) * nw;
  const AElement assoc_right = nu * (nv * nw);
  const AElement folded = from_word_by_products(pres, uvw);
  ++report.checks;
  auto flag = [&](const char* what, const AElement& other) {
    if (other != left)
      report.discrepancies.push_back(std::string(what) + " on [" + word_to_string(u) + "][" + word_to_string(v) +
                                     "][" + word_to_string(w) + "]: " + left.to_string() + " vs " + other.to_string());
  };
  flag("rightmost", right);
  flag("random", random);
  flag("(uv)w", assoc_left);
  flag("u(vw)", assoc_right);
  flag("fold", folded);
}

}  // namespace

ConfluenceReport confluence_fuzz(PresentationPtr pres, std::size_t trials, std::uint64_t seed,
                                 std::size_t max_word_length) {
  if (trials == 0) throw std::invalid_argument("confluence_fuzz needs at least one trial");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_word_length);
  std::uniform_int_distribution<int> letter(0, 9);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto random_word = [&]() {
    Word w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const int l = letter(rng);
      if (l < 3)
        w.push_back(WordToken::f());
      else if (l < 6)
        w.push_back(WordToken::delta());
      else if (l < 9)
        w.push_back(WordToken::theta());
      else
        w.push_back(WordToken::number(make_rational(num(rng), den(rng))));
    }
    return w;
  };
  ConfluenceReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    Word u = random_word(), v = random_word(), w = random_word();
    check_word(pres, u, v, w, rng(), report);
  }
  return report;
}

ConfluenceReport confluence_exhaustive(PresentationPtr pres, std::size_t max_length) {
  ConfluenceReport report;
  const WordToken letters[3] = {WordToken::f(), WordToken::theta(), WordToken::delta()};
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::vector<int> digits(n, 0);
    while (true) {
      Word w;
      for (int dgt : digits) w.push_back(letters[dgt]);
      // Split the word in thirds so both bracketings are exercised as well.
      const std::size_t i = n / 3, j = (2 * n) / 3;
      check_word(pres, Word(w.begin(), w.begin() + static_cast<long>(i)),
                 Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j)),
                 Word(w.begin() + static_cast<long>(j), w.end()), n * 7919 + report.checks, report);
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (++digits[k] < 3) break;
        digits[k] = 0;
      }
      if (k == n) break;
    }
  }
  return report;
}

}  // namespace capelli
