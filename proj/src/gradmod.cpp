#include "capelli/gradmod.hpp"

#include "capelli/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace capelli {

std::size_t GradedModule::dim(const Rational& alpha) const {
  auto it = spaces.find(alpha);
  return it == spaces.end() ? 0 : it->second.dim;
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  const bool same_pres = a.pres == b.pres || (a.pres && b.pres && *a.pres == *b.pres);
  return same_pres && a.spaces == b.spaces;
}

// ---------------------------------------------------------------------------
// validate

std::vector<Violation> validate(const GradedModule& t) {
  std::vector<Violation> out;
  if (!t.pres) {
    out.push_back({"shape", Rational(0), "module has no presentation"});
    return out;
  }
  const Rational d(t.pres->d);
  const UniPoly& B = t.pres->B;

  auto space_at = [&](const Rational& a) -> const WeightSpace* {
    auto it = t.spaces.find(a);
    return it == t.spaces.end() ? nullptr : &it->second;
  };

  for (const auto& [alpha, w] : t.spaces) {
    const std::size_t up = t.dim(alpha + d);
    const std::size_t down = t.dim(alpha - d);
    if (w.N.rows() != w.dim || w.N.cols() != w.dim || w.F.rows() != up || w.F.cols() != w.dim ||
        w.D.rows() != down || w.D.cols() != w.dim || w.f_open.size() != w.dim || w.d_open.size() != w.dim) {
      out.push_back({"shape", alpha, "map shapes disagree with the weight dimensions"});
      continue;
    }
  }
  if (!out.empty()) return out;

  for (const auto& [alpha, w] : t.spaces) {
    if (!w.N.is_nilpotent()) out.push_back({"nilpotent", alpha, "theta - alpha is not nilpotent"});

    const WeightSpace* above = space_at(alpha + d);
    const WeightSpace* below = space_at(alpha - d);

    // (d0) at alpha: D_{alpha+d} F_alpha = B(alpha + N_alpha)
    {
      const Matrix lhs = above ? above->D * w.F : Matrix(w.dim, w.dim);
      const Matrix rhs = evaluate(B, Matrix::scalar(w.dim, alpha) + w.N);
      for (std::size_t j = 0; j < w.dim; ++j)
        if (!w.f_open[j] && !lhs.columns_equal(rhs, j)) {
          out.push_back({"d0", alpha, "Delta f != B(theta)"});
          break;
        }
    }
    // (c0) at alpha: F_{alpha-d} D_alpha = B(alpha - d + N_alpha)
    {
      const Matrix lhs = below ? below->F * w.D : Matrix(w.dim, w.dim);
      const Matrix rhs = evaluate(B, Matrix::scalar(w.dim, alpha - d) + w.N);
      for (std::size_t j = 0; j < w.dim; ++j)
        if (!w.d_open[j] && !lhs.columns_equal(rhs, j)) {
          out.push_back({"c0", alpha, "f Delta != B(theta - d)"});
          break;
        }
    }
    // F N_alpha = N_{alpha+d} F, D N_alpha = N_{alpha-d} D
    if (above) {
      const Matrix lhs = w.F * w.N;
      const Matrix rhs = above->N * w.F;
      for (std::size_t j = 0; j < w.dim; ++j)
        if (!w.f_open[j] && !lhs.columns_equal(rhs, j)) {
          out.push_back({"FN", alpha, "f does not commute with theta"});
          break;
        }
    }
    if (below) {
      const Matrix lhs = w.D * w.N;
      const Matrix rhs = below->N * w.D;
      for (std::size_t j = 0; j < w.dim; ++j)
        if (!w.d_open[j] && !lhs.columns_equal(rhs, j)) {
          out.push_back({"DN", alpha, "Delta does not commute with theta"});
          break;
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ladders

namespace {

void require_window(Window w) {
  if (w.lo > w.hi) throw std::invalid_argument("window must satisfy lo <= hi");
}

Rational ladder_weight(int d, int k, const Rational& lambda) { return Rational(d) * (Rational(k) + lambda); }

// One-dimensional chain from edge scalars; f_edge[k] maps k -> k+1, d_edge[k] maps k -> k-1.
GradedModule chain(PresentationPtr pres, const Rational& lambda, Window window, const std::map<int, Rational>& f_edge,
                   const std::map<int, Rational>& d_edge, const std::map<int, Rational>& weights) {
  GradedModule t;
  t.pres = pres;
  for (int k = window.lo; k <= window.hi; ++k) {
    WeightSpace w;
    w.dim = 1;
    w.N = Matrix(1, 1);
    w.f_open = {k == window.hi};
    w.d_open = {k == window.lo};
    w.F = Matrix(k == window.hi ? 0 : 1, 1);
    w.D = Matrix(k == window.lo ? 0 : 1, 1);
    if (k < window.hi) w.F(0, 0) = f_edge.at(k);
    if (k > window.lo) w.D(0, 0) = d_edge.at(k);
    const Rational alpha = weights.empty() ? ladder_weight(pres->d, k, lambda) : weights.at(k);
    t.spaces.emplace(alpha, std::move(w));
  }
  return t;
}

}  // namespace

GradedModule build_ladder(PresentationPtr pres, const Rational& lambda, Window window) {
  require_window(window);
  std::map<int, Rational> f_edge, d_edge;
  for (int k = window.lo; k <= window.hi; ++k) {
    f_edge[k] = 1;
    d_edge[k] = pres->B.evaluate(ladder_weight(pres->d, k - 1, lambda));
  }
  return chain(pres, lambda, window, f_edge, d_edge, {});
}

std::vector<BreakPoint> break_points(const APresentation& pres, const Rational& lambda, Window window) {
  require_window(window);
  const auto roots = rational_roots(pres.B);
  std::vector<BreakPoint> out;
  for (int k = window.lo; k <= window.hi; ++k) {
    const Rational arg = ladder_weight(pres.d, k - 1, lambda);
    if (sgn(pres.B.evaluate(arg)) != 0) continue;
    out.push_back({k, roots.at(arg)});
  }
  return out;
}

GradedModule psi_of_ladder(const CaseInstance& inst, PresentationPtr pres, const Rational& lambda, Window window) {
  require_window(window);
  const MultiPoly& f = inst.f;
  const WeylOp f_op = WeylOp::multiplication(f);
  std::map<int, Rational> f_edge, d_edge, weights;

  auto image = [&](const WeylOp& op, const TwistedElement& e, int k, int target, const char* what) {
    TwistedElement out = twisted_apply_at(op, e, f, lambda);
    auto mu = coefficient_on_power(out, f, target);
    if (!mu)
      throw NotProportional(std::string(what) + " of f^(" + std::to_string(k) + "+lambda) is not a multiple of f^(" +
                            std::to_string(target) + "+lambda)");
    return *mu;
  };

  for (int k = window.lo; k <= window.hi; ++k) {
    const TwistedElement e = TwistedElement::power_of_f(f, k);
    weights[k] = image(inst.theta, e, k, k, "theta");
    if (k < window.hi) f_edge[k] = image(f_op, e, k, k + 1, "f");
    if (k > window.lo) d_edge[k] = image(inst.delta, e, k, k - 1, "Delta");
  }
  return chain(std::move(pres), lambda, window, f_edge, d_edge, weights);
}

GradedModule psi_of_ladder(const CaseInstance& inst, const Rational& lambda, Window window) {
  return psi_of_ladder(inst, APresentation::for_instance(inst), lambda, window);
}

std::optional<GaugedLadder> gauge_normalize(const GradedModule& t) {
  if (!t.pres) return std::nullopt;
  const Rational d(t.pres->d);
  GaugedLadder g;
  std::vector<const WeightSpace*> chain;
  for (const auto& [alpha, w] : t.spaces) {
    if (w.dim != 1 || !w.N.is_zero()) return std::nullopt;
    if (!g.weights.empty() && alpha != g.weights.back() + d) return std::nullopt;
    g.weights.push_back(alpha);
    chain.push_back(&w);
  }
  g.d_edges.assign(chain.size(), Rational(0));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Rational& f_prev = chain[i - 1]->F(0, 0);
    if (sgn(f_prev) == 0) return std::nullopt;
    // New basis w_i = F w_{i-1}; then Delta w_i = F_{i-1} D_i w_{i-1}.
    g.d_edges[i] = f_prev * chain[i]->D(0, 0);
  }
  return g;
}

WitnessReport equivalence_witness(const CaseInstance& inst, PresentationPtr pres, const Rational& lambda,
                                  Window window) {
  const GradedModule psi = psi_of_ladder(inst, pres, lambda, window);
  const GradedModule ladder = build_ladder(pres, lambda, window);
  auto violations = validate(psi);
  if (!violations.empty())
    return {false, "psi module violates " + violations.front().relation + " at weight " +
                       to_string(violations.front().weight)};
  auto gp = gauge_normalize(psi);
  auto gl = gauge_normalize(ladder);
  if (!gp || !gl) return {false, "module is not a gauge-normalizable chain"};
  if (gp->weights != gl->weights) return {false, "weights differ"};
  for (std::size_t i = 1; i < gp->d_edges.size(); ++i)
    if (gp->d_edges[i] != gl->d_edges[i])
      return {false, "Delta edge at weight " + to_string(gp->weights[i]) + ": " + to_string(gp->d_edges[i]) +
                         " (psi) vs " + to_string(gl->d_edges[i]) + " (ladder)"};
  std::ostringstream os;
  os << "edges:";
  for (std::size_t i = 1; i < gp->d_edges.size(); ++i) os << " " << to_string(gp->d_edges[i]);
  return {true, os.str()};
}

WitnessReport equivalence_witness(const CaseInstance& inst, const Rational& lambda, Window window) {
  return equivalence_witness(inst, APresentation::for_instance(inst), lambda, window);
}

// ---------------------------------------------------------------------------
// Direct sum

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (!(a.pres == b.pres || (a.pres && b.pres && *a.pres == *b.pres)))
    throw std::invalid_argument("direct_sum: presentation mismatch");
  const Rational d(a.pres->d);
  GradedModule out;
  out.pres = a.pres;
  std::map<Rational, bool> all;
  for (const auto& [alpha, w] : a.spaces) all[alpha] = true;
  for (const auto& [alpha, w] : b.spaces) all[alpha] = true;

  auto get = [](const GradedModule& t, const Rational& alpha, std::size_t up, std::size_t down) {
    auto it = t.spaces.find(alpha);
    if (it != t.spaces.end()) return it->second;
    WeightSpace z;
    z.F = Matrix(up, 0);
    z.D = Matrix(down, 0);
    z.N = Matrix(0, 0);
    return z;
  };
  for (const auto& [alpha, unused] : all) {
    const WeightSpace wa = get(a, alpha, a.dim(alpha + d), a.dim(alpha - d));
    const WeightSpace wb = get(b, alpha, b.dim(alpha + d), b.dim(alpha - d));
    WeightSpace w;
    w.dim = wa.dim + wb.dim;
    w.F = Matrix::block_diag(wa.F, wb.F);
    w.D = Matrix::block_diag(wa.D, wb.D);
    w.N = Matrix::block_diag(wa.N, wb.N);
    w.f_open = wa.f_open;
    w.f_open.insert(w.f_open.end(), wb.f_open.begin(), wb.f_open.end());
    w.d_open = wa.d_open;
    w.d_open.insert(w.d_open.end(), wb.d_open.begin(), wb.d_open.end());
    out.spaces.emplace(alpha, std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra action

namespace {

struct Cursor {
  Rational alpha;
  Matrix v;
};

const WeightSpace* find_space(const GradedModule& t, const Rational& alpha) {
  auto it = t.spaces.find(alpha);
  return it == t.spaces.end() ? nullptr : &it->second;
}

bool touches_open(const Matrix& v, const std::vector<bool>& open) {
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (open[i] && sgn(v(i, 0)) != 0) return true;
  return false;
}

// Returns false when the step leaves the window.
bool step(const GradedModule& t, Cursor& c, bool raise) {
  const Rational d(t.pres->d);
  const WeightSpace* w = find_space(t, c.alpha);
  const Rational next = raise ? Rational(c.alpha + d) : Rational(c.alpha - d);
  if (!w) {
    // Zero space: the image is zero in the next space.
    c.v = Matrix(t.dim(next), 1);
    c.alpha = next;
    return true;
  }
  if (touches_open(c.v, raise ? w->f_open : w->d_open)) return false;
  c.v = (raise ? w->F : w->D) * c.v;
  c.alpha = next;
  return true;
}

void apply_theta_poly(const GradedModule& t, Cursor& c, const UniPoly& p) {
  const WeightSpace* w = find_space(t, c.alpha);
  if (!w) return;
  c.v = evaluate(p, Matrix::scalar(w->dim, c.alpha) + w->N) * c.v;
}

}  // namespace

std::optional<std::map<Rational, Matrix>> act(const AElement& x, const GradedModule& t, const Rational& alpha,
                                              const Matrix& v) {
  if (v.cols() != 1 || v.rows() != t.dim(alpha)) throw std::invalid_argument("act: vector has the wrong size");
  std::map<Rational, Matrix> out;
  for (const auto& [key, p] : x.components()) {
    Cursor c{alpha, v};
    if (key >= 0) {
      apply_theta_poly(t, c, p);
      for (int i = 0; i < key; ++i)
        if (!step(t, c, true)) return std::nullopt;
    } else {
      for (int i = 0; i < -key; ++i)
        if (!step(t, c, false)) return std::nullopt;
      apply_theta_poly(t, c, p);
    }
    auto it = out.find(c.alpha);
    if (it == out.end())
      out.emplace(c.alpha, c.v);
    else
      it->second = it->second + c.v;
  }
  return out;
}

std::vector<Word> all_generator_words(std::size_t max_length) {
  std::vector<Word> words{Word{}};
  std::vector<Word> frontier{Word{}};
  const WordToken letters[3] = {WordToken::f(), WordToken::theta(), WordToken::delta()};
  for (std::size_t n = 1; n <= max_length; ++n) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        Word e = w;
        e.push_back(l);
        next.push_back(e);
      }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

FaithfulnessReport oracle_faithfulness(const CaseInstance& inst, PresentationPtr pres,
                                       const std::vector<Rational>& lambdas, Window window, std::size_t max_length) {
  require_window(window);
  const MultiPoly& f = inst.f;
  const WeylOp f_op = WeylOp::multiplication(f);
  const auto words = all_generator_words(max_length);

  std::vector<GradedModule> modules;
  for (const auto& lambda : lambdas) modules.push_back(psi_of_ladder(inst, pres, lambda, window));

  FaithfulnessReport report;
  for (const auto& word : words) {
    ++report.words;
    const AElement nf = from_word(pres, word);
    int shift = 0;
    for (const auto& t : word) shift += t.letter == Letter::F ? 1 : t.letter == Letter::Delta ? -1 : 0;

    for (int k = window.lo; k <= window.hi; ++k) {
      // Differential-operator route, symbolic in s: rightmost letter acts first.
      TwistedElement e = TwistedElement::power_of_f(f, k);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const WeylOp& op = it->letter == Letter::F ? f_op : it->letter == Letter::Delta ? inst.delta : inst.theta;
        e = twisted_apply(op, e, f);
      }
      for (std::size_t li = 0; li < lambdas.size(); ++li) {
        const Rational& lambda = lambdas[li];
        const GradedModule& psi = modules[li];
        auto mu = coefficient_on_power(specialize_s(e, lambda, f), f, k + shift);
        const std::string where = "word " + word_to_string(word) + ", lambda " + to_string(lambda) + ", k " +
                                  std::to_string(k);
        if (!mu) {
          report.mismatches.push_back(where + ": operator image is not a power of f");
          continue;
        }
        const Rational alpha = Rational(pres->d) * (Rational(k) + lambda);
        auto image = act(nf, psi, alpha, Matrix::basis(1, 0));
        if (!image) {
          ++report.skipped;
          continue;
        }
        ++report.comparisons;
        const Rational target = Rational(pres->d) * (Rational(k + shift) + lambda);
        Rational algebra_side(0);
        for (const auto& [w, vec] : *image) {
          if (vec.is_zero()) continue;
          if (w != target) {
            report.mismatches.push_back(where + ": algebra image lands in weight " + to_string(w));
            continue;
          }
          algebra_side = vec(0, 0);
        }
        if (algebra_side != *mu)
          report.mismatches.push_back(where + ": algebra " + to_string(algebra_side) + " vs operators " +
                                      to_string(*mu));
      }
    }
  }
  return report;
}

}  // namespace capelli
