#pragma once

#include "capelli/capalg.hpp"
#include "capelli/catalog.hpp"
#include "capelli/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace capelli {

/// Inclusive range of ladder indices k.
struct Window {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
};

/// One weight space T_alpha with the maps leaving it.
struct WeightSpace {
  std::size_t dim = 0;
  Matrix F;  // T_alpha -> T_{alpha+d}
  Matrix D;  // T_alpha -> T_{alpha-d}
  Matrix N;  // theta - alpha on T_alpha
  std::vector<bool> f_open;  // F of this basis vector leaves the stored window
  std::vector<bool> d_open;  // D of this basis vector leaves the stored window

  friend bool operator==(const WeightSpace&, const WeightSpace&) = default;
};

/// A finite window of a graded A-module of finite type: finite-dimensional
/// weight spaces with f, Delta of degree +d, -d and theta = alpha + N.
struct GradedModule {
  PresentationPtr pres;
  std::map<Rational, WeightSpace> spaces;

  std::size_t dim(const Rational& alpha) const;
  friend bool operator==(const GradedModule& a, const GradedModule& b);
};

struct Violation {
  std::string relation;  // "d0", "c0", "FN", "DN", "nilpotent", "shape"
  Rational weight;
  std::string detail;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.relation == b.relation && a.weight == b.weight;
  }
};

/// Checks D F = B(alpha + N) and F D = B(alpha - d + N) on every basis vector
/// whose maps stay inside the window, plus N-equivariance of F and D and
/// nilpotency of N. Empty iff valid.
std::vector<Violation> validate(const GradedModule& t);

/// One-dimensional spaces at alpha = d(k + lambda), F = 1 and
/// Delta v_k = B(d(k + lambda - 1)) v_{k-1}, N = 0.
GradedModule build_ladder(PresentationPtr pres, const Rational& lambda, Window window);

struct BreakPoint {
  int k = 0;
  int multiplicity = 0;  // multiplicity of k + lambda - 1 as a root of b
  friend bool operator==(const BreakPoint&, const BreakPoint&) = default;
};

/// k in the window where the lowering edge into k-1 vanishes.
std::vector<BreakPoint> break_points(const APresentation& pres, const Rational& lambda, Window window);

/// Invariant sections f^(k + lambda) of C[V][1/f] f^lambda with f, theta, Delta
/// computed by twisted differentiation of each basis element.
/// Throws NotProportional when an image leaves the span of powers of f.
GradedModule psi_of_ladder(const CaseInstance& inst, PresentationPtr pres, const Rational& lambda, Window window);
GradedModule psi_of_ladder(const CaseInstance& inst, const Rational& lambda, Window window);

/// Chain data after rescaling bases so that every interior F edge is 1.
struct GaugedLadder {
  std::vector<Rational> weights;
  std::vector<Rational> d_edges;  // d_edges[i] maps weight i to weight i-1; d_edges[0] unused
};

/// nullopt when the module is not a one-dimensional-per-weight chain with
/// nonzero F edges and N = 0.
std::optional<GaugedLadder> gauge_normalize(const GradedModule& t);

struct WitnessReport {
  bool pass = false;
  std::string detail;
};

/// Compares psi_of_ladder with build_ladder after gauge normalization.
WitnessReport equivalence_witness(const CaseInstance& inst, PresentationPtr pres, const Rational& lambda,
                                  Window window);
WitnessReport equivalence_witness(const CaseInstance& inst, const Rational& lambda, Window window);

/// Throws std::invalid_argument on presentation mismatch.
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Image of v in T_alpha under x as weight -> column vector, or nullopt when
/// some step leaves the stored window.
std::optional<std::map<Rational, Matrix>> act(const AElement& x, const GradedModule& t, const Rational& alpha,
                                              const Matrix& v);

struct FaithfulnessReport {
  std::size_t words = 0;
  std::size_t comparisons = 0;
  std::size_t skipped = 0;  // word leaves the window on the algebra side
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// For every generator word of length <= max_length and every basis vector of
/// psi_of_ladder(lambda, window): the action of the word's normal form equals
/// the action of the word as differential operators on f^(k + lambda).
FaithfulnessReport oracle_faithfulness(const CaseInstance& inst, PresentationPtr pres,
                                       const std::vector<Rational>& lambdas, Window window, std::size_t max_length);

/// Every word over {F, THETA, DELTA} with length <= max_length.
std::vector<Word> all_generator_words(std::size_t max_length);

}  // namespace capelli
