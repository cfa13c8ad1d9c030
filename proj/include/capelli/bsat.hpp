#pragma once

#include "capelli/catalog.hpp"
#include "capelli/unipoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

/// Delta f^(s+1) is not a polynomial in s times f^s, or its constant is not positive.
class NotProportional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta f^(s+1) = c b(s) f^s with b monic.
struct BFunction {
  UniPoly b;
  Rational c;
};

BFunction compute_b(const CaseInstance& inst);

enum class Verdict { Match, MismatchDisputedRow, Mismatch };

std::string verdict_name(Verdict v);
/// Throws std::invalid_argument for unknown names.
Verdict parse_verdict(const std::string& name);

struct BCertificate {
  int case_id = 0;
  int size = 0;
  UniPoly b;                      // computed, monic
  Rational c;                     // computed, positive
  UniPoly b_expected;             // as printed in the table
  UniPoly b_catalog;              // catalog rule (corrected for disputed rows)
  std::map<Rational, int> roots;  // rational roots of b with multiplicity
  Verdict verdict = Verdict::Mismatch;

  friend bool operator==(const BCertificate&, const BCertificate&) = default;
};

/// Verdict rule: match when b equals the printed row; for a disputed row a
/// printed mismatch that agrees with the catalog rule is a soft mismatch.
Verdict judge(const UniPoly& computed, const UniPoly& printed, const UniPoly& catalog, bool disputed);

BCertificate certify(const CaseInstance& inst);
BCertificate verify_table(int case_id, int size);

struct Omega0Report {
  bool pass = true;
  std::optional<int> first_failing_m;
};

/// Checks (f Delta)(f^m) = c b(m-1) f^m by direct differentiation for m = 0..m_max.
Omega0Report verify_omega0(const CaseInstance& inst, const BFunction& bf, int m_max = 6);
Omega0Report verify_omega0(const CaseInstance& inst, int m_max = 6);

enum class SizeSet { Min, Default };

/// (case, size) pairs certified by verify_all.
std::vector<std::pair<int, int>> verification_targets(SizeSet sizes);

/// Certificates for all targets in case order. Cases run concurrently under
/// OpenMP; a NotProportional failure is reported through `errors`.
struct VerifyAllResult {
  std::vector<std::pair<int, int>> targets;
  std::vector<std::optional<BCertificate>> certificates;
  std::vector<std::string> errors;  // empty string when the target succeeded
};
VerifyAllResult verify_all(SizeSet sizes);
/// Single-threaded reference for verify_all.
VerifyAllResult verify_all_serial(SizeSet sizes);

}  // namespace capelli
