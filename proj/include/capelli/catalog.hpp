#pragma once

#include "capelli/multipoly.hpp"
#include "capelli/unipoly.hpp"
#include "capelli/weyl.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

/// Requested size is outside a case's legal range.
class InvalidSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Static description of one row of the Capelli-type table.
struct CaseSpec {
  int case_id = 0;
  std::string name;            // (G, V)
  std::string size_rule;       // e.g. "n >= 4, n even" or "fixed: 8"
  std::string deg_f_rule;      // e.g. "n/2"
  std::string b_rule;          // b(s) as printed in the table
  std::string corrected_rule;  // b(s) the catalog expects; equals b_rule unless disputed
  std::string isotropy_g;      // generic isotropy subgroup of G (display only)
  std::string isotropy_h;      // generic isotropy subgroup of G' (display only)
  bool disputed = false;
  std::string dispute_note;
  int min_size = 0;
  std::optional<int> fixed_size;
  bool even_only = false;
  int max_size = 0;
};

/// The eight rows, in order (1)..(8).
const std::vector<CaseSpec>& list_cases();
/// Throws std::out_of_range for ids outside 1..8.
const CaseSpec& case_spec(int case_id);

bool valid_size(int case_id, int size);
int minimal_size(int case_id);
int degree_of_f(int case_id, int size);

/// Monic b(s) exactly as the table prints it.
UniPoly printed_b(int case_id, int size);
/// Monic b(s) the catalog expects (the printed rule with disputed rows corrected).
UniPoly expected_b(int case_id, int size);

/// f, its dual operator Delta = f*(d) and the Euler field for one case at one size.
struct CaseInstance {
  int case_id = 0;
  int size = 0;
  std::vector<std::string> variables;
  MultiPoly f;
  WeylOp delta;
  WeylOp theta;
  int d = 0;
  UniPoly expected_b;
  UniPoly printed_b;
  bool disputed = false;

  std::size_t arity() const { return variables.size(); }
};

/// Throws InvalidSize when the size violates the case's constraint.
CaseInstance instantiate(int case_id, int size);

}  // namespace capelli
