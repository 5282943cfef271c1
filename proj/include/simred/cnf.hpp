#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simred/limits.hpp"

namespace simred {

struct Literal {
  std::uint32_t var;  // 1-based
  bool positive;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Bit i holds the value of variable x_{i+1}.
using Assignment = std::vector<bool>;

/// CNF formula over an even number of variables. `padded` records that the
/// source declared an odd count and one unused variable was appended.
struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;
  bool padded = false;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Builds a formula from clauses, padding an odd variable count. Throws
/// InputError for a literal outside [1, num_vars].
CnfFormula make_formula(std::uint32_t num_vars, std::vector<Clause> clauses);

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// 0-terminated clauses that may span lines, optional `%` end marker.
/// Errors carry the offending line number.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

bool clause_satisfied(const Clause& c, const Assignment& rho);
bool satisfies(const CnfFormula& f, const Assignment& rho);

/// First satisfying assignment in ascending binary order, reading x_1 as the
/// most significant bit. Throws ScaleError above limits.sat_vars variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f, const ScaleLimits& limits = {});

/// "0110"-style rendering, x_1 first.
std::string assignment_bits(const Assignment& rho);
/// DIMACS-style literal list, e.g. "1 -2 3".
std::string assignment_literals(const Assignment& rho);

}  // namespace simred
