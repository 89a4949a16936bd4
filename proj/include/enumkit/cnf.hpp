#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "enumkit/solution.hpp"

namespace enumkit {

/// Truth assignment for variables 1..n as a 0/1 vector.
struct Assignment {
  std::vector<std::uint8_t> bits;

  Solution to_solution() const;
  static Assignment from_value(std::uint64_t value, int n_vars);
  std::uint64_t to_value() const;
};

/// CNF in DIMACS convention: clauses are lists of nonzero literals with
/// |lit| <= n_vars. Empty clauses are representable (and unsatisfiable).
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;

  std::size_t literal_count() const;
  std::string id() const;
};

/// Parses DIMACS CNF text; comments and the p-line are handled; errors carry
/// line numbers.
CnfFormula parse_dimacs(std::string_view text);

std::string emit_dimacs(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& a);

/// Evaluates with only a prefix of variables fixed: returns true if some
/// completion of the prefix satisfies f (exhaustive over free variables).
/// The returned charge is the clause-literal work actually performed.
struct ExtensionAnswer {
  bool extendable = false;
  std::uint64_t work = 0;
};
ExtensionAnswer brute_force_extendable(const CnfFormula& f,
                                       const std::vector<std::uint8_t>& prefix);

/// Hard cap for exhaustive variable sweeps.
inline constexpr int kBruteForceVarCap = 24;

}  // namespace enumkit
