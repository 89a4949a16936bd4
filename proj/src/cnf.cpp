#include "enumkit/cnf.hpp"

#include <sstream>

#include "enumkit/errors.hpp"

namespace enumkit {

Solution Assignment::to_solution() const {
  std::string payload;
  payload.reserve(bits.size());
  for (auto b : bits) payload.push_back(b ? '1' : '0');
  return Solution(std::move(payload));
}

Assignment Assignment::from_value(std::uint64_t value, int n_vars) {
  Assignment a;
  a.bits.resize(static_cast<std::size_t>(n_vars));
  // lexicographic order of the payload string equals numeric order of the
  // value when bit 0 is the first variable (most significant position)
  for (int i = 0; i < n_vars; ++i)
    a.bits[static_cast<std::size_t>(i)] = (value >> (n_vars - 1 - i)) & 1;
  return a;
}

std::uint64_t Assignment::to_value() const {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | b;
  return v;
}

std::size_t CnfFormula::literal_count() const {
  std::size_t total = 0;
  for (const auto& c : clauses) total += c.size();
  return total;
}

std::string CnfFormula::id() const {
  return "cnf-n" + std::to_string(n_vars) + "-m" + std::to_string(clauses.size());
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header_seen = false;
  long declared_clauses = -1;
  std::vector<int> current;
  bool clause_open = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                    : eol - pos));
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "c" || tok.rfind("c", 0) == 0) continue;
    if (tok == "p") {
      if (header_seen) throw parse_error("duplicate p-line", line_no);
      std::string kind;
      long nv = -1, nc = -1;
      if (!(ss >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
        throw parse_error("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      f.n_vars = static_cast<int>(nv);
      declared_clauses = nc;
      header_seen = true;
      continue;
    }
    if (!header_seen) throw parse_error("clause data before p-line", line_no);
    // literals, possibly spanning lines until a 0 terminator
    ss.clear();
    ss.str(line);
    long lit;
    while (ss >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
        clause_open = false;
      } else {
        if (lit > f.n_vars || lit < -static_cast<long>(f.n_vars))
          throw parse_error("literal " + std::to_string(lit) + " out of range 1.." +
                                std::to_string(f.n_vars),
                            line_no);
        current.push_back(static_cast<int>(lit));
        clause_open = true;
      }
    }
    if (!ss.eof()) throw parse_error("unexpected token in clause data", line_no);
  }
  if (!header_seen) throw parse_error("missing p-line", line_no ? line_no : 1);
  if (clause_open) throw parse_error("missing terminating 0 for last clause", line_no);
  if (declared_clauses >= 0 && static_cast<long>(f.clauses.size()) != declared_clauses)
    throw parse_error("clause count " + std::to_string(f.clauses.size()) +
                          " does not match declared " + std::to_string(declared_clauses),
                      line_no);
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.n_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int var = lit > 0 ? lit : -lit;
      bool val = a.bits[static_cast<std::size_t>(var - 1)] != 0;
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

ExtensionAnswer brute_force_extendable(const CnfFormula& f,
                                       const std::vector<std::uint8_t>& prefix) {
  if (f.n_vars > kBruteForceVarCap)
    throw instance_too_large_error("brute-force extension check capped at " +
                                   std::to_string(kBruteForceVarCap) + " variables");
  ExtensionAnswer ans;
  const int fixed = static_cast<int>(prefix.size());

  // simplify under the prefix first; a falsified clause kills the subtree
  std::vector<std::vector<int>> residual;
  for (const auto& clause : f.clauses) {
    bool sat = false;
    std::vector<int> rest;
    for (int lit : clause) {
      ++ans.work;
      int var = lit > 0 ? lit : -lit;
      if (var <= fixed) {
        bool val = prefix[static_cast<std::size_t>(var - 1)] != 0;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      } else {
        rest.push_back(lit);
      }
    }
    if (sat) continue;
    if (rest.empty()) {
      ans.extendable = false;
      return ans;
    }
    residual.push_back(std::move(rest));
  }
  if (residual.empty()) {
    ans.extendable = true;
    return ans;
  }

  // exhaustive sweep of the free variables that still occur
  std::vector<int> free_vars;
  {
    std::vector<char> seen(static_cast<std::size_t>(f.n_vars) + 1, 0);
    for (const auto& c : residual)
      for (int lit : c) {
        int var = lit > 0 ? lit : -lit;
        if (!seen[static_cast<std::size_t>(var)]) {
          seen[static_cast<std::size_t>(var)] = 1;
          free_vars.push_back(var);
        }
      }
  }
  const std::size_t k = free_vars.size();
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    bool all_sat = true;
    for (const auto& c : residual) {
      bool sat = false;
      for (int lit : c) {
        ++ans.work;
        int var = lit > 0 ? lit : -lit;
        std::size_t ix = 0;
        while (free_vars[ix] != var) ++ix;
        bool val = (mask >> ix) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all_sat = false;
        break;
      }
    }
    if (all_sat) {
      ans.extendable = true;
      return ans;
    }
  }
  ans.extendable = false;
  return ans;
}

}  // namespace enumkit
