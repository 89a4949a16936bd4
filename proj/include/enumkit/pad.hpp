#pragma once

#include <memory>
#include <optional>

#include "enumkit/cnf.hpp"
#include "enumkit/enumerator.hpp"

namespace enumkit {

/// Smallest M with M^q >= 2^e, i.e. ceil(2^(e/q)), in exact integer
/// arithmetic. Deterministic and monotone in e/q.
std::uint64_t ceil_pow2_rational(std::uint64_t e, std::uint64_t q);

/// Environment-configurable cap (bits of the padding count):
/// ENUMKIT_MAX_PAD_BITS, default 26.
std::uint64_t max_pad_bits();

/// The padded benchmark instance: a CNF phi plus a rational t in (0,1].
/// Its solution set is the padding integers 1..ceil(2^(n t))-1 together with
/// every satisfying assignment duplicated 2^n times.
struct PaddedInstance {
  CnfFormula phi;
  std::uint64_t t_num = 1;
  std::uint64_t t_den = 1;

  PaddedInstance(CnfFormula f, std::uint64_t num, std::uint64_t den);

  int n() const { return phi.n_vars; }
  std::uint64_t padding_count() const { return padding_count_; }
  std::string id() const;

 private:
  std::uint64_t padding_count_ = 0;
};

/// One model in lexicographic order, or none; reports its own cost.
class SatSolver {
 public:
  struct Result {
    std::optional<Assignment> model;
    std::uint64_t charge = 1;
  };
  virtual ~SatSolver() = default;
  virtual Result find_model(const CnfFormula& f) = 0;
};

/// Exhaustive lexicographic scan, charged at its real clause-literal work.
std::shared_ptr<SatSolver> make_brute_force_solver();

/// Enumerates the padded instance on the schedule that makes its incremental
/// exponent 1/t: padding integers first at constant cost each, then one
/// solver call, then the found model's duplicates, then an exhaustive scan
/// of the remaining assignments each with its duplicates.
std::unique_ptr<StepwiseEnumerator> pad_enumerator(PaddedInstance inst,
                                                   std::shared_ptr<SatSolver> solver = nullptr);

}  // namespace enumkit
