#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "enumkit/solution.hpp"

namespace enumkit {

/// Parameters shared by the sampling-based enumerators.
struct SamplingConfig {
  double epsilon = 0.5;      // failure probability budget, in (0,1)
  std::uint64_t p_bits = 8;  // declared solution-size bound in bits
  std::uint64_t seed = 1;

  void validate() const;
};

/// Randomized source of solutions. Uniform generators draw every member of
/// the solution set with equal probability; a b-biased generator guarantees
/// each member probability at least 1/(|A(x)|*b).
class SolutionGenerator {
 public:
  struct Draw {
    Solution solution;
    std::uint64_t charge = 1;
  };

  virtual ~SolutionGenerator() = default;

  virtual Draw draw() = 0;

  /// Declared bias bound b >= 1; exactly 1 means uniform.
  virtual double bias_bound() const { return 1.0; }
  bool uniform() const { return bias_bound() == 1.0; }

  /// Membership test when the instance supports one; nullopt when unknown.
  virtual std::optional<bool> check_member(const Solution&) const { return std::nullopt; }

  virtual std::uint64_t state_size_bits() const = 0;
  virtual std::uint64_t instance_size() const = 0;
  virtual std::uint64_t solution_bound_bits() const = 0;
  virtual std::string instance_id() const { return "generator"; }
};

}  // namespace enumkit
