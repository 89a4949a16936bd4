#pragma once

#include <memory>
#include <vector>

#include "enumkit/generator.hpp"
#include "enumkit/solution.hpp"

namespace enumkit {

/// Known finite solution set, optionally weighted for biased generation.
/// File format: one hex payload per line with an optional weight column.
struct ExplicitSet {
  std::vector<Solution> elements;
  std::vector<double> weights;  // empty means uniform

  void validate() const;  // distinctness, positive weights

  static ExplicitSet load(const std::string& path);
  void save(const std::string& path) const;

  /// Smallest b with min draw probability >= 1/(|set|*b); 1 for uniform.
  double derived_bias() const;
};

/// Seeded generator over an explicit set; uniform when unweighted. A
/// declared bias bound is verified against the weights at construction.
std::unique_ptr<SolutionGenerator> explicit_generator(ExplicitSet set, std::uint64_t seed,
                                                      double declared_bias = 0.0);

/// Convenience: the uniform set {0,...,count-1} as fixed-width payloads.
ExplicitSet make_counter_set(std::uint64_t count, std::size_t width = 0);

}  // namespace enumkit
