#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

/// Recorded run: cumulative charged steps T(1..k) at each output, the
/// solutions in output order, and space/cost accounting.
struct EnumerationTrace {
  std::vector<std::uint64_t> output_times;
  std::vector<Solution> solutions;
  std::uint64_t total_steps = 0;
  std::uint64_t peak_space_bits = 0;
  std::uint64_t precomputation_steps = 0;
  bool truncated = false;
  std::string instance_id;
  std::uint64_t instance_size = 0;

  std::size_t size() const { return output_times.size(); }

  /// Delay preceding output index i (1-based outputs; i = 0 is the
  /// pre-first-output interval measured from the precomputation fence).
  std::uint64_t delay_before(std::size_t i) const;

  /// Largest inter-output delay, including the pre-first interval when
  /// include_prefix is set. Zero for traces with no output.
  std::uint64_t max_delay(bool include_prefix = true) const;

  /// Mean of T(k)/k after the fence; the empirical average-delay h.
  double average_delay() const;
};

/// Runs e until termination or until total charge reaches step_budget;
/// budget exhaustion sets the truncated flag rather than failing.
EnumerationTrace record_trace(StepwiseEnumerator& e,
                              std::uint64_t step_budget = UINT64_MAX);

/// Indices i with T(i+1) - T(i) > p; index 0 is the pre-first-output
/// interval measured from the precomputation fence.
std::vector<std::uint64_t> detect_gaps(const EnumerationTrace& t, std::uint64_t p);

/// Least c such that T(m) <= c * m^a * n^b for every m in the trace
/// (fence-adjusted). Infinity-free: returns 0 for empty traces.
double tightest_constant(const EnumerationTrace& t, std::uint64_t a, std::uint64_t b,
                         std::uint64_t n);

struct IncrementalFit {
  bool ok = false;
  std::uint64_t b = 0;       // chosen n-exponent
  double c = 0.0;            // tightest constant at that exponent
  std::optional<std::uint64_t> violation_m;  // argmax m when !ok
};

/// Searches the smallest b <= b_cap whose tightest constant is <= c_cap.
/// Requires a complete (non-truncated) trace.
IncrementalFit check_incremental(const EnumerationTrace& t, std::uint64_t a,
                                 std::uint64_t n, double c_cap, std::uint64_t b_cap);

/// Trace serialization: one JSON header line followed by CSV rows
/// (index, cumulative_steps, solution_hex).
void write_trace_csv(const EnumerationTrace& t, std::ostream& out);
std::string trace_to_csv(const EnumerationTrace& t);

}  // namespace enumkit
