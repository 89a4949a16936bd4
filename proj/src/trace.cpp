#include "enumkit/trace.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "enumkit/errors.hpp"

namespace enumkit {

std::uint64_t EnumerationTrace::delay_before(std::size_t i) const {
  if (i >= output_times.size()) throw usage_error("delay_before: index out of range");
  if (i == 0) return output_times[0] - precomputation_steps;
  return output_times[i] - output_times[i - 1];
}

std::uint64_t EnumerationTrace::max_delay(bool include_prefix) const {
  std::uint64_t best = 0;
  for (std::size_t i = include_prefix ? 0 : 1; i < output_times.size(); ++i)
    best = std::max(best, delay_before(i));
  return best;
}

double EnumerationTrace::average_delay() const {
  if (output_times.empty()) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < output_times.size(); ++i) {
    double t = static_cast<double>(output_times[i] - precomputation_steps);
    worst = std::max(worst, t / static_cast<double>(i + 1));
  }
  return worst;
}

EnumerationTrace record_trace(StepwiseEnumerator& e, std::uint64_t step_budget) {
  EnumerationTrace t;
  t.instance_id = e.instance_id();
  t.instance_size = e.instance_size();
  t.peak_space_bits = e.state_size_bits();
  while (!e.finished() && t.total_steps < step_budget) {
    StepResult r = e.step();
    t.total_steps += r.charge;
    if (r.precomputation_done) t.precomputation_steps = t.total_steps;
    if (r.kind == StepKind::output) {
      t.output_times.push_back(t.total_steps);
      t.solutions.push_back(std::move(r.solution));
    }
    t.peak_space_bits = std::max(t.peak_space_bits, e.state_size_bits());
  }
  t.truncated = !e.finished();
  return t;
}

std::vector<std::uint64_t> detect_gaps(const EnumerationTrace& t, std::uint64_t p) {
  if (p == 0) throw usage_error("detect_gaps: p must be positive");
  std::vector<std::uint64_t> gaps;
  for (std::size_t i = 0; i < t.output_times.size(); ++i)
    if (t.delay_before(i) > p) gaps.push_back(i);
  return gaps;
}

namespace {

long double pow_u(std::uint64_t base, std::uint64_t exp) {
  long double r = 1.0L;
  for (std::uint64_t i = 0; i < exp; ++i) r *= static_cast<long double>(base);
  return r;
}

}  // namespace

double tightest_constant(const EnumerationTrace& t, std::uint64_t a, std::uint64_t b,
                         std::uint64_t n) {
  long double best = 0.0L;
  for (std::size_t i = 0; i < t.output_times.size(); ++i) {
    const std::uint64_t m = i + 1;
    long double denom = pow_u(m, a) * pow_u(n, b);
    long double tm = static_cast<long double>(t.output_times[i] - t.precomputation_steps);
    best = std::max(best, tm / denom);
  }
  return static_cast<double>(best);
}

IncrementalFit check_incremental(const EnumerationTrace& t, std::uint64_t a,
                                 std::uint64_t n, double c_cap, std::uint64_t b_cap) {
  if (t.truncated) throw usage_error("check_incremental needs a complete trace");
  IncrementalFit fit;
  for (std::uint64_t b = 0; b <= b_cap; ++b) {
    double c = tightest_constant(t, a, b, n);
    if (c <= c_cap) {
      fit.ok = true;
      fit.b = b;
      fit.c = c;
      return fit;
    }
  }
  fit.ok = false;
  fit.b = b_cap;
  fit.c = tightest_constant(t, a, b_cap, n);
  // first m exceeding the cap at the most generous exponent
  for (std::size_t i = 0; i < t.output_times.size(); ++i) {
    const std::uint64_t m = i + 1;
    long double denom = pow_u(m, a) * pow_u(n, b_cap);
    long double v = static_cast<long double>(t.output_times[i] - t.precomputation_steps) / denom;
    if (v > c_cap) {
      fit.violation_m = m;
      break;
    }
  }
  return fit;
}

void write_trace_csv(const EnumerationTrace& t, std::ostream& out) {
  nlohmann::ordered_json header;
  header["instance"] = t.instance_id;
  header["n"] = t.instance_size;
  header["cost_model"] = "unit-yield/word-arith";
  header["peak_space_bits"] = t.peak_space_bits;
  header["truncated"] = t.truncated;
  header["precomputation_steps"] = t.precomputation_steps;
  header["total_steps"] = t.total_steps;
  out << "# " << header.dump() << "\n";
  out << "index,cumulative_steps,solution_hex\n";
  for (std::size_t i = 0; i < t.output_times.size(); ++i)
    out << (i + 1) << ',' << t.output_times[i] << ',' << t.solutions[i].to_hex() << "\n";
}

std::string trace_to_csv(const EnumerationTrace& t) {
  std::ostringstream ss;
  write_trace_csv(t, ss);
  return ss.str();
}

}  // namespace enumkit
