#include "enumkit/pad.hpp"

#include <cstdlib>
#include <numeric>

#include "enumkit/errors.hpp"

namespace enumkit {

namespace {

// true iff m^q >= 2^e; early-outs on overflow (then certainly >=)
bool pow_at_least(std::uint64_t m, std::uint64_t q, std::uint64_t e) {
  if (m == 0) return e == 0 && q == 0;
  __uint128_t threshold = static_cast<__uint128_t>(1) << e;
  __uint128_t acc = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    acc *= m;
    if (acc >= threshold) return true;
    if (acc == 0) return true;  // wrapped; cannot happen below threshold guard
  }
  return acc >= threshold;
}

}  // namespace

std::uint64_t ceil_pow2_rational(std::uint64_t e, std::uint64_t q) {
  if (q == 0) throw usage_error("ceil_pow2_rational: zero denominator");
  if (e > 126) throw instance_too_large_error("2^" + std::to_string(e) + " exceeds range");
  if (e % q == 0) return 1ULL << (e / q);
  std::uint64_t hi_bits = e / q + 1;
  std::uint64_t lo = 1, hi = 1ULL << hi_bits;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (pow_at_least(mid, q, e))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::uint64_t max_pad_bits() {
  if (const char* env = std::getenv("ENUMKIT_MAX_PAD_BITS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 62) return v;
  }
  return 26;
}

PaddedInstance::PaddedInstance(CnfFormula f, std::uint64_t num, std::uint64_t den)
    : phi(std::move(f)), t_num(num), t_den(den) {
  if (t_num == 0 || t_den == 0 || t_num > t_den)
    throw usage_error("t must be a rational in (0,1]");
  std::uint64_t g = std::gcd(t_num, t_den);
  t_num /= g;
  t_den /= g;
  const std::uint64_t e = static_cast<std::uint64_t>(phi.n_vars) * t_num;
  const std::uint64_t cap = max_pad_bits();
  if ((e + t_den - 1) / t_den > cap)
    throw instance_too_large_error("padding count 2^(" + std::to_string(e) + "/" +
                                   std::to_string(t_den) + ") exceeds cap 2^" +
                                   std::to_string(cap));
  padding_count_ = ceil_pow2_rational(e, t_den) - 1;
}

std::string PaddedInstance::id() const {
  return "pad-t" + std::to_string(t_num) + "_" + std::to_string(t_den) + "-" + phi.id();
}

namespace {

class BruteForceSolver : public SatSolver {
 public:
  Result find_model(const CnfFormula& f) override {
    if (f.n_vars > kBruteForceVarCap)
      throw instance_too_large_error("brute-force solving capped at " +
                                     std::to_string(kBruteForceVarCap) + " variables");
    Result res;
    const std::uint64_t total = 1ULL << f.n_vars;
    for (std::uint64_t v = 0; v < total; ++v) {
      Assignment a = Assignment::from_value(v, f.n_vars);
      res.charge += std::max<std::size_t>(1, f.literal_count());
      if (evaluate(f, a)) {
        res.model = std::move(a);
        return res;
      }
    }
    return res;
  }
};

class PadEnumerator : public StepwiseEnumerator {
 public:
  PadEnumerator(PaddedInstance inst, std::shared_ptr<SatSolver> solver)
      : inst_(std::make_shared<const PaddedInstance>(std::move(inst))),
        solver_(std::move(solver)) {
    if (!solver_) solver_ = make_brute_force_solver();
    if (inst_->padding_count() == 0) phase_ = Phase::solve;
  }

  bool snapshottable() const override { return true; }
  std::unique_ptr<StepwiseEnumerator> clone() const override {
    return std::make_unique<PadEnumerator>(*this);
  }
  std::uint64_t state_size_bits() const override {
    return 256 + 2 * static_cast<std::uint64_t>(inst_->n());
  }
  std::uint64_t solution_bound_bits() const override {
    return 2 * (2 * static_cast<std::uint64_t>(inst_->n()) + 1);
  }
  std::uint64_t instance_size() const override {
    return static_cast<std::uint64_t>(inst_->n());
  }
  std::string instance_id() const override { return inst_->id(); }
  std::uint64_t state_digest() const override {
    std::uint64_t h = 0x452821e638d01377ULL ^ static_cast<std::uint64_t>(phase_);
    h = h * 0x100000001b3ULL ^ cursor_;
    h = h * 0x100000001b3ULL ^ copy_;
    return h;
  }

 protected:
  StepResult advance() override {
    StepResult r;
    const int n = inst_->n();
    switch (phase_) {
      case Phase::padding: {
        ++cursor_;
        r.kind = StepKind::output;
        r.solution = Solution("#" + Solution::from_value(cursor_).payload());
        r.charge = 1 + charge_bits(2 * (r.solution.length()));
        if (cursor_ == inst_->padding_count()) {
          phase_ = Phase::solve;
          cursor_ = 0;
        }
        return r;
      }
      case Phase::solve: {
        auto res = solver_->find_model(inst_->phi);
        r.charge = res.charge;
        if (!res.model) {
          r.kind = StepKind::done;
          return r;
        }
        model_value_ = res.model->to_value();
        phase_ = Phase::duplicates;
        copy_ = 0;
        return r;
      }
      case Phase::duplicates: {
        r.kind = StepKind::output;
        r.solution = duplicate_solution(model_value_, copy_);
        r.charge = 1 + charge_bits(r.solution.size_bits());
        ++copy_;
        if (copy_ == (1ULL << n)) {
          phase_ = Phase::scan;
          cursor_ = model_value_;  // scan resumes after the solved model
          copy_ = 0;
        }
        return r;
      }
      case Phase::scan: {
        ++cursor_;
        if (cursor_ >= (1ULL << n)) {
          r.kind = StepKind::done;
          return r;
        }
        Assignment a = Assignment::from_value(cursor_, n);
        r.charge = std::max<std::size_t>(1, inst_->phi.literal_count());
        if (evaluate(inst_->phi, a)) {
          model_value_ = cursor_;
          phase_ = Phase::duplicates;
          copy_ = 0;
        }
        return r;
      }
    }
    throw usage_error("unreachable pad phase");
  }

 private:
  Solution duplicate_solution(std::uint64_t model, std::uint64_t copy) const {
    const int n = inst_->n();
    std::string payload = Assignment::from_value(model, n).to_solution().payload();
    payload += '#';
    payload += Solution::from_value(copy, static_cast<std::size_t>(n)).payload();
    return Solution(std::move(payload));
  }

  enum class Phase { padding, solve, duplicates, scan };
  std::shared_ptr<const PaddedInstance> inst_;
  std::shared_ptr<SatSolver> solver_;
  Phase phase_ = Phase::padding;
  std::uint64_t cursor_ = 0;       // padding value emitted / scan position
  std::uint64_t model_value_ = 0;  // assignment being duplicated
  std::uint64_t copy_ = 0;
};

}  // namespace

std::shared_ptr<SatSolver> make_brute_force_solver() {
  return std::make_shared<BruteForceSolver>();
}

std::unique_ptr<StepwiseEnumerator> pad_enumerator(PaddedInstance inst,
                                                   std::shared_ptr<SatSolver> solver) {
  return std::make_unique<PadEnumerator>(std::move(inst), std::move(solver));
}

}  // namespace enumkit
