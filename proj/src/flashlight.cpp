#include "enumkit/flashlight.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

namespace {

class BruteForceOracle : public ExtensionOracle {
 public:
  explicit BruteForceOracle(OracleCharging charging) : charging_(charging) {}

  Answer query(const CnfFormula& f, const std::vector<std::uint8_t>& prefix) override {
    ExtensionAnswer ans = brute_force_extendable(f, prefix);
    Answer out;
    out.extendable = ans.extendable;
    out.charge = charging_ == OracleCharging::unit ? 1 : std::max<std::uint64_t>(1, ans.work);
    return out;
  }

 private:
  OracleCharging charging_;
};

}  // namespace

std::shared_ptr<ExtensionOracle> make_brute_force_oracle(OracleCharging charging) {
  return std::make_shared<BruteForceOracle>(charging);
}

FlashlightAllSat::FlashlightAllSat(CnfFormula f, std::shared_ptr<ExtensionOracle> oracle)
    : formula_(std::make_shared<const CnfFormula>(std::move(f))), oracle_(std::move(oracle)) {
  if (!oracle_) oracle_ = make_brute_force_oracle();
  prefix_.reserve(static_cast<std::size_t>(formula_->n_vars));
}

std::unique_ptr<StepwiseEnumerator> FlashlightAllSat::clone() const {
  return std::make_unique<FlashlightAllSat>(*this);
}

std::uint64_t FlashlightAllSat::state_size_bits() const {
  return 2 * static_cast<std::uint64_t>(formula_->n_vars) + 128;
}

std::uint64_t FlashlightAllSat::solution_bound_bits() const {
  return 2 * static_cast<std::uint64_t>(formula_->n_vars);
}

std::uint64_t FlashlightAllSat::instance_size() const {
  return static_cast<std::uint64_t>(formula_->n_vars);
}

std::string FlashlightAllSat::instance_id() const { return "allsat-" + formula_->id(); }

std::uint64_t FlashlightAllSat::state_digest() const {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<std::uint64_t>(phase_);
  for (auto b : prefix_) h = (h * 0x100000001b3ULL) ^ (b + 1);
  h ^= prefix_.size();
  return h;
}

StepResult FlashlightAllSat::advance() {
  StepResult r;
  const int n = formula_->n_vars;
  switch (phase_) {
    case Phase::probe_root: {
      auto ans = oracle_->query(*formula_, prefix_);
      r.charge = 1 + ans.charge;
      if (!ans.extendable) {
        r.kind = StepKind::done;
        return r;
      }
      phase_ = Phase::at_node;
      return r;
    }
    case Phase::at_node: {
      if (static_cast<int>(prefix_.size()) == n) {
        Assignment a{prefix_};
        if (!evaluate(*formula_, a))
          throw contract_error("extension oracle admitted an unsatisfying leaf");
        r.kind = StepKind::output;
        r.solution = a.to_solution();
        r.charge = 1 + charge_bits(2 * static_cast<std::uint64_t>(n));
        phase_ = Phase::backtrack;
        return r;
      }
      prefix_.push_back(0);
      auto ans = oracle_->query(*formula_, prefix_);
      r.charge = 1 + ans.charge;
      if (!ans.extendable) {
        prefix_.pop_back();
        phase_ = Phase::try_one;
        one_must_extend_ = true;
      }
      return r;
    }
    case Phase::try_one: {
      prefix_.push_back(1);
      auto ans = oracle_->query(*formula_, prefix_);
      r.charge = 1 + ans.charge;
      if (ans.extendable) {
        phase_ = Phase::at_node;
        return r;
      }
      prefix_.pop_back();
      if (one_must_extend_)
        throw contract_error("extension oracle admitted a node with two empty children");
      phase_ = Phase::backtrack;
      return r;
    }
    case Phase::backtrack: {
      if (prefix_.empty()) {
        r.kind = StepKind::done;
        return r;
      }
      std::uint8_t v = prefix_.back();
      prefix_.pop_back();
      if (v == 0) {
        phase_ = Phase::try_one;
        one_must_extend_ = false;
      }
      return r;
    }
  }
  throw usage_error("unreachable flashlight phase");
}

std::unique_ptr<FlashlightAllSat> flashlight_allsat(CnfFormula f,
                                                    std::shared_ptr<ExtensionOracle> oracle) {
  return std::make_unique<FlashlightAllSat>(std::move(f), std::move(oracle));
}

}  // namespace enumkit
