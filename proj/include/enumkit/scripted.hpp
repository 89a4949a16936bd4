#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "enumkit/enumerator.hpp"

namespace enumkit {

/// Enumerator that replays a fixed schedule of (cumulative step, solution)
/// pairs with unit charges. The workhorse for crafted delay profiles: gaps,
/// bursts and dense stretches are stated directly as output times.
class ScriptedEnumerator : public StepwiseEnumerator {
 public:
  using Schedule = std::vector<std::pair<std::uint64_t, Solution>>;

  ScriptedEnumerator(Schedule schedule, std::uint64_t instance_size,
                     std::string id = "scripted");

  bool snapshottable() const override { return true; }
  std::unique_ptr<StepwiseEnumerator> clone() const override;
  std::uint64_t state_size_bits() const override { return 192; }
  std::uint64_t solution_bound_bits() const override { return bound_bits_; }
  std::uint64_t instance_size() const override { return n_; }
  std::string instance_id() const override { return id_; }
  std::uint64_t state_digest() const override;

 protected:
  StepResult advance() override;

 private:
  std::shared_ptr<const Schedule> schedule_;
  std::uint64_t clock_ = 0;   // unit steps taken
  std::size_t next_ = 0;      // next schedule entry
  std::uint64_t n_;
  std::uint64_t bound_bits_ = 2;
  std::string id_;
};

/// Schedule from bare output times; payloads are distinct binary counters.
ScriptedEnumerator::Schedule schedule_from_times(const std::vector<std::uint64_t>& times);

/// Burst profile: count solutions at consecutive steps starting at step
/// `at` (everything arrives "at once" at unit spacing).
std::unique_ptr<ScriptedEnumerator> make_burst_enumerator(std::uint64_t count,
                                                          std::uint64_t at,
                                                          std::uint64_t instance_size);

}  // namespace enumkit
