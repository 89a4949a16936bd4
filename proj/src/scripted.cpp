#include "enumkit/scripted.hpp"

#include <cmath>

#include "enumkit/errors.hpp"

namespace enumkit {

ScriptedEnumerator::ScriptedEnumerator(Schedule schedule, std::uint64_t instance_size,
                                       std::string id)
    : n_(instance_size), id_(std::move(id)) {
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i].first == 0 || (i > 0 && schedule[i].first <= prev))
      throw usage_error("scripted schedule times must be strictly increasing and >= 1");
    prev = schedule[i].first;
    bound_bits_ = std::max(bound_bits_, schedule[i].second.size_bits());
  }
  schedule_ = std::make_shared<const Schedule>(std::move(schedule));
}

StepResult ScriptedEnumerator::advance() {
  StepResult r;
  if (next_ >= schedule_->size()) {
    r.kind = StepKind::done;
    return r;
  }
  ++clock_;
  if ((*schedule_)[next_].first == clock_) {
    r.kind = StepKind::output;
    r.solution = (*schedule_)[next_].second;
    ++next_;
  }
  return r;
}

std::unique_ptr<StepwiseEnumerator> ScriptedEnumerator::clone() const {
  return std::make_unique<ScriptedEnumerator>(*this);
}

std::uint64_t ScriptedEnumerator::state_digest() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ clock_;
  h ^= (static_cast<std::uint64_t>(next_) << 32) + 0x85ebca6bULL;
  h *= 0xc2b2ae3d27d4eb4fULL;
  return h ^ (h >> 29);
}

ScriptedEnumerator::Schedule schedule_from_times(const std::vector<std::uint64_t>& times) {
  ScriptedEnumerator::Schedule s;
  std::size_t width = 1;
  while ((1ULL << width) < times.size() + 1) ++width;
  for (std::size_t i = 0; i < times.size(); ++i)
    s.emplace_back(times[i], Solution::from_value(i, width));
  return s;
}

std::unique_ptr<ScriptedEnumerator> make_burst_enumerator(std::uint64_t count,
                                                          std::uint64_t at,
                                                          std::uint64_t instance_size) {
  std::vector<std::uint64_t> times;
  times.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) times.push_back(at + i);
  return std::make_unique<ScriptedEnumerator>(schedule_from_times(times), instance_size,
                                              "burst");
}

}  // namespace enumkit
