#include "enumkit/explicit_set.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "enumkit/cost.hpp"
#include "enumkit/errors.hpp"
#include "enumkit/rng.hpp"

namespace enumkit {

void ExplicitSet::validate() const {
  std::set<Solution> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second)
      throw usage_error("explicit set has duplicate element " + e.to_hex());
  if (!weights.empty()) {
    if (weights.size() != elements.size())
      throw usage_error("weight count does not match element count");
    for (double w : weights)
      if (!(w > 0.0)) throw usage_error("weights must be positive");
  }
}

ExplicitSet ExplicitSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open explicit-set file " + path);
  ExplicitSet set;
  std::string line;
  std::size_t line_no = 0;
  bool any_weight = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string hex;
    if (!(ss >> hex)) continue;
    if (hex[0] == '#') continue;
    try {
      set.elements.push_back(Solution::from_hex(hex));
    } catch (const usage_error& e) {
      throw parse_error(e.what(), line_no);
    }
    double w;
    if (ss >> w) {
      if (!any_weight && set.elements.size() > 1)
        throw parse_error("weight column must be present from the first entry", line_no);
      any_weight = true;
      set.weights.push_back(w);
    } else if (any_weight) {
      throw parse_error("missing weight", line_no);
    }
  }
  set.validate();
  return set;
}

void ExplicitSet::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write explicit-set file " + path);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out << elements[i].to_hex();
    if (!weights.empty()) out << ' ' << weights[i];
    out << '\n';
  }
}

double ExplicitSet::derived_bias() const {
  if (weights.empty() || elements.empty()) return 1.0;
  double total = 0.0, least = weights[0];
  for (double w : weights) {
    total += w;
    least = std::min(least, w);
  }
  double b = total / (least * static_cast<double>(elements.size()));
  return std::max(1.0, b);
}

namespace {

class ExplicitSetGenerator : public SolutionGenerator {
 public:
  ExplicitSetGenerator(ExplicitSet set, std::uint64_t seed, double declared_bias)
      : set_(std::move(set)), rng_(seed) {
    if (set_.elements.empty())
      throw usage_error("a generator over an empty solution set cannot exist");
    set_.validate();
    max_bits_ = 0;
    for (const auto& e : set_.elements) max_bits_ = std::max(max_bits_, e.size_bits());
    if (!set_.weights.empty()) {
      cumulative_.reserve(set_.weights.size());
      double acc = 0.0;
      for (double w : set_.weights) cumulative_.push_back(acc += w);
      double least = *std::min_element(set_.weights.begin(), set_.weights.end());
      double min_prob = least / cumulative_.back();
      bias_ = declared_bias > 0.0 ? declared_bias : set_.derived_bias();
      if (min_prob + 1e-12 < 1.0 / (static_cast<double>(set_.elements.size()) * bias_))
        throw contract_error("weights violate the declared bias bound");
    } else if (declared_bias > 1.0) {
      bias_ = declared_bias;  // caller may under-promise on a uniform set
    }
  }

  Draw draw() override {
    std::size_t ix;
    if (cumulative_.empty()) {
      ix = static_cast<std::size_t>(rng_.next_below(set_.elements.size()));
    } else {
      double u = rng_.next_double() * cumulative_.back();
      ix = static_cast<std::size_t>(
          std::lower_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
      if (ix >= cumulative_.size()) ix = cumulative_.size() - 1;
    }
    return Draw{set_.elements[ix], 1 + charge_bits(max_bits_)};
  }

  double bias_bound() const override { return bias_; }

  std::optional<bool> check_member(const Solution& s) const override {
    for (const auto& e : set_.elements)
      if (e == s) return true;
    return false;
  }

  std::uint64_t state_size_bits() const override { return Rng::state_bits; }
  std::uint64_t instance_size() const override { return set_.elements.size(); }
  std::uint64_t solution_bound_bits() const override { return max_bits_; }
  std::string instance_id() const override {
    return "explicit-s" + std::to_string(set_.elements.size());
  }

 private:
  ExplicitSet set_;
  Rng rng_;
  std::vector<double> cumulative_;
  double bias_ = 1.0;
  std::uint64_t max_bits_ = 0;
};

}  // namespace

std::unique_ptr<SolutionGenerator> explicit_generator(ExplicitSet set, std::uint64_t seed,
                                                      double declared_bias) {
  return std::make_unique<ExplicitSetGenerator>(std::move(set), seed, declared_bias);
}

ExplicitSet make_counter_set(std::uint64_t count, std::size_t width) {
  ExplicitSet set;
  if (width == 0) {
    width = 1;
    while ((1ULL << width) < count) ++width;
  }
  set.elements.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v)
    set.elements.push_back(Solution::from_value(v, width));
  return set;
}

}  // namespace enumkit
