#include "enumkit/kmv_sketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "enumkit/errors.hpp"
#include "enumkit/rng.hpp"

namespace enumkit {

namespace {

// Mersenne prime 2^61 - 1; (a*x + b) mod P is 2-universal for x < P.
constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mod_p(__uint128_t v) {
  std::uint64_t lo = static_cast<std::uint64_t>(v & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(v >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

// Calibration table v1 (tools/sketch_calibrate.cpp, seeds 1..400, streams up
// to 2^16 updates, all-prefix factor-2 check). Measured all-times failure
// rates sit well under half the budget at these settings.
KmvParams kmv_params_for_delta(double delta) {
  struct Row {
    double delta;
    KmvParams params;
  };
  static const Row kTable[] = {
      {0.25, {32, 3}},
      {0.10, {32, 5}},
      {0.05, {64, 5}},
  };
  if (!(delta > 0.0 && delta < 1.0)) throw usage_error("sketch delta must be in (0,1)");
  for (const Row& row : kTable)
    if (delta >= row.delta - 1e-12) return row.params;
  // below the calibrated range: scale repetitions by the log ratio
  KmvParams base = kTable[2].params;
  double scale = std::log(1.0 / delta) / std::log(1.0 / kTable[2].delta);
  base.repetitions = static_cast<std::uint32_t>(std::ceil(base.repetitions * scale));
  return base;
}

DistinctSketch::DistinctSketch(KmvParams params, std::uint64_t seed)
    : params_(params), seed_(seed) {
  if (params_.k_min < 2 || params_.repetitions < 1)
    throw usage_error("sketch needs k_min >= 2 and at least one repetition");
  Rng rng(seed ^ 0x6b79736b65746368ULL);
  reps_.resize(params_.repetitions);
  for (auto& rep : reps_) {
    rep.a = 1 + rng.next_below(kPrime - 1);
    rep.b = rng.next_below(kPrime);
    rep.registers.reserve(params_.k_min);
  }
}

std::uint64_t DistinctSketch::rep_hash(const Repetition& rep, const Solution& e) const {
  if (hash_override_) return hash_override_(e) % kPrime;
  std::uint64_t x = fnv1a(e.payload()) % kPrime;
  return mod_p(static_cast<__uint128_t>(rep.a) * x + rep.b);
}

double DistinctSketch::rep_estimate(const Repetition& rep) const {
  if (rep.registers.size() < params_.k_min)
    return static_cast<double>(rep.registers.size());
  // k-th smallest scaled into (0,1]
  double v_k = static_cast<double>(rep.registers.back() + 1) / static_cast<double>(kPrime);
  return static_cast<double>(params_.k_min - 1) / v_k;
}

std::uint64_t DistinctSketch::update(const Solution& e) {
  std::uint64_t charge = 1;
  bool changed = false;
  for (auto& rep : reps_) {
    std::uint64_t h = rep_hash(rep, e);
    charge += 2;  // hash fold + boundary compare
    if (!rep.registers.empty() && rep.registers.size() == params_.k_min &&
        h >= rep.registers.back())
      continue;
    auto it = std::lower_bound(rep.registers.begin(), rep.registers.end(), h);
    if (it != rep.registers.end() && *it == h) continue;  // idempotent
    rep.registers.insert(it, h);
    if (rep.registers.size() > params_.k_min) rep.registers.pop_back();
    charge += params_.k_min / 8 + 1;  // shift within the register window
    changed = true;
  }
  if (changed) {
    refresh_estimate();
    charge += params_.repetitions;
  }
  return charge;
}

void DistinctSketch::refresh_estimate() {
  std::vector<double> ests;
  ests.reserve(reps_.size());
  for (const auto& rep : reps_) ests.push_back(rep_estimate(rep));
  std::nth_element(ests.begin(), ests.begin() + ests.size() / 2, ests.end());
  double med = ests[ests.size() / 2];
  if (reps_.size() % 2 == 0) {
    double lo = *std::max_element(ests.begin(), ests.begin() + ests.size() / 2);
    med = (med + lo) / 2.0;
  }
  cached_estimate_ = med;
}

std::uint64_t DistinctSketch::size_bits() const {
  std::uint64_t regs = 0;
  for (const auto& rep : reps_) regs += rep.registers.size();
  // 64-bit registers plus per-repetition hash coefficients and the header
  return regs * 64 + reps_.size() * 128 + 192;
}

std::vector<std::uint8_t> DistinctSketch::serialize() const {
  std::vector<std::uint8_t> blob;
  auto put64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) blob.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  blob.push_back('K');
  blob.push_back('M');
  blob.push_back('V');
  blob.push_back(1);  // version
  put64(params_.k_min);
  put64(params_.repetitions);
  put64(seed_);
  for (const auto& rep : reps_) {
    put64(rep.a);
    put64(rep.b);
    put64(rep.registers.size());
    for (auto r : rep.registers) put64(r);
  }
  return blob;
}

DistinctSketch DistinctSketch::deserialize(const std::vector<std::uint8_t>& blob) {
  std::size_t pos = 0;
  auto get64 = [&]() -> std::uint64_t {
    if (pos + 8 > blob.size()) throw usage_error("truncated sketch blob");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(blob[pos++]) << (8 * i);
    return v;
  };
  if (blob.size() < 4 || blob[0] != 'K' || blob[1] != 'M' || blob[2] != 'V')
    throw usage_error("not a sketch blob");
  if (blob[3] != 1) throw usage_error("unsupported sketch blob version");
  pos = 4;
  KmvParams params;
  params.k_min = static_cast<std::uint32_t>(get64());
  params.repetitions = static_cast<std::uint32_t>(get64());
  std::uint64_t seed = get64();
  DistinctSketch sk(params, seed);
  for (auto& rep : sk.reps_) {
    rep.a = get64();
    rep.b = get64();
    std::uint64_t count = get64();
    rep.registers.clear();
    for (std::uint64_t i = 0; i < count; ++i) rep.registers.push_back(get64());
  }
  sk.refresh_estimate();
  return sk;
}

}  // namespace enumkit
