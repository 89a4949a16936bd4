#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace enumkit {

/// Polynomial with nonnegative integer coefficients, lowest degree first.
/// Used for declared delay/average-delay/gap-count bounds; evaluation
/// saturates at uint64 max rather than wrapping.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  static Polynomial constant(std::uint64_t c) { return Polynomial({c}); }

  std::uint64_t eval(std::uint64_t n) const;
  bool zero() const;
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  /// Parses a comma-separated coefficient list, lowest degree first ("3,0,1").
  static Polynomial parse(const std::string& text);
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Worst-case delay target p, average delay h and gap budget/density q,
/// bundled the way the regularizers consume them.
struct DelayBound {
  Polynomial p;
  Polynomial h;
  Polynomial q;
};

}  // namespace enumkit
