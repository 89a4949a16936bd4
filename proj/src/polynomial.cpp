#include "enumkit/polynomial.hpp"

#include <limits>
#include <sstream>

#include "enumkit/errors.hpp"

namespace enumkit {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kMax / b) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kMax - b) ? kMax : a + b;
}

}  // namespace

std::uint64_t Polynomial::eval(std::uint64_t n) const {
  std::uint64_t acc = 0;
  std::uint64_t pow = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    acc = sat_add(acc, sat_mul(coeffs_[i], pow));
    if (i + 1 < coeffs_.size()) pow = sat_mul(pow, n);
  }
  return acc;
}

bool Polynomial::zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

Polynomial Polynomial::parse(const std::string& text) {
  std::vector<std::uint64_t> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      coeffs.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::exception&) {
      throw usage_error("bad polynomial coefficient '" + item + "' in '" + text + "'");
    }
  }
  if (coeffs.empty()) throw usage_error("empty polynomial '" + text + "'");
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace enumkit
