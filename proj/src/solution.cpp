#include "enumkit/solution.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

namespace {
const char kHexDigits[] = "0123456789abcdef";
}

Solution::Solution(std::string payload) : payload_(std::move(payload)) {
  for (char c : payload_) {
    if (c != '0' && c != '1' && c != '#')
      throw usage_error(std::string("solution payload symbol '") + c + "' not in {0,1,#}");
  }
}

Solution Solution::from_value(std::uint64_t value, std::size_t width) {
  std::string bits;
  do {
    bits.push_back(static_cast<char>('0' + (value & 1)));
    value >>= 1;
  } while (value != 0);
  while (bits.size() < width) bits.push_back('0');
  return Solution(std::string(bits.rbegin(), bits.rend()));
}

std::string Solution::to_hex() const {
  std::string out;
  out.reserve(2 * payload_.size());
  for (unsigned char c : payload_) {
    out.push_back(kHexDigits[c >> 4]);
    out.push_back(kHexDigits[c & 0xf]);
  }
  return out;
}

Solution Solution::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw usage_error("hex payload with odd digit count: " + hex);
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw usage_error(std::string("bad hex digit '") + c + "'");
  };
  std::string payload;
  payload.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    payload.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return Solution(std::move(payload));
}

bool SolutionSet::insert(const Solution& s) {
  auto [it, fresh] = items_.insert(s);
  if (fresh) payload_bits_ += s.size_bits();
  return fresh;
}

int SolutionTrie::symbol_index(char c) {
  switch (c) {
    case '0': return 0;
    case '1': return 1;
    default: return 2;
  }
}

bool SolutionTrie::insert(const Solution& s) {
  std::int32_t cur = 0;
  for (char c : s.payload()) {
    int ix = symbol_index(c);
    if (nodes_[cur].child[ix] < 0) {
      nodes_[cur].child[ix] = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(Node{});
    }
    cur = nodes_[cur].child[ix];
  }
  if (nodes_[cur].terminal) return false;
  nodes_[cur].terminal = true;
  ++count_;
  return true;
}

bool SolutionTrie::contains(const Solution& s) const {
  std::int32_t cur = 0;
  for (char c : s.payload()) {
    cur = nodes_[cur].child[symbol_index(c)];
    if (cur < 0) return false;
  }
  return nodes_[cur].terminal;
}

std::uint64_t SolutionTrie::size_bits() const {
  // three child indices plus the terminal flag per node
  return static_cast<std::uint64_t>(nodes_.size()) * (3 * 32 + 8);
}

}  // namespace enumkit
