#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace enumkit {

/// One enumerated solution: a finite word over {0,1,#}. Equality is payload
/// equality. Space accounting uses two bits per symbol (three-letter
/// alphabet).
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::string payload);

  /// Builds a solution from the binary digits of `value`, most significant
  /// bit first, optionally left-padded with zeros to `width` symbols.
  static Solution from_value(std::uint64_t value, std::size_t width = 0);

  const std::string& payload() const { return payload_; }
  std::size_t length() const { return payload_.size(); }
  std::uint64_t size_bits() const { return 2 * static_cast<std::uint64_t>(payload_.size()); }

  std::string to_hex() const;
  static Solution from_hex(const std::string& hex);

  friend auto operator<=>(const Solution& a, const Solution& b) = default;

 private:
  std::string payload_;
};

/// Ordered set of solutions with bit-size accounting.
class SolutionSet {
 public:
  bool contains(const Solution& s) const { return items_.count(s) != 0; }
  bool insert(const Solution& s);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::uint64_t size_bits() const { return payload_bits_; }
  const std::set<Solution>& items() const { return items_; }

 private:
  std::set<Solution> items_;
  std::uint64_t payload_bits_ = 0;
};

/// Ternary trie keyed on payload symbols; membership and insert walk one node
/// per symbol. This is the dedup structure whose memory grows with the number
/// of stored solutions, in contrast to the sketch.
class SolutionTrie {
 public:
  SolutionTrie() { nodes_.push_back(Node{}); }

  /// Inserts the solution, returning true when it was not present before.
  bool insert(const Solution& s);
  bool contains(const Solution& s) const;
  std::size_t size() const { return count_; }
  std::uint64_t size_bits() const;

 private:
  struct Node {
    std::int32_t child[3] = {-1, -1, -1};
    bool terminal = false;
  };
  static int symbol_index(char c);
  std::vector<Node> nodes_;
  std::size_t count_ = 0;
};

}  // namespace enumkit
