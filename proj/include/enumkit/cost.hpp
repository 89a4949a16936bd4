#pragma once

#include <cstdint>

namespace enumkit {

// Cost model
// ----------
// A step is one yield point of an enumerator; it reports the charge it
// consumed (at least 1 unit). Word-sized arithmetic is a unit charge;
// operations on arbitrary-size data (writing a solution, copying a snapshot)
// are charged one unit per 64-bit word via charge_bits(). Combinator
// bookkeeping is charged additively at output events, which is how the queue
// construction's own analysis counts its counter updates.

/// Charge for touching a value of the given bit width: one unit per word.
inline std::uint64_t charge_bits(std::uint64_t bits) { return bits == 0 ? 1 : (bits + 63) / 64; }

/// Fixed per-output bookkeeping charge used by the combinators (counter
/// bump, threshold compare, queue/table maintenance). Exported so bound
/// checks can state their constants exactly.
inline constexpr std::uint64_t kOutputBookCharge = 8;

}  // namespace enumkit
