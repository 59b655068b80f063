#pragma once

#include <cstdint>

#include "twinwidth/pace_io.hpp"
#include "twinwidth/trigraph.hpp"

namespace tww {

struct OracleResult {
    std::uint32_t width = 0;
    ContractionSequence witness;
};

// Exhaustive minimum over all contraction sequences, memoized on the vertex
// partition (the trigraph after a prefix depends only on the partition).
// Transitions range over all live pairs unless restrict_candidates limits
// them to pairs at distance <= 2 in the current quotient. Throws error when
// the live vertex count exceeds cap.
OracleResult oracle_twinwidth(const Trigraph& g, std::uint32_t cap = 8,
                              bool restrict_candidates = false);
OracleResult oracle_twinwidth(const Instance& inst, std::uint32_t cap = 8,
                              bool restrict_candidates = false);

} // namespace tww
