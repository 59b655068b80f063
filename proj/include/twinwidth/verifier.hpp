#pragma once

#include <cstdint>
#include <vector>

#include "twinwidth/pace_io.hpp"
#include "twinwidth/trigraph.hpp"

namespace tww {

struct WidthReport {
    std::uint32_t width = 0;
    std::vector<std::uint32_t> per_step_max; // cumulative maxima d_1..d_{n-1}
};

// Replays seq from scratch and reports the running maximum red degree after
// each step. Requires exactly live_count-1 pairs; throws verify_error with
// the 1-based offending step on any invalid pair or length mismatch.
WidthReport verify_sequence(const Trigraph& g, const ContractionSequence& seq);
WidthReport verify_sequence(const Instance& inst, const ContractionSequence& seq);

} // namespace tww
