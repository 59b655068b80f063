#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "twinwidth/budget.hpp"
#include "twinwidth/pace_io.hpp"
#include "twinwidth/rng.hpp"
#include "twinwidth/trigraph.hpp"

namespace tww {

struct HeuristicSolution {
    ContractionSequence seq;
    std::uint32_t width = 0;
    std::vector<std::uint32_t> per_step_max; // cumulative maxima
    std::size_t plateau_start = 0;           // 1-based; 0 for empty seq
};

// Smallest 1-based i with per_step_max[i-1] == back(). Throws on empty input.
std::size_t plateau_start(const std::vector<std::uint32_t>& per_step_max);

// Greedy constructor: contracts a strict twin pair when one exists, else the
// candidate pair minimizing (post-contraction max red degree, merged-vertex
// red degree, canonical order). Width folds in prefix_width, the running
// maximum already committed by the caller's prefix.
HeuristicSolution greedy_extend(const Trigraph& g, std::uint32_t prefix_width = 0);

struct PerturbParams {
    std::uint32_t batch_size = 32; // 0: greedy seed only, no local search
    std::uint64_t rng_seed = 1;
    std::uint64_t max_rounds = std::numeric_limits<std::uint64_t>::max();
    Budget budget; // polled between batches
};

// One derived solution: re-roots pair a's survivor, swaps the role of pair
// b's removed vertex with another live vertex, replays the mutated prefix up
// to the plateau dropping invalidated pairs, then completes greedily.
HeuristicSolution perturb(const Trigraph& g, const HeuristicSolution& primary, Rng& rng);

// Plateau-driven local search: keeps the batch member with smaller width,
// else equal width and the latest plateau start. (width, -plateau_start)
// never increases.
HeuristicSolution hill_climb(const Trigraph& g, const PerturbParams& params,
                             const std::optional<HeuristicSolution>& initial = std::nullopt);

// Heuristic track on a whole instance: twin elimination, a greedy seed per
// component (so a complete solution exists immediately), budgeted hill
// climbing per component, reassembly. Always returns a complete sequence.
HeuristicSolution solve_heuristic(const Instance& inst, const PerturbParams& params);

} // namespace tww
