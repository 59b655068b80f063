#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twinwidth/budget.hpp"
#include "twinwidth/pace_io.hpp"
#include "twinwidth/rng.hpp"
#include "twinwidth/trigraph.hpp"

namespace tww {

struct Bounds {
    std::uint32_t lower = 0;
    std::uint32_t upper = 0;
    ContractionSequence upper_witness; // replays to exactly upper
};

struct ComponentResult {
    std::uint32_t width = 0;
    ContractionSequence seq;
    bool optimal = true; // false when accepted under the accept_width rule
};

// Pruning-rule bits for differential testing; all enabled by default.
inline constexpr std::uint32_t kPruneUpperBound = 1u << 0;
inline constexpr std::uint32_t kPruneDominance = 1u << 1;
inline constexpr std::uint32_t kPruneClosure = 1u << 2;
inline constexpr std::uint32_t kPruneAll =
    kPruneUpperBound | kPruneDominance | kPruneClosure;

struct SolveConfig {
    std::uint64_t seed = 1;
    Budget budget;                      // overall wall-clock budget
    double lb_budget_fraction = 0.1;    // share of budget spent on lower bounds
    std::uint32_t lb_size_cap = 20;     // max sampled-subgraph size
    std::uint32_t lb_max_subgraphs = 16;
    std::uint64_t hc_rounds = 64;       // hill-climb batches per component
    std::uint32_t hc_batch = 32;
    std::size_t memory_cap = std::size_t{8} * 1024 * 1024 * 1024;
    std::uint32_t prune_mask = kPruneAll;
};

// Groups sorted by minimum element, elements ascending, delimited; equal
// partitions give equal keys regardless of contraction order.
std::string canonical_key(const std::vector<std::vector<VertexId>>& partition);

// Max exact width over sampled induced subgraphs (BFS balls around
// high-degree seeds plus random connected subgraphs), each solved without
// further lower-bound recursion. Returns 0 when the budget is already spent.
std::uint32_t lower_bound(const Trigraph& component, const Budget& budget,
                          std::uint32_t size_cap, std::uint32_t max_subgraphs, Rng& rng);

// Layered DP over vertex partitions with upper-bound exclusion, partition
// dominance, greedy state closure, accept_width early accept, and the
// upper==lower shortcut. Throws resource_error when the time or memory
// budget dies mid-search.
ComponentResult solve_component(const Trigraph& component, Bounds bounds,
                                std::uint32_t accept_width, const SolveConfig& cfg);

struct SolveResult {
    std::uint32_t width = 0;
    ContractionSequence seq;
    bool optimal = true;
    std::string stage; // "twins" | "bounds" | "dp"
};

// Full pipeline: twin elimination, per-component hill climb and lower
// bounds, components solved in descending size with the accept_width rule,
// reassembly, and an internal verification replay.
SolveResult solve_exact(const Instance& inst, const SolveConfig& cfg = {});

} // namespace tww
