#pragma once

#include <utility>
#include <vector>

#include "twinwidth/trigraph.hpp"

namespace tww {

struct Component {
    std::vector<VertexId> vertices; // ascending
    Trigraph graph;                 // induced subtrigraph, labels preserved
};

struct ComponentPlan {
    std::vector<Component> components; // descending size, ties by min label
};

// Contracts free pairs (canonical first) to a fixpoint. Black-only inputs
// stay black-only: each free contraction adds no red edge.
std::pair<Trigraph, ContractionSequence> eliminate_twins(Trigraph g);

ComponentPlan split_components(const Trigraph& g);

// prelude ++ component sequences ++ fold of the survivors onto the smallest
// label. The tail joins edge-free vertices, so assembled width is the max
// over the parts.
ContractionSequence assemble_solution(const ContractionSequence& prelude,
                                      const std::vector<ContractionSequence>& per_component,
                                      const std::vector<VertexId>& survivors);

} // namespace tww
