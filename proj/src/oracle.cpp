#include "twinwidth/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "twinwidth/errors.hpp"

namespace tww {

namespace {

struct Node {
    Trigraph quotient;
    std::uint32_t width;
    std::size_t parent;    // index into the previous layer's arena
    ContractionPair step;  // pair taken to reach this node
};

// Memo key: for each original live vertex in ascending order, the label of
// its current group (the group's minimum element). Independent of the
// canonical_key serialization used elsewhere.
std::string rep_key(const std::vector<VertexId>& order,
                    const std::vector<VertexId>& rep) {
    std::string key;
    key.resize(order.size() * sizeof(VertexId));
    char* out = key.data();
    for (VertexId v : order) {
        std::memcpy(out, &rep[v], sizeof(VertexId));
        out += sizeof(VertexId);
    }
    return key;
}

} // namespace

OracleResult oracle_twinwidth(const Trigraph& g, std::uint32_t cap,
                              bool restrict_candidates) {
    if (g.live_count() > cap)
        throw error("oracle: instance has " + std::to_string(g.live_count()) +
                    " vertices, cap is " + std::to_string(cap));

    const std::vector<VertexId> order = g.live_vertices();
    if (order.size() <= 1)
        return {g.max_red_degree(), {}};

    struct Entry {
        std::size_t node;
    };
    std::vector<std::vector<Node>> layers(order.size());
    std::vector<VertexId> rep0(g.capacity() + 1, 0);
    for (VertexId v : order)
        rep0[v] = v;
    layers[0].push_back({g, g.max_red_degree(), 0, {0, 0}});

    // Reach-widths at layer l are final once layer l-1 is fully relaxed:
    // every transition moves exactly one layer down.
    std::vector<std::vector<VertexId>> reps{rep0};
    std::vector<std::vector<VertexId>> next_reps;
    std::unordered_map<std::string, Entry> frontier;

    for (std::size_t l = 0; l + 1 < order.size(); ++l) {
        frontier.clear();
        next_reps.clear();
        auto& layer = layers[l];
        auto& next = layers[l + 1];
        for (std::size_t idx = 0; idx < layer.size(); ++idx) {
            const std::uint32_t base_width = layer[idx].width;
            std::vector<ContractionPair> pairs;
            if (restrict_candidates)
                pairs = layer[idx].quotient.candidate_pairs();
            if (pairs.empty()) {
                // Unrestricted mode, or a quotient whose live vertices are
                // all isolated: enumerate every live pair.
                const auto live = layer[idx].quotient.live_vertices();
                for (std::size_t i = 0; i < live.size(); ++i)
                    for (std::size_t j = i + 1; j < live.size(); ++j)
                        pairs.push_back({live[i], live[j]});
            }
            for (const auto& p : pairs) {
                Trigraph child = layer[idx].quotient;
                const std::uint32_t after = child.contract(p);
                const std::uint32_t w = std::max(base_width, after);

                std::vector<VertexId> rep = reps[idx];
                for (VertexId v : order)
                    if (rep[v] == p.removed)
                        rep[v] = p.survivor;
                std::string key = rep_key(order, rep);

                auto it = frontier.find(key);
                if (it == frontier.end()) {
                    frontier.emplace(std::move(key), Entry{next.size()});
                    next.push_back({std::move(child), w, idx, p});
                    next_reps.push_back(std::move(rep));
                } else if (w < next[it->second.node].width) {
                    next[it->second.node] = {std::move(child), w, idx, p};
                    next_reps[it->second.node] = std::move(rep);
                }
            }
        }
        reps.swap(next_reps);
    }

    const auto& last = layers.back();
    std::size_t best = 0;
    for (std::size_t i = 1; i < last.size(); ++i)
        if (last[i].width < last[best].width)
            best = i;

    OracleResult result;
    result.width = last[best].width;
    std::size_t at = best;
    for (std::size_t l = order.size() - 1; l >= 1; --l) {
        result.witness.push_back(layers[l][at].step);
        at = layers[l][at].parent;
    }
    std::reverse(result.witness.begin(), result.witness.end());
    return result;
}

OracleResult oracle_twinwidth(const Instance& inst, std::uint32_t cap,
                              bool restrict_candidates) {
    return oracle_twinwidth(to_trigraph(inst), cap, restrict_candidates);
}

} // namespace tww
