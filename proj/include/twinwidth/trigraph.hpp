#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tww {

// Vertex labels are 1-based and stable: a contraction's survivor keeps its
// original label, removed labels are never reused.
using VertexId = std::uint32_t;

enum class EdgeColor : std::uint8_t { Black, Red };

// One contraction step: `removed` is merged into `survivor`.
struct ContractionPair {
    VertexId survivor = 0;
    VertexId removed = 0;
    friend bool operator==(const ContractionPair&, const ContractionPair&) = default;
    friend auto operator<=>(const ContractionPair&, const ContractionPair&) = default;
};

using ContractionSequence = std::vector<ContractionPair>;

// Graph with black and red edges, contracted step by step. Adjacency is kept
// as sorted neighbor lists per color; red degrees are maintained incrementally
// through a per-degree histogram so max_red_degree() is O(1).
class Trigraph {
public:
    // n isolated vertices labeled 1..n. n must be >= 1.
    explicit Trigraph(VertexId n);
    // Black-only graph. Rejects out-of-range labels, self-loops, duplicate edges.
    Trigraph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& black_edges);

    VertexId capacity() const { return static_cast<VertexId>(verts_.size() - 1); }
    std::uint32_t live_count() const { return live_count_; }
    bool is_live(VertexId v) const { return v >= 1 && v < verts_.size() && verts_[v].live; }
    std::vector<VertexId> live_vertices() const;

    std::span<const VertexId> black_neighbors(VertexId v) const { return verts_[v].black; }
    std::span<const VertexId> red_neighbors(VertexId v) const { return verts_[v].red; }
    std::uint32_t red_degree(VertexId v) const { return static_cast<std::uint32_t>(verts_[v].red.size()); }
    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(verts_[v].black.size() + verts_[v].red.size());
    }
    std::uint32_t max_red_degree() const { return max_red_; }
    std::optional<EdgeColor> edge_color(VertexId u, VertexId v) const;

    // Merges p.removed into p.survivor: common black neighbors stay black,
    // every other combined neighbor turns red. Returns the updated
    // max_red_degree. Rejects dead or equal endpoints.
    std::uint32_t contract(ContractionPair p);

    struct ContractProbe {
        std::uint32_t new_max_red_degree = 0;
        std::uint32_t merged_red_degree = 0;
    };
    // Same outcome contract() would report, without mutating the graph.
    ContractProbe probe_contract(ContractionPair p) const;

    // Unordered live pairs that are adjacent or share a neighbor, smaller
    // label as survivor, sorted.
    std::vector<ContractionPair> candidate_pairs() const;
    // Pairs whose black neighborhoods (excluding the pair itself) are equal,
    // i.e. contracting them adds no red adjacency on a black-only graph.
    std::vector<ContractionPair> free_pairs() const;
    // Pairs with equal black AND equal red neighborhoods (excluding the pair
    // itself). Contracting such a pair is equivalent to deleting one vertex,
    // so it never hurts the best completion width.
    std::vector<ContractionPair> twin_pairs() const;
    std::optional<ContractionPair> first_twin_pair() const;

    // Subtrigraph induced by `keep` (labels preserved). Rejects dead vertices
    // and empty keep sets.
    Trigraph induced(const std::vector<VertexId>& keep) const;

    // Trigraph determined by a partition of base's live vertices into groups:
    // black between fully adjacent groups, red between partially adjacent
    // ones. Each group is labeled by its minimum element. base must be
    // black-only; groups must be disjoint, nonempty and cover base.
    static Trigraph quotient(const Trigraph& base,
                             const std::vector<std::vector<VertexId>>& groups);

    std::size_t memory_footprint() const;
    bool operator==(const Trigraph& other) const;

    // Full recompute of every cached index; throws std::logic_error on any
    // mismatch. Test hook, not called on the hot path.
    void validate() const;

private:
    struct VertexData {
        std::vector<VertexId> black;
        std::vector<VertexId> red;
        bool live = false;
    };

    Trigraph() = default;
    static Trigraph empty_shell(VertexId n);
    void move_red_degree(std::uint32_t old_deg, std::uint32_t new_deg);
    void settle_max_red();

    std::vector<VertexData> verts_; // index 0 unused
    std::vector<std::uint32_t> red_hist_;
    std::uint32_t live_count_ = 0;
    std::uint32_t max_red_ = 0;
};

} // namespace tww
