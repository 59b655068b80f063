#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "twinwidth/pace_io.hpp"
#include "twinwidth/rng.hpp"
#include "twinwidth/trigraph.hpp"

// Shared builders for the test suite: deterministic graph families, random
// graphs, a small-order connected-graph enumerator, and a cograph generator.
namespace twt {

using tww::VertexId;
using Edge = std::pair<VertexId, VertexId>;
using Edges = std::vector<Edge>;

inline Edges path_edges(std::uint32_t n) {
    Edges e;
    for (std::uint32_t v = 1; v < n; ++v) e.push_back({v, v + 1});
    return e;
}

inline Edges cycle_edges(std::uint32_t n) {
    Edges e = path_edges(n);
    if (n >= 3) e.push_back({1, n});
    return e;
}

inline Edges complete_edges(std::uint32_t n) {
    Edges e;
    for (std::uint32_t u = 1; u <= n; ++u)
        for (std::uint32_t v = u + 1; v <= n; ++v) e.push_back({u, v});
    return e;
}

// Star K_{1,leaves} with center 1.
inline Edges star_edges(std::uint32_t leaves) {
    Edges e;
    for (std::uint32_t v = 2; v <= leaves + 1; ++v) e.push_back({1, v});
    return e;
}

inline Edges grid_edges(std::uint32_t rows, std::uint32_t cols) {
    Edges e;
    auto id = [&](std::uint32_t r, std::uint32_t c) { return r * cols + c + 1; };
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return e;
}

inline tww::Instance make_instance(std::uint32_t n, Edges edges, std::string name = "") {
    return tww::Instance{n, std::move(edges), std::move(name)};
}

inline tww::Trigraph make_graph(std::uint32_t n, const Edges& edges) {
    return tww::Trigraph(n, edges);
}

// G(n, p): each pair independently an edge with probability ~p (20-bit grain).
inline Edges random_graph(std::uint32_t n, double p, tww::Rng& rng) {
    const std::uint64_t grain = 1u << 20;
    const auto cut = static_cast<std::uint64_t>(p * static_cast<double>(grain));
    Edges e;
    for (std::uint32_t u = 1; u <= n; ++u)
        for (std::uint32_t v = u + 1; v <= n; ++v)
            if (rng.below(grain) < cut) e.push_back({u, v});
    return e;
}

inline bool is_connected(std::uint32_t n, const Edges& edges) {
    if (n == 0) return false;
    std::vector<std::vector<std::uint32_t>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n + 1, 0);
    std::vector<std::uint32_t> stack{1};
    seen[1] = 1;
    std::uint32_t count = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        ++count;
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count == n;
}

namespace detail {

inline std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

inline bool mask_connected(int n, std::uint32_t mask,
                           const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1u) {
            int a = find(pairs[k].first), b = find(pairs[k].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    return comps == 1;
}

}  // namespace detail

// All connected graphs on n <= 6 vertices up to isomorphism (canonical form =
// minimum edge bitmask over all vertex permutations). Labels are 1-based.
inline std::vector<Edges> connected_graphs(int n) {
    if (n == 1) return {Edges{}};
    const auto pairs = detail::pair_table(n);
    const int nbits = static_cast<int>(pairs.size());

    // One remap table per permutation: edge slot k -> its image slot.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> table(nbits);
        for (int k = 0; k < nbits; ++k) {
            int a = perm[pairs[k].first], b = perm[pairs[k].second];
            if (a > b) std::swap(a, b);
            int slot = 0;
            while (pairs[slot] != std::make_pair(a, b)) ++slot;
            table[k] = slot;
        }
        remaps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Edges> out;
    for (std::uint32_t mask = 1; mask < (1u << nbits); ++mask) {
        if (!detail::mask_connected(n, mask, pairs)) continue;
        bool canonical = true;
        for (const auto& table : remaps) {
            std::uint32_t image = 0;
            for (int k = 0; k < nbits; ++k)
                if (mask >> k & 1u) image |= 1u << table[k];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Edges e;
        for (int k = 0; k < nbits; ++k)
            if (mask >> k & 1u)
                e.push_back({static_cast<VertexId>(pairs[k].first + 1),
                             static_cast<VertexId>(pairs[k].second + 1)});
        out.push_back(std::move(e));
    }
    return out;
}

namespace detail {

inline void cograph_rec(std::uint32_t lo, std::uint32_t count, tww::Rng& rng, Edges& out) {
    if (count == 1) return;
    const auto left = 1 + static_cast<std::uint32_t>(rng.below(count - 1));
    cograph_rec(lo, left, rng, out);
    cograph_rec(lo + left, count - left, rng, out);
    if (rng.below(2) == 0)  // join step; otherwise disjoint union
        for (std::uint32_t u = lo; u < lo + left; ++u)
            for (std::uint32_t v = lo + left; v < lo + count; ++v) out.push_back({u, v});
}

}  // namespace detail

// Random cograph via recursive union/join construction; always twin-width 0.
inline Edges random_cograph(std::uint32_t n, tww::Rng& rng) {
    Edges e;
    detail::cograph_rec(1, n, rng, e);
    return e;
}

}  // namespace twt
