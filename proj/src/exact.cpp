#include "twinwidth/exact.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twinwidth/errors.hpp"
#include "twinwidth/heuristic.hpp"
#include "twinwidth/preprocess.hpp"
#include "twinwidth/verifier.hpp"

namespace tww {

std::string canonical_key(const std::vector<std::vector<VertexId>>& partition) {
    std::vector<std::vector<VertexId>> groups = partition;
    for (auto& g : groups) {
        if (g.empty())
            throw std::invalid_argument("canonical_key: empty group");
        std::sort(g.begin(), g.end());
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::string key;
    for (const auto& g : groups) {
        for (VertexId v : g) {
            key += std::to_string(v);
            key += ',';
        }
        key += ';';
    }
    return key;
}

namespace {

struct ArenaNode {
    ContractionPair pair;
    std::uint32_t parent; // 1-based arena id; 0 = root (empty sequence)
};

ContractionSequence materialize(const std::vector<ArenaNode>& arena, std::uint32_t node) {
    ContractionSequence seq;
    while (node != 0) {
        seq.push_back(arena[node - 1].pair);
        node = arena[node - 1].parent;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

struct DpState {
    Trigraph quotient;
    std::vector<VertexId> rep; // rep[i] = group label of the i-th component vertex
    std::uint32_t width;
    std::uint32_t node; // arena id of the last pair, 0 for the root
};

std::string state_key(const std::vector<VertexId>& rep) {
    std::string key(rep.size() * sizeof(VertexId), '\0');
    std::memcpy(key.data(), rep.data(), key.size());
    return key;
}

std::vector<ContractionPair> all_live_pairs(const Trigraph& g) {
    const auto live = g.live_vertices();
    std::vector<ContractionPair> out;
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            out.push_back({live[i], live[j]});
    return out;
}

} // namespace

ComponentResult solve_component(const Trigraph& component, Bounds bounds,
                                std::uint32_t accept_width, const SolveConfig& cfg) {
    const auto comp_verts = component.live_vertices();
    const std::size_t n = comp_verts.size();
    if (n == 0)
        throw std::invalid_argument("solve_component: empty component");
    if (n == 1)
        return {component.max_red_degree(), {}, true};

    bounds.lower = std::min(bounds.lower, bounds.upper);
    const std::uint32_t lower = bounds.lower;
    std::uint32_t upper = bounds.upper;
    ComponentResult best{bounds.upper, bounds.upper_witness, true};

    if (upper == lower)
        return best; // rule 5 at entry
    if (upper <= accept_width) {
        best.optimal = false; // rule 4 at entry
        return best;
    }

    const bool rule_ub = cfg.prune_mask & kPruneUpperBound;
    const bool rule_dom = cfg.prune_mask & kPruneDominance;
    const bool rule_close = cfg.prune_mask & kPruneClosure;

    std::vector<ArenaNode> arena;
    std::vector<DpState> frontier;
    frontier.push_back(
        {component, {comp_verts.begin(), comp_verts.end()}, component.max_red_degree(), 0});

    std::size_t arena_bytes = 0;
    std::size_t prev_bytes = frontier.front().quotient.memory_footprint();

    bool done = false;
    // Folds a finished sequence into the incumbent; true = stop the search.
    auto record = [&](std::uint32_t w, ContractionSequence&& seq) -> bool {
        if (w < best.width)
            best = {w, std::move(seq), true};
        upper = std::min(upper, w);
        if (upper == lower)
            return true; // rule 5: best now carries an optimal witness
        if (w <= accept_width) {
            best.optimal = false; // rule 4
            return true;
        }
        return false;
    };

    for (std::size_t layer = 1; !frontier.empty() && !done; ++layer) {
        std::unordered_map<std::string, std::size_t> index;
        std::vector<DpState> next;
        std::size_t next_bytes = 0;
        std::uint64_t uniq = 0;

        for (const auto& S : frontier) {
            if (cfg.budget.expired())
                throw resource_error("time budget", layer);

            std::vector<ContractionPair> pairs;
            {
                auto twins = S.quotient.twin_pairs();
                if (!twins.empty()) {
                    pairs.assign(1, twins.front()); // forced: twins are always optimal
                } else {
                    pairs = S.quotient.candidate_pairs();
                    if (pairs.empty())
                        pairs = all_live_pairs(S.quotient);
                }
            }

            for (const auto& pr : pairs) {
                Trigraph child = S.quotient;
                const std::uint32_t after = child.contract(pr);
                const std::uint32_t w = std::max(S.width, after);

                if (rule_ub && w >= upper)
                    continue; // rule 1

                if (child.live_count() == 1) {
                    ContractionSequence seq = materialize(arena, S.node);
                    seq.push_back(pr);
                    if (record(w, std::move(seq))) {
                        done = true;
                        break;
                    }
                    continue;
                }

                std::vector<VertexId> rep = S.rep;
                for (auto& r : rep)
                    if (r == pr.removed)
                        r = pr.survivor;
                std::string key = state_key(rep);
                if (!rule_dom) {
                    key += '#';
                    key += std::to_string(uniq++);
                }

                const auto it = index.find(key);
                if (it != index.end() && next[it->second].width <= w)
                    continue; // rule 2: dominated, ties keep the incumbent

                if (rule_close && w >= lower) {
                    // rule 3: try to close the child with a greedy completion
                    HeuristicSolution completion = greedy_extend(child, w);
                    if (completion.width <= w) {
                        ContractionSequence seq = materialize(arena, S.node);
                        seq.push_back(pr);
                        seq.insert(seq.end(), completion.seq.begin(), completion.seq.end());
                        if (record(w, std::move(seq))) {
                            done = true;
                            break;
                        }
                        continue; // closed: child never enters the frontier
                    }
                }

                arena.push_back({pr, S.node});
                arena_bytes += sizeof(ArenaNode);
                DpState ns{std::move(child), std::move(rep), w,
                           static_cast<std::uint32_t>(arena.size())};
                next_bytes += ns.quotient.memory_footprint() +
                              ns.rep.size() * sizeof(VertexId) + key.size() + sizeof(DpState);
                if (arena_bytes + prev_bytes + next_bytes > cfg.memory_cap)
                    throw resource_error("memory cap", layer);
                if (it != index.end()) {
                    next[it->second] = std::move(ns);
                } else {
                    index.emplace(std::move(key), next.size());
                    next.push_back(std::move(ns));
                }
            }
            if (done)
                break;
        }
        frontier = std::move(next);
        prev_bytes = next_bytes;
    }
    return best;
}

std::uint32_t lower_bound(const Trigraph& component, const Budget& budget,
                          std::uint32_t size_cap, std::uint32_t max_subgraphs, Rng& rng) {
    if (budget.expired())
        return 0;
    const auto verts = component.live_vertices();
    if (verts.size() < 4 || size_cap < 4 || max_subgraphs == 0)
        return 0; // every graph on <4 vertices has twin-width 0

    auto bfs_ball = [&](VertexId seed, std::uint32_t radius) {
        std::vector<VertexId> order{seed};
        std::vector<std::uint32_t> dist(component.capacity() + 1, ~0u);
        dist[seed] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId v = order[head];
            if (dist[v] == radius || order.size() >= size_cap)
                break;
            for (auto span : {component.black_neighbors(v), component.red_neighbors(v)})
                for (VertexId u : span)
                    if (dist[u] == ~0u && order.size() < size_cap) {
                        dist[u] = dist[v] + 1;
                        order.push_back(u);
                    }
        }
        std::sort(order.begin(), order.end());
        return order;
    };

    auto random_connected = [&]() {
        std::vector<char> in(component.capacity() + 1, 0);
        std::vector<VertexId> set{verts[rng.below(verts.size())]};
        in[set[0]] = 1;
        while (set.size() < size_cap) {
            std::vector<VertexId> boundary;
            for (VertexId v : set)
                for (auto span : {component.black_neighbors(v), component.red_neighbors(v)})
                    for (VertexId u : span)
                        if (!in[u])
                            boundary.push_back(u);
            if (boundary.empty())
                break;
            std::sort(boundary.begin(), boundary.end());
            boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
            const VertexId pick = boundary[rng.below(boundary.size())];
            in[pick] = 1;
            set.push_back(pick);
        }
        std::sort(set.begin(), set.end());
        return set;
    };

    std::vector<VertexId> by_degree = verts;
    std::sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
        if (component.degree(a) != component.degree(b))
            return component.degree(a) > component.degree(b);
        return a < b;
    });

    std::set<std::vector<VertexId>> seen;
    std::uint32_t best = 0;
    auto consider = [&](std::vector<VertexId> set) {
        if (set.size() < 4 || budget.expired())
            return;
        if (!seen.insert(set).second)
            return;
        const Trigraph sub = component.induced(set);
        const HeuristicSolution seed_sol = greedy_extend(sub, 0);
        if (seed_sol.width <= best)
            return; // exact width of sub cannot beat the incumbent
        SolveConfig sub_cfg;
        sub_cfg.budget = budget;
        try {
            const auto res =
                solve_component(sub, {0, seed_sol.width, seed_sol.seq}, 0, sub_cfg);
            best = std::max(best, res.width);
        } catch (const resource_error&) {
            // budget died mid-solve; keep what we have
        }
    };

    std::uint32_t emitted = 0;
    const std::uint32_t ball_quota = std::max(1u, max_subgraphs / 2);
    for (std::uint32_t i = 0; i < ball_quota && i < by_degree.size(); ++i) {
        if (budget.expired())
            break;
        consider(bfs_ball(by_degree[i], 2 + (i % 2)));
        ++emitted;
    }
    while (emitted < max_subgraphs && !budget.expired()) {
        consider(random_connected());
        ++emitted;
    }
    return best;
}

SolveResult solve_exact(const Instance& inst, const SolveConfig& cfg) {
    auto [reduced, prelude] = eliminate_twins(to_trigraph(inst));

    SolveResult result;
    if (reduced.live_count() == 1) {
        result = {0, std::move(prelude), true, "twins"};
    } else {
        const ComponentPlan plan = split_components(reduced);
        const std::size_t k = plan.components.size();
        Rng rng(cfg.seed);

        std::vector<HeuristicSolution> ubs(k);
        std::vector<std::uint32_t> lbs(k, 0);
        bool all_from_bounds = true;
        for (std::size_t i = 0; i < k; ++i) {
            const Trigraph& comp = plan.components[i].graph;
            if (comp.live_count() == 1)
                continue;
            PerturbParams hp;
            hp.batch_size = cfg.hc_batch;
            hp.rng_seed = rng.next();
            hp.max_rounds = cfg.hc_rounds;
            hp.budget = cfg.budget.fraction(0.2 / static_cast<double>(k));
            ubs[i] = hill_climb(comp, hp);
            const Budget lb_budget =
                cfg.budget.fraction(cfg.lb_budget_fraction / static_cast<double>(k));
            const std::uint32_t sampled =
                lower_bound(comp, lb_budget, cfg.lb_size_cap, cfg.lb_max_subgraphs, rng);
            // Post-twin-elimination components of >= 2 vertices are not
            // cographs, so their twin-width is at least 1.
            lbs[i] = std::min(std::max(sampled, 1u), ubs[i].width);
            if (lbs[i] != ubs[i].width)
                all_from_bounds = false;
        }

        std::uint32_t accept = 0;
        std::uint32_t width = 0;
        std::vector<ContractionSequence> seqs(k);
        std::vector<VertexId> survivors(k);
        for (std::size_t i = 0; i < k; ++i) {
            const Component& comp = plan.components[i];
            if (comp.vertices.size() == 1) {
                survivors[i] = comp.vertices.front();
                continue;
            }
            const ComponentResult res = solve_component(
                comp.graph, {lbs[i], ubs[i].width, ubs[i].seq}, accept, cfg);
            accept = std::max(accept, res.width);
            width = std::max(width, res.width);
            seqs[i] = res.seq;
            survivors[i] = seqs[i].back().survivor;
        }

        result.width = width;
        result.seq = assemble_solution(prelude, seqs, survivors);
        result.optimal = true;
        result.stage = all_from_bounds ? "bounds" : "dp";
    }

    const WidthReport replay = verify_sequence(inst, result.seq);
    if (replay.width != result.width)
        throw std::logic_error("solver emitted a sequence of width " +
                               std::to_string(replay.width) + ", claimed " +
                               std::to_string(result.width));
    return result;
}

} // namespace tww
