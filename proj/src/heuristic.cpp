#include "twinwidth/heuristic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "twinwidth/preprocess.hpp"
#include "twinwidth/verifier.hpp"

namespace tww {

namespace {

std::vector<ContractionPair> all_live_pairs(const Trigraph& g) {
    const auto live = g.live_vertices();
    std::vector<ContractionPair> out;
    out.reserve(live.size() * (live.size() - 1) / 2);
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            out.push_back({live[i], live[j]});
    return out;
}

} // namespace

std::size_t plateau_start(const std::vector<std::uint32_t>& per_step_max) {
    if (per_step_max.empty())
        throw std::invalid_argument("plateau_start: empty profile");
    const std::uint32_t w = per_step_max.back();
    for (std::size_t i = 0; i < per_step_max.size(); ++i)
        if (per_step_max[i] == w)
            return i + 1;
    return per_step_max.size(); // unreachable for non-decreasing input
}

HeuristicSolution greedy_extend(const Trigraph& g, std::uint32_t prefix_width) {
    HeuristicSolution sol;
    Trigraph work = g;
    std::uint32_t running = prefix_width;
    while (work.live_count() > 1) {
        ContractionPair choice{0, 0};
        if (auto twin = work.first_twin_pair()) {
            choice = *twin;
        } else {
            auto cands = work.candidate_pairs();
            if (cands.empty())
                cands = all_live_pairs(work);
            std::pair<std::uint32_t, std::uint32_t> best_key{~0u, ~0u};
            for (const auto& p : cands) {
                const auto probe = work.probe_contract(p);
                const std::pair<std::uint32_t, std::uint32_t> key{
                    probe.new_max_red_degree, probe.merged_red_degree};
                if (key < best_key) {
                    best_key = key;
                    choice = p;
                }
            }
        }
        running = std::max(running, work.contract(choice));
        sol.seq.push_back(choice);
        sol.per_step_max.push_back(running);
    }
    sol.width = running;
    sol.plateau_start = sol.seq.empty() ? 0 : plateau_start(sol.per_step_max);
    return sol;
}

HeuristicSolution perturb(const Trigraph& g, const HeuristicSolution& primary, Rng& rng) {
    if (primary.seq.empty())
        return primary;
    const std::size_t p = primary.plateau_start;

    const std::size_t a = 1 + static_cast<std::size_t>(rng.below(p));
    const std::size_t b = 1 + static_cast<std::size_t>(rng.below(p));

    // Vertices still live after the first k steps of the primary sequence.
    auto live_after = [&](std::size_t k) {
        std::vector<char> dead(g.capacity() + 1, 0);
        for (std::size_t i = 0; i < k; ++i)
            dead[primary.seq[i].removed] = 1;
        std::vector<VertexId> out;
        for (VertexId v : g.live_vertices())
            if (!dead[v])
                out.push_back(v);
        return out;
    };
    const auto ua = live_after(a);
    const auto vb = live_after(b);
    const VertexId u = ua[rng.below(ua.size())];
    const VertexId v = vb[rng.below(vb.size())];

    ContractionSequence mutated = primary.seq;
    mutated[a - 1].survivor = u;
    const VertexId yb = primary.seq[b - 1].removed;
    for (std::size_t i = b - 1; i < mutated.size(); ++i) {
        auto swap_role = [&](VertexId& w) {
            if (w == yb)
                w = v;
            else if (w == v)
                w = yb;
        };
        swap_role(mutated[i].survivor);
        swap_role(mutated[i].removed);
    }

    // Replay the first p mutated pairs, dropping any that became invalid.
    Trigraph work = g;
    HeuristicSolution derived;
    std::uint32_t running = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const auto pair = mutated[i];
        if (pair.survivor == pair.removed || !work.is_live(pair.survivor) ||
            !work.is_live(pair.removed))
            continue;
        running = std::max(running, work.contract(pair));
        derived.seq.push_back(pair);
        derived.per_step_max.push_back(running);
    }

    HeuristicSolution tail = greedy_extend(work, running);
    derived.seq.insert(derived.seq.end(), tail.seq.begin(), tail.seq.end());
    derived.per_step_max.insert(derived.per_step_max.end(), tail.per_step_max.begin(),
                                tail.per_step_max.end());
    derived.width = tail.width;
    derived.plateau_start = derived.seq.empty() ? 0 : plateau_start(derived.per_step_max);
    return derived;
}

HeuristicSolution hill_climb(const Trigraph& g, const PerturbParams& params,
                             const std::optional<HeuristicSolution>& initial) {
    HeuristicSolution primary = initial ? *initial : greedy_extend(g, 0);
    if (params.batch_size == 0 || primary.seq.empty())
        return primary;

    Rng rng(params.rng_seed);
    for (std::uint64_t round = 0; round < params.max_rounds; ++round) {
        if (params.budget.expired())
            break;
        bool improved = false;
        const HeuristicSolution* best_eq = nullptr;
        std::vector<HeuristicSolution> batch;
        batch.reserve(params.batch_size);
        for (std::uint32_t k = 0; k < params.batch_size; ++k) {
            batch.push_back(perturb(g, primary, rng));
            const auto& d = batch.back();
            if (d.width < primary.width) {
                primary = d;
                improved = true;
                break;
            }
            if (d.width == primary.width &&
                (!best_eq || d.plateau_start > best_eq->plateau_start))
                best_eq = &batch.back();
        }
        if (!improved && best_eq && best_eq->plateau_start >= primary.plateau_start)
            primary = *best_eq;
    }
    return primary;
}

HeuristicSolution solve_heuristic(const Instance& inst, const PerturbParams& params) {
    auto [reduced, prelude] = eliminate_twins(to_trigraph(inst));

    ContractionSequence assembled;
    if (reduced.live_count() == 1) {
        assembled = std::move(prelude);
    } else {
        const ComponentPlan plan = split_components(reduced);
        const std::size_t k = plan.components.size();
        Rng rng(params.rng_seed);

        std::vector<std::optional<HeuristicSolution>> sols(k);
        for (std::size_t i = 0; i < k; ++i)
            if (plan.components[i].graph.live_count() > 1)
                sols[i] = greedy_extend(plan.components[i].graph, 0);

        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t comp_seed = rng.next();
            if (!sols[i])
                continue;
            PerturbParams comp_params = params;
            comp_params.rng_seed = comp_seed;
            comp_params.budget = params.budget.fraction(1.0 / static_cast<double>(k - i));
            sols[i] = hill_climb(plan.components[i].graph, comp_params, sols[i]);
        }

        std::vector<ContractionSequence> seqs(k);
        std::vector<VertexId> survivors(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (!sols[i]) {
                survivors[i] = plan.components[i].vertices.front();
                continue;
            }
            seqs[i] = sols[i]->seq;
            survivors[i] = seqs[i].back().survivor;
        }
        assembled = assemble_solution(prelude, seqs, survivors);
    }

    const WidthReport replay = verify_sequence(inst, assembled);
    HeuristicSolution out;
    out.seq = std::move(assembled);
    out.width = replay.width;
    out.per_step_max = replay.per_step_max;
    out.plateau_start = out.seq.empty() ? 0 : plateau_start(out.per_step_max);
    return out;
}

} // namespace tww
