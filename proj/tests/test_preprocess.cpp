#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "twinwidth/oracle.hpp"
#include "twinwidth/preprocess.hpp"
#include "twinwidth/rng.hpp"
#include "twinwidth/trigraph.hpp"
#include "twinwidth/verifier.hpp"

using tww::assemble_solution;
using tww::ContractionSequence;
using tww::eliminate_twins;
using tww::oracle_twinwidth;
using tww::split_components;
using tww::Trigraph;
using tww::VertexId;

namespace {

// Replays a (possibly partial) sequence and returns the max red degree seen.
std::uint32_t replay_width(Trigraph g, const ContractionSequence& seq) {
    std::uint32_t width = g.max_red_degree();
    for (auto p : seq) width = std::max(width, g.contract(p));
    return width;
}

}  // namespace

TEST_CASE("eliminate_twins: cographs collapse at width 0") {
    for (auto [n, edges] : std::vector<std::pair<std::uint32_t, twt::Edges>>{
             {4, twt::cycle_edges(4)},
             {5, twt::complete_edges(5)},
             {5, twt::Edges{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}},  // K2,3
         }) {
        Trigraph g(n, edges);
        auto [reduced, prefix] = eliminate_twins(g);
        CHECK(reduced.live_count() == 1);
        CHECK(prefix.size() == n - 1);
        CHECK(replay_width(g, prefix) == 0);
    }
}

TEST_CASE("eliminate_twins: P4 is twin-free") {
    Trigraph p4(4, twt::path_edges(4));
    auto [reduced, prefix] = eliminate_twins(p4);
    CHECK(prefix.empty());
    CHECK(reduced == p4);
}

TEST_CASE("eliminate_twins: star leaves merge, then the center") {
    Trigraph star(5, twt::star_edges(4));
    auto [reduced, prefix] = eliminate_twins(star);
    CHECK(reduced.live_count() == 1);
    CHECK(replay_width(star, prefix) == 0);
}

TEST_CASE("eliminate_twins: isolated vertices are twins") {
    Trigraph iso(3);
    auto [reduced, prefix] = eliminate_twins(iso);
    CHECK(reduced.live_count() == 1);
    CHECK(prefix.size() == 2);
}

TEST_CASE("split_components: order and contents") {
    // P4 on 1..4 plus K2 on 5..6
    Trigraph g(6, twt::Edges{{1, 2}, {2, 3}, {3, 4}, {5, 6}});
    auto plan = split_components(g);
    REQUIRE(plan.components.size() == 2);
    CHECK(plan.components[0].vertices == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(plan.components[1].vertices == std::vector<VertexId>{5, 6});
    CHECK(plan.components[0].graph.edge_color(2, 3) == tww::EdgeColor::Black);
    CHECK(plan.components[1].graph.edge_color(5, 6) == tww::EdgeColor::Black);

    Trigraph conn(5, twt::cycle_edges(5));
    CHECK(split_components(conn).components.size() == 1);

    Trigraph iso(3);
    auto singles = split_components(iso);
    REQUIRE(singles.components.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(singles.components[i].vertices ==
              std::vector<VertexId>{static_cast<VertexId>(i + 1)});
    }
}

TEST_CASE("split_components: red edges connect") {
    Trigraph g(4, twt::path_edges(4));
    g.contract({1, 2});  // 1-3 red, 3-4 black
    auto plan = split_components(g);
    REQUIRE(plan.components.size() == 1);
    CHECK(plan.components[0].vertices == std::vector<VertexId>{1, 3, 4});
}

TEST_CASE("split_components: ties broken by smallest label") {
    Trigraph g(4, twt::Edges{{2, 4}, {1, 3}});
    auto plan = split_components(g);
    REQUIRE(plan.components.size() == 2);
    CHECK(plan.components[0].vertices == std::vector<VertexId>{1, 3});
    CHECK(plan.components[1].vertices == std::vector<VertexId>{2, 4});
}

TEST_CASE("assemble_solution: worked examples") {
    ContractionSequence p4_part = {{1, 2}, {1, 3}, {1, 4}};
    ContractionSequence k2_part = {{5, 6}};
    auto full = assemble_solution({}, {p4_part, k2_part}, {1, 5});
    CHECK(full == ContractionSequence{{1, 2}, {1, 3}, {1, 4}, {5, 6}, {1, 5}});
    auto inst = twt::make_instance(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}});
    CHECK(tww::verify_sequence(inst, full).width == 1);

    CHECK(assemble_solution({{9, 8}}, {p4_part}, {1}) ==
          ContractionSequence{{9, 8}, {1, 2}, {1, 3}, {1, 4}});

    auto singles = assemble_solution({}, {{}, {}, {}}, {1, 2, 3});
    CHECK(singles == ContractionSequence{{1, 2}, {1, 3}});
    CHECK(tww::verify_sequence(twt::make_instance(3, {}), singles).width == 0);
}

TEST_CASE("assemble_solution: inconsistent survivors rejected") {
    ContractionSequence part = {{1, 2}};
    CHECK_THROWS_AS(assemble_solution({}, {part}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(assemble_solution({}, {part}, {1, 5}), std::invalid_argument);
}

TEST_CASE("width decomposition: assembled width is the max over parts") {
    tww::Rng rng(211);
    for (int it = 0; it < 20; ++it) {
        auto n = 4 + static_cast<std::uint32_t>(rng.below(5));
        auto edges = twt::random_graph(n, 0.25, rng);
        Trigraph g(n, edges);
        auto plan = split_components(g);
        std::vector<ContractionSequence> parts;
        std::vector<VertexId> survivors;
        std::uint32_t expect = 0;
        for (const auto& comp : plan.components) {
            auto res = oracle_twinwidth(comp.graph);
            expect = std::max(expect, res.width);
            survivors.push_back(comp.vertices.front());
            // fold the witness's survivor chain onto the smallest label
            auto seq = res.witness;
            parts.push_back(seq);
            if (!seq.empty()) survivors.back() = seq.back().survivor;
        }
        auto full = assemble_solution({}, parts, survivors);
        CHECK(tww::verify_sequence(twt::make_instance(n, edges), full).width == expect);
    }
}

TEST_CASE("eliminate_twins preserves the oracle width") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& edges : twt::connected_graphs(n)) {
            Trigraph g(static_cast<std::uint32_t>(n), edges);
            auto [reduced, prefix] = eliminate_twins(g);
            CHECK(oracle_twinwidth(reduced).width == oracle_twinwidth(g).width);
        }
    tww::Rng rng(223);
    for (int it = 0; it < 20; ++it) {
        auto n = 6 + static_cast<std::uint32_t>(rng.below(2));
        Trigraph g(n, twt::random_graph(n, 0.5, rng));
        auto [reduced, prefix] = eliminate_twins(g);
        CHECK(oracle_twinwidth(reduced).width == oracle_twinwidth(g).width);
    }
}
