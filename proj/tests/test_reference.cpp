#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "twinwidth/errors.hpp"
#include "twinwidth/oracle.hpp"
#include "twinwidth/rng.hpp"
#include "twinwidth/trigraph.hpp"
#include "twinwidth/verifier.hpp"

using tww::ContractionSequence;
using tww::oracle_twinwidth;
using tww::Trigraph;
using tww::verify_error;
using tww::verify_sequence;
using tww::VertexId;

TEST_CASE("verify_sequence: worked examples") {
    auto p4 = twt::make_instance(4, twt::path_edges(4));
    auto report = verify_sequence(p4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(report.width == 1);
    CHECK(report.per_step_max == std::vector<std::uint32_t>{1, 1, 1});

    auto k2 = twt::make_instance(2, {{1, 2}});
    CHECK(verify_sequence(k2, {{1, 2}}).width == 0);

    try {
        verify_sequence(p4, {{1, 3}, {1, 3}, {1, 4}});
        FAIL("dead vertex reuse accepted");
    } catch (const verify_error& e) {
        CHECK(e.step == 2);
    }
}

TEST_CASE("verify_sequence: length and pair validity errors") {
    auto p4 = twt::make_instance(4, twt::path_edges(4));
    try {
        verify_sequence(p4, {{1, 2}, {1, 3}});
        FAIL("short sequence accepted");
    } catch (const verify_error& e) {
        CHECK(e.step == 3);
    }
    try {
        verify_sequence(p4, {{1, 2}, {1, 3}, {1, 4}, {1, 4}});
        FAIL("long sequence accepted");
    } catch (const verify_error& e) {
        CHECK(e.step == 4);
    }
    CHECK_THROWS_AS(verify_sequence(p4, {{2, 2}, {1, 3}, {1, 4}}), verify_error);
    CHECK_THROWS_AS(verify_sequence(p4, {{1, 9}, {1, 3}, {1, 4}}), verify_error);

    auto single = twt::make_instance(1, {});
    auto empty = verify_sequence(single, {});
    CHECK(empty.width == 0);
    CHECK(empty.per_step_max.empty());
}

TEST_CASE("verify_sequence: per_step_max is a running maximum") {
    tww::Rng rng(97);
    for (int it = 0; it < 40; ++it) {
        auto n = 2 + static_cast<std::uint32_t>(rng.below(8));
        auto edges = twt::random_graph(n, 0.5, rng);
        Trigraph g(n, edges);
        ContractionSequence seq;
        auto work = g;
        while (work.live_count() > 1) {
            auto live = work.live_vertices();
            auto a = live[rng.below(live.size())];
            auto b = live[rng.below(live.size())];
            if (a == b) continue;
            tww::ContractionPair p{std::min(a, b), std::max(a, b)};
            work.contract(p);
            seq.push_back(p);
        }
        auto report = verify_sequence(twt::make_instance(n, edges), seq);
        REQUIRE(report.per_step_max.size() == seq.size());
        CHECK(std::is_sorted(report.per_step_max.begin(), report.per_step_max.end()));
        CHECK(report.per_step_max.back() == report.width);
    }
}

TEST_CASE("oracle: worked examples") {
    CHECK(oracle_twinwidth(twt::make_instance(3, twt::path_edges(3))).width == 0);
    CHECK(oracle_twinwidth(twt::make_instance(4, twt::path_edges(4))).width == 1);
    CHECK(oracle_twinwidth(twt::make_instance(5, twt::cycle_edges(5))).width == 2);

    // the C5 derivation's key fact: every first contraction already hits 2
    Trigraph c5(5, twt::cycle_edges(5));
    for (auto p : c5.candidate_pairs()) {
        auto copy = c5;
        CHECK(copy.contract(p) == 2);
    }
}

TEST_CASE("oracle: witness always verifies to the reported width") {
    tww::Rng rng(113);
    for (int it = 0; it < 25; ++it) {
        auto n = 2 + static_cast<std::uint32_t>(rng.below(6));
        auto edges = twt::random_graph(n, 0.45, rng);
        auto res = oracle_twinwidth(twt::make_instance(n, edges));
        CHECK(verify_sequence(twt::make_instance(n, edges), res.witness).width == res.width);
    }
}

TEST_CASE("oracle: size cap enforced and adjustable") {
    auto big = twt::make_instance(9, twt::path_edges(9));
    CHECK_THROWS_AS(oracle_twinwidth(big), tww::error);
    CHECK(oracle_twinwidth(big, 9).width == 1);
}

TEST_CASE("oracle: monotone under induced subgraphs (n <= 7)") {
    tww::Rng rng(131);
    for (int it = 0; it < 12; ++it) {
        auto n = 5 + static_cast<std::uint32_t>(rng.below(3));
        Trigraph g(n, twt::random_graph(n, 0.5, rng));
        auto full = oracle_twinwidth(g).width;
        for (int sub = 0; sub < 6; ++sub) {
            std::vector<VertexId> keep;
            for (VertexId v = 1; v <= n; ++v)
                if (rng.below(2) == 0) keep.push_back(v);
            if (keep.size() < 2) continue;
            CHECK(oracle_twinwidth(g.induced(keep)).width <= full);
        }
    }
}

TEST_CASE("oracle: distance-2 restriction is exact on small connected graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& edges : twt::connected_graphs(n)) {
            Trigraph g(static_cast<std::uint32_t>(n), edges);
            auto restricted = oracle_twinwidth(g, 8, true);
            auto unrestricted = oracle_twinwidth(g, 8, false);
            CHECK(restricted.width == unrestricted.width);
            CHECK(verify_sequence(g, restricted.witness).width == restricted.width);
        }
}
