#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twinwidth/errors.hpp"
#include "twinwidth/exact.hpp"
#include "twinwidth/heuristic.hpp"
#include "twinwidth/oracle.hpp"
#include "twinwidth/pace_io.hpp"
#include "twinwidth/verifier.hpp"

namespace py = pybind11;

namespace {

using Pairs = std::vector<std::pair<tww::VertexId, tww::VertexId>>;

tww::ContractionSequence to_seq(const Pairs& pairs) {
    tww::ContractionSequence seq;
    seq.reserve(pairs.size());
    for (const auto& [s, r] : pairs)
        seq.push_back({s, r});
    return seq;
}

Pairs from_seq(const tww::ContractionSequence& seq) {
    Pairs out;
    out.reserve(seq.size());
    for (const auto& p : seq)
        out.emplace_back(p.survivor, p.removed);
    return out;
}

} // namespace

PYBIND11_MODULE(_twinwidth, m) {
    m.doc() = "twin-width solver suite";

    py::register_exception<tww::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<tww::verify_error>(m, "VerifyError", PyExc_ValueError);
    py::register_exception<tww::resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def(
        "parse_instance",
        [](const std::string& text) {
            const tww::Instance inst = tww::parse_instance(text);
            return py::make_tuple(inst.n, inst.edges);
        },
        py::arg("text"), "Parse PACE .gr text into (n, edges).");

    m.def(
        "render_sequence",
        [](const Pairs& pairs) { return tww::render_sequence(to_seq(pairs)); },
        py::arg("sequence"), "Render a contraction sequence in PACE solution format.");

    m.def(
        "verify_sequence",
        [](const std::string& text, const Pairs& pairs) {
            const auto report = tww::verify_sequence(tww::parse_instance(text), to_seq(pairs));
            return py::make_tuple(report.width, report.per_step_max);
        },
        py::arg("text"), py::arg("sequence"),
        "Replay a sequence against a .gr instance; returns (width, per_step_max).");

    m.def(
        "solve_exact",
        [](const std::string& text, std::uint64_t seed, double time_limit) {
            tww::SolveConfig cfg;
            cfg.seed = seed;
            if (time_limit > 0)
                cfg.budget = tww::Budget::seconds(time_limit);
            const tww::SolveResult res = tww::solve_exact(tww::parse_instance(text), cfg);
            py::dict out;
            out["width"] = res.width;
            out["sequence"] = from_seq(res.seq);
            out["optimal"] = res.optimal;
            out["stage"] = res.stage;
            return out;
        },
        py::arg("text"), py::arg("seed") = 1, py::arg("time_limit") = 0.0,
        "Prove the twin-width of a .gr instance. time_limit 0 means unlimited.");

    m.def(
        "solve_heuristic",
        [](const std::string& text, std::uint64_t seed, std::uint64_t rounds,
           std::uint32_t batch, double time_limit) {
            tww::PerturbParams params;
            params.rng_seed = seed;
            params.max_rounds = rounds;
            params.batch_size = batch;
            if (time_limit > 0)
                params.budget = tww::Budget::seconds(time_limit);
            const tww::HeuristicSolution sol =
                tww::solve_heuristic(tww::parse_instance(text), params);
            py::dict out;
            out["width"] = sol.width;
            out["sequence"] = from_seq(sol.seq);
            return out;
        },
        py::arg("text"), py::arg("seed") = 1, py::arg("rounds") = 64,
        py::arg("batch") = 32, py::arg("time_limit") = 0.0,
        "Upper-bound solution via greedy construction and hill climbing.");

    m.def(
        "oracle_twinwidth",
        [](const std::string& text, std::uint32_t cap) {
            const tww::OracleResult res = tww::oracle_twinwidth(tww::parse_instance(text), cap);
            py::dict out;
            out["width"] = res.width;
            out["sequence"] = from_seq(res.witness);
            return out;
        },
        py::arg("text"), py::arg("cap") = 8,
        "Brute-force twin-width with an optimal witness (small instances only).");
}
