#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "twinwidth/trigraph.hpp"

namespace tww {

struct Instance {
    VertexId n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string source_name;
};

// PACE 2023 .gr format: 'c' comment lines, "p tww <n> <m>" header, then m
// edge lines with 1-based endpoints. Throws parse_error with a line number.
Instance parse_instance(std::istream& in, std::string source_name = "");
Instance parse_instance(const std::string& text, std::string source_name = "");

// Solution format: one "<survivor> <removed>" line per contraction.
std::string render_sequence(const ContractionSequence& seq);
ContractionSequence parse_sequence(std::istream& in, VertexId n);
ContractionSequence parse_sequence(const std::string& text, VertexId n);

Trigraph to_trigraph(const Instance& inst);

} // namespace tww
