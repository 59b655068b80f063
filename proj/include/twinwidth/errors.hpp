#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tww {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance or solution text. `line` is 1-based.
struct parse_error : error {
    parse_error(const std::string& msg, int line)
        : error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// Invalid contraction sequence. `step` is the 1-based offending pair index.
struct verify_error : error {
    verify_error(const std::string& msg, std::size_t step)
        : error(msg + " (step " + std::to_string(step) + ")"), step(step) {}
    std::size_t step;
};

// Time or memory budget exhausted. `layer` is the DP prefix length reached.
struct resource_error : error {
    resource_error(const std::string& what_limit, std::size_t layer)
        : error(what_limit + " exhausted at layer " + std::to_string(layer)),
          limit(what_limit), layer(layer) {}
    std::string limit;
    std::size_t layer;
};

} // namespace tww
