#include "twinwidth/pace_io.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "twinwidth/errors.hpp"

namespace tww {

namespace {

// Splits on runs of spaces/tabs; a trailing '\r' (CRLF input) is dropped.
std::vector<std::string_view> tokenize(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, const char* what, int line_no,
                         std::uint64_t max_value) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(std::string(what) + ": expected an integer, got '" +
                              std::string(tok) + "'",
                          line_no);
    if (value > max_value)
        throw parse_error(std::string(what) + " out of range: " + std::string(tok), line_no);
    return value;
}

} // namespace

Instance parse_instance(std::istream& in, std::string source_name) {
    Instance inst;
    inst.source_name = std::move(source_name);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::uint64_t m = 0, edges_seen = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks[0][0] == 'c')
            continue;
        if (!have_header) {
            if (toks[0] != "p")
                throw parse_error("expected header 'p tww <n> <m>'", line_no);
            if (toks.size() != 4 || toks[1] != "tww")
                throw parse_error("malformed header, want 'p tww <n> <m>'", line_no);
            const auto n = parse_uint(toks[2], "vertex count", line_no, 0xffffffffu);
            if (n == 0)
                throw parse_error("vertex count must be positive", line_no);
            m = parse_uint(toks[3], "edge count", line_no,
                           static_cast<std::uint64_t>(n) * (n - 1) / 2);
            inst.n = static_cast<VertexId>(n);
            have_header = true;
            continue;
        }
        if (toks.size() != 2)
            throw parse_error("expected edge line '<u> <v>'", line_no);
        const auto u = parse_uint(toks[0], "vertex label", line_no, inst.n);
        const auto v = parse_uint(toks[1], "vertex label", line_no, inst.n);
        if (u == 0 || v == 0)
            throw parse_error("vertex labels are 1-based", line_no);
        if (u == v)
            throw parse_error("self-loop rejected", line_no);
        if (++edges_seen > m)
            throw parse_error("more edges than the header announced", line_no);
        const auto a = static_cast<VertexId>(std::min(u, v));
        const auto b = static_cast<VertexId>(std::max(u, v));
        if (!seen.insert({a, b}).second)
            throw parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                              line_no);
        inst.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (!have_header)
        throw parse_error("missing header 'p tww <n> <m>'", line_no);
    if (edges_seen != m)
        throw parse_error("header announced " + std::to_string(m) + " edges, found " +
                              std::to_string(edges_seen),
                          line_no);
    return inst;
}

Instance parse_instance(const std::string& text, std::string source_name) {
    std::istringstream in(text);
    return parse_instance(in, std::move(source_name));
}

std::string render_sequence(const ContractionSequence& seq) {
    std::string out;
    for (const auto& p : seq) {
        out += std::to_string(p.survivor);
        out += ' ';
        out += std::to_string(p.removed);
        out += '\n';
    }
    return out;
}

ContractionSequence parse_sequence(std::istream& in, VertexId n) {
    if (n == 0)
        throw parse_error("vertex count must be positive", 0);
    ContractionSequence seq;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks[0][0] == 'c')
            continue;
        if (toks.size() != 2)
            throw parse_error("expected '<survivor> <removed>'", line_no);
        const auto u = parse_uint(toks[0], "vertex label", line_no, n);
        const auto v = parse_uint(toks[1], "vertex label", line_no, n);
        if (u == 0 || v == 0)
            throw parse_error("vertex labels are 1-based", line_no);
        seq.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (seq.size() != static_cast<std::size_t>(n) - 1)
        throw parse_error("expected " + std::to_string(n - 1) + " contraction lines, found " +
                              std::to_string(seq.size()),
                          line_no);
    return seq;
}

ContractionSequence parse_sequence(const std::string& text, VertexId n) {
    std::istringstream in(text);
    return parse_sequence(in, n);
}

Trigraph to_trigraph(const Instance& inst) {
    return Trigraph(inst.n, inst.edges);
}

} // namespace tww
