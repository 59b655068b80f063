#include "twinwidth/verifier.hpp"

#include <string>

#include "twinwidth/errors.hpp"

namespace tww {

WidthReport verify_sequence(const Trigraph& g, const ContractionSequence& seq) {
    const std::size_t need = g.live_count() - 1;
    if (seq.size() != need)
        throw verify_error("expected " + std::to_string(need) + " pairs, got " +
                               std::to_string(seq.size()),
                           seq.size() < need ? seq.size() + 1 : need + 1);

    Trigraph work = g;
    WidthReport report;
    report.per_step_max.reserve(seq.size());
    std::uint32_t running = work.max_red_degree();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto [x, y] = seq[i];
        const std::size_t step = i + 1;
        if (x == y)
            throw verify_error("survivor equals removed vertex", step);
        if (x < 1 || x > work.capacity() || y < 1 || y > work.capacity())
            throw verify_error("vertex label out of range", step);
        if (!work.is_live(x))
            throw verify_error("vertex " + std::to_string(x) + " already removed", step);
        if (!work.is_live(y))
            throw verify_error("vertex " + std::to_string(y) + " already removed", step);
        running = std::max(running, work.contract({x, y}));
        report.per_step_max.push_back(running);
    }
    report.width = running;
    return report;
}

WidthReport verify_sequence(const Instance& inst, const ContractionSequence& seq) {
    return verify_sequence(to_trigraph(inst), seq);
}

} // namespace tww
