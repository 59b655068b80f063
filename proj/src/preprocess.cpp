#include "twinwidth/preprocess.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tww {

std::pair<Trigraph, ContractionSequence> eliminate_twins(Trigraph g) {
    ContractionSequence prefix;
    for (;;) {
        const auto fp = g.free_pairs();
        if (fp.empty())
            break;
        g.contract(fp.front());
        prefix.push_back(fp.front());
    }
    return {std::move(g), std::move(prefix)};
}

ComponentPlan split_components(const Trigraph& g) {
    std::vector<char> seen(g.capacity() + 1, 0);
    ComponentPlan plan;
    std::vector<VertexId> stack;
    for (VertexId s : g.live_vertices()) {
        if (seen[s])
            continue;
        std::vector<VertexId> verts;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (auto span : {g.black_neighbors(v), g.red_neighbors(v)})
                for (VertexId u : span)
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
        }
        std::sort(verts.begin(), verts.end());
        Trigraph sub = g.induced(verts);
        plan.components.push_back({std::move(verts), std::move(sub)});
    }
    std::stable_sort(plan.components.begin(), plan.components.end(),
                     [](const Component& a, const Component& b) {
                         if (a.vertices.size() != b.vertices.size())
                             return a.vertices.size() > b.vertices.size();
                         return a.vertices.front() < b.vertices.front();
                     });
    return plan;
}

ContractionSequence assemble_solution(const ContractionSequence& prelude,
                                      const std::vector<ContractionSequence>& per_component,
                                      const std::vector<VertexId>& survivors) {
    if (per_component.size() != survivors.size())
        throw std::invalid_argument("assemble: " + std::to_string(per_component.size()) +
                                    " sequences for " + std::to_string(survivors.size()) +
                                    " survivors");
    for (std::size_t i = 0; i < per_component.size(); ++i)
        if (!per_component[i].empty() && per_component[i].back().survivor != survivors[i])
            throw std::invalid_argument("assemble: component " + std::to_string(i) +
                                        " does not end at its declared survivor");

    ContractionSequence out = prelude;
    for (const auto& seq : per_component)
        out.insert(out.end(), seq.begin(), seq.end());
    if (!survivors.empty()) {
        const VertexId root = *std::min_element(survivors.begin(), survivors.end());
        std::vector<VertexId> rest(survivors.begin(), survivors.end());
        std::sort(rest.begin(), rest.end());
        for (VertexId v : rest)
            if (v != root)
                out.push_back({root, v});
    }
    return out;
}

} // namespace tww
