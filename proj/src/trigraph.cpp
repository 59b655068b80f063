#include "twinwidth/trigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tww {

namespace {

bool erase_sorted(std::vector<VertexId>& v, VertexId x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
        return false;
    v.erase(it);
    return true;
}

void insert_sorted(std::vector<VertexId>& v, VertexId x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

bool contains_sorted(const std::vector<VertexId>& v, VertexId x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::uint64_t hash_list(const std::vector<VertexId>& v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (VertexId x : v) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h;
}

// Neighbor list with v itself spliced in, for closed-neighborhood keys.
std::vector<VertexId> with_self(const std::vector<VertexId>& nbrs, VertexId v) {
    std::vector<VertexId> out;
    out.reserve(nbrs.size() + 1);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    out.insert(out.end(), nbrs.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, nbrs.end());
    return out;
}

} // namespace

Trigraph::Trigraph(VertexId n) {
    if (n == 0)
        throw std::invalid_argument("trigraph: vertex count must be positive");
    verts_.resize(static_cast<std::size_t>(n) + 1);
    for (VertexId v = 1; v <= n; ++v)
        verts_[v].live = true;
    red_hist_.assign(static_cast<std::size_t>(n) + 1, 0);
    red_hist_[0] = n;
    live_count_ = n;
    max_red_ = 0;
}

Trigraph::Trigraph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& black_edges)
    : Trigraph(n) {
    for (const auto& [u, v] : black_edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("trigraph: edge label out of range");
        if (u == v)
            throw std::invalid_argument("trigraph: self-loop rejected");
        verts_[u].black.push_back(v);
        verts_[v].black.push_back(u);
    }
    for (VertexId v = 1; v <= n; ++v) {
        auto& b = verts_[v].black;
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("trigraph: duplicate edge rejected");
    }
}

Trigraph Trigraph::empty_shell(VertexId n) {
    Trigraph g;
    g.verts_.resize(static_cast<std::size_t>(n) + 1);
    g.red_hist_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.live_count_ = 0;
    g.max_red_ = 0;
    return g;
}

std::vector<VertexId> Trigraph::live_vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_count_);
    for (VertexId v = 1; v < verts_.size(); ++v)
        if (verts_[v].live)
            out.push_back(v);
    return out;
}

std::optional<EdgeColor> Trigraph::edge_color(VertexId u, VertexId v) const {
    if (!is_live(u) || !is_live(v) || u == v)
        return std::nullopt;
    if (contains_sorted(verts_[u].black, v))
        return EdgeColor::Black;
    if (contains_sorted(verts_[u].red, v))
        return EdgeColor::Red;
    return std::nullopt;
}

void Trigraph::move_red_degree(std::uint32_t old_deg, std::uint32_t new_deg) {
    if (old_deg == new_deg)
        return;
    --red_hist_[old_deg];
    ++red_hist_[new_deg];
    if (new_deg > max_red_)
        max_red_ = new_deg;
}

void Trigraph::settle_max_red() {
    while (max_red_ > 0 && red_hist_[max_red_] == 0)
        --max_red_;
}

std::uint32_t Trigraph::contract(ContractionPair p) {
    const VertexId x = p.survivor, y = p.removed;
    if (x == y)
        throw std::invalid_argument("contract: survivor equals removed");
    if (!is_live(x))
        throw std::invalid_argument("contract: survivor not live");
    if (!is_live(y))
        throw std::invalid_argument("contract: removed vertex not live");

    auto strip = [&](const std::vector<VertexId>& src) {
        std::vector<VertexId> out;
        out.reserve(src.size());
        for (VertexId u : src)
            if (u != x && u != y)
                out.push_back(u);
        return out;
    };
    const std::vector<VertexId> bx = strip(verts_[x].black);
    const std::vector<VertexId> by = strip(verts_[y].black);
    const std::vector<VertexId> rx = strip(verts_[x].red);
    const std::vector<VertexId> ry = strip(verts_[y].red);

    std::vector<VertexId> new_black;
    std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(),
                          std::back_inserter(new_black));

    std::vector<VertexId> blacks, reds, touched;
    std::set_union(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(blacks));
    std::set_union(rx.begin(), rx.end(), ry.begin(), ry.end(), std::back_inserter(reds));
    std::set_union(blacks.begin(), blacks.end(), reds.begin(), reds.end(),
                   std::back_inserter(touched));

    std::vector<VertexId> new_red;
    std::set_difference(touched.begin(), touched.end(), new_black.begin(), new_black.end(),
                        std::back_inserter(new_red));

    for (VertexId u : touched) {
        auto& vu = verts_[u];
        const auto old_rd = static_cast<std::uint32_t>(vu.red.size());
        erase_sorted(vu.black, x);
        erase_sorted(vu.black, y);
        erase_sorted(vu.red, x);
        erase_sorted(vu.red, y);
        if (contains_sorted(new_black, u))
            insert_sorted(vu.black, x);
        else
            insert_sorted(vu.red, x);
        move_red_degree(old_rd, static_cast<std::uint32_t>(vu.red.size()));
    }

    const auto x_old_rd = static_cast<std::uint32_t>(verts_[x].red.size());
    verts_[x].black = std::move(new_black);
    verts_[x].red = std::move(new_red);
    move_red_degree(x_old_rd, static_cast<std::uint32_t>(verts_[x].red.size()));

    --red_hist_[verts_[y].red.size()];
    verts_[y].black.clear();
    verts_[y].red.clear();
    verts_[y].live = false;
    --live_count_;

    settle_max_red();
    return max_red_;
}

Trigraph::ContractProbe Trigraph::probe_contract(ContractionPair p) const {
    const VertexId x = p.survivor, y = p.removed;
    if (x == y)
        throw std::invalid_argument("probe_contract: survivor equals removed");
    if (!is_live(x) || !is_live(y))
        throw std::invalid_argument("probe_contract: vertex not live");

    auto strip = [&](const std::vector<VertexId>& src) {
        std::vector<VertexId> out;
        out.reserve(src.size());
        for (VertexId u : src)
            if (u != x && u != y)
                out.push_back(u);
        return out;
    };
    const std::vector<VertexId> bx = strip(verts_[x].black);
    const std::vector<VertexId> by = strip(verts_[y].black);
    const std::vector<VertexId> rx = strip(verts_[x].red);
    const std::vector<VertexId> ry = strip(verts_[y].red);

    std::vector<VertexId> new_black;
    std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(),
                          std::back_inserter(new_black));
    std::vector<VertexId> blacks, reds, touched;
    std::set_union(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(blacks));
    std::set_union(rx.begin(), rx.end(), ry.begin(), ry.end(), std::back_inserter(reds));
    std::set_union(blacks.begin(), blacks.end(), reds.begin(), reds.end(),
                   std::back_inserter(touched));

    const auto merged_rd =
        static_cast<std::uint32_t>(touched.size() - new_black.size());

    // Degree changes only happen at touched vertices, x and y. Everything
    // else keeps its red degree, so the histogram answers what remains above
    // the local maximum.
    std::uint32_t local_max = merged_rd;
    std::vector<std::uint32_t> old_degs;
    old_degs.reserve(touched.size() + 2);
    for (VertexId u : touched) {
        const auto old_rd = static_cast<std::uint32_t>(verts_[u].red.size());
        old_degs.push_back(old_rd);
        std::uint32_t rd = old_rd;
        if (contains_sorted(verts_[u].red, x))
            --rd;
        if (contains_sorted(verts_[u].red, y))
            --rd;
        if (!contains_sorted(new_black, u))
            ++rd;
        local_max = std::max(local_max, rd);
    }
    old_degs.push_back(static_cast<std::uint32_t>(verts_[x].red.size()));
    old_degs.push_back(static_cast<std::uint32_t>(verts_[y].red.size()));

    if (local_max >= max_red_)
        return {local_max, merged_rd};

    for (std::uint32_t d = max_red_; d > local_max; --d) {
        std::uint32_t at_d = red_hist_[d];
        for (std::uint32_t od : old_degs)
            if (od == d)
                --at_d;
        if (at_d > 0)
            return {d, merged_rd};
    }
    return {local_max, merged_rd};
}

std::vector<ContractionPair> Trigraph::candidate_pairs() const {
    std::vector<ContractionPair> out;
    std::vector<std::uint32_t> stamp(verts_.size(), 0);
    std::uint32_t cur = 0;
    std::vector<VertexId> found;
    for (VertexId u = 1; u < verts_.size(); ++u) {
        if (!verts_[u].live)
            continue;
        ++cur;
        found.clear();
        auto visit = [&](VertexId w) {
            if (w > u && stamp[w] != cur) {
                stamp[w] = cur;
                found.push_back(w);
            }
        };
        auto around = [&](VertexId w) {
            visit(w);
            for (VertexId z : verts_[w].black)
                if (z != u)
                    visit(z);
            for (VertexId z : verts_[w].red)
                if (z != u)
                    visit(z);
        };
        for (VertexId w : verts_[u].black)
            around(w);
        for (VertexId w : verts_[u].red)
            around(w);
        std::sort(found.begin(), found.end());
        for (VertexId w : found)
            out.push_back({u, w});
    }
    return out;
}

namespace {

// Groups live vertices by one or two neighborhood keys and emits every pair
// inside an equality class. Hash buckets are re-checked with exact list
// comparison before anything is emitted.
struct KeyGroups {
    std::unordered_map<std::uint64_t, std::vector<VertexId>> buckets;

    void add(std::uint64_t key, VertexId v) { buckets[key].push_back(v); }

    template <typename Equal>
    void emit(std::vector<ContractionPair>& out, Equal&& eq) const {
        std::vector<VertexId> leaders;
        std::vector<std::vector<VertexId>> classes;
        for (const auto& [key, members] : buckets) {
            (void)key;
            if (members.size() < 2)
                continue;
            leaders.clear();
            classes.clear();
            for (VertexId v : members) {
                bool placed = false;
                for (std::size_t i = 0; i < leaders.size(); ++i) {
                    if (eq(leaders[i], v)) {
                        classes[i].push_back(v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    leaders.push_back(v);
                    classes.push_back({v});
                }
            }
            for (const auto& cls : classes)
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        out.push_back({std::min(cls[i], cls[j]), std::max(cls[i], cls[j])});
        }
    }
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a;
}

} // namespace

std::vector<ContractionPair> Trigraph::free_pairs() const {
    // Two vertices have equal black neighborhoods (each excluding the pair)
    // iff their open black neighborhoods match (non-black-adjacent case) or
    // their closed ones do (black-adjacent case).
    KeyGroups open_groups, closed_groups;
    for (VertexId v = 1; v < verts_.size(); ++v) {
        if (!verts_[v].live)
            continue;
        open_groups.add(hash_list(verts_[v].black), v);
        closed_groups.add(hash_list(with_self(verts_[v].black, v)), v);
    }
    std::vector<ContractionPair> out;
    open_groups.emit(out, [&](VertexId a, VertexId b) {
        return verts_[a].black == verts_[b].black;
    });
    closed_groups.emit(out, [&](VertexId a, VertexId b) {
        return with_self(verts_[a].black, a) == with_self(verts_[b].black, b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ContractionPair> Trigraph::twin_pairs() const {
    // Case split on the edge joining the pair: none, black, or red.
    KeyGroups none_g, black_g, red_g;
    for (VertexId v = 1; v < verts_.size(); ++v) {
        if (!verts_[v].live)
            continue;
        const std::uint64_t hb = hash_list(verts_[v].black);
        const std::uint64_t hr = hash_list(verts_[v].red);
        const std::uint64_t hbc = hash_list(with_self(verts_[v].black, v));
        const std::uint64_t hrc = hash_list(with_self(verts_[v].red, v));
        none_g.add(mix(hb, hr), v);
        black_g.add(mix(hbc, hr), v);
        red_g.add(mix(hb, hrc), v);
    }
    std::vector<ContractionPair> out;
    none_g.emit(out, [&](VertexId a, VertexId b) {
        return verts_[a].black == verts_[b].black && verts_[a].red == verts_[b].red;
    });
    black_g.emit(out, [&](VertexId a, VertexId b) {
        return with_self(verts_[a].black, a) == with_self(verts_[b].black, b) &&
               verts_[a].red == verts_[b].red;
    });
    red_g.emit(out, [&](VertexId a, VertexId b) {
        return verts_[a].black == verts_[b].black &&
               with_self(verts_[a].red, a) == with_self(verts_[b].red, b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ContractionPair> Trigraph::first_twin_pair() const {
    auto tp = twin_pairs();
    if (tp.empty())
        return std::nullopt;
    return tp.front();
}

Trigraph Trigraph::induced(const std::vector<VertexId>& keep) const {
    if (keep.empty())
        throw std::invalid_argument("induced: empty vertex set");
    std::vector<char> in_keep(verts_.size(), 0);
    std::uint32_t count = 0;
    for (VertexId v : keep) {
        if (!is_live(v))
            throw std::invalid_argument("induced: vertex not live");
        if (!in_keep[v]) {
            in_keep[v] = 1;
            ++count;
        }
    }
    Trigraph out = empty_shell(capacity());
    out.live_count_ = count;
    for (VertexId v = 1; v < verts_.size(); ++v) {
        if (!in_keep[v])
            continue;
        out.verts_[v].live = true;
        for (VertexId u : verts_[v].black)
            if (in_keep[u])
                out.verts_[v].black.push_back(u);
        for (VertexId u : verts_[v].red)
            if (in_keep[u])
                out.verts_[v].red.push_back(u);
        const auto rd = static_cast<std::uint32_t>(out.verts_[v].red.size());
        ++out.red_hist_[rd];
        out.max_red_ = std::max(out.max_red_, rd);
    }
    return out;
}

Trigraph Trigraph::quotient(const Trigraph& base,
                            const std::vector<std::vector<VertexId>>& groups) {
    std::vector<std::uint32_t> gid(base.verts_.size(), 0);
    std::uint32_t covered = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty())
            throw std::invalid_argument("quotient: empty group");
        for (VertexId v : groups[g]) {
            if (!base.is_live(v))
                throw std::invalid_argument("quotient: vertex not live in base");
            if (gid[v] != 0)
                throw std::invalid_argument("quotient: overlapping groups");
            gid[v] = static_cast<std::uint32_t>(g) + 1;
            ++covered;
        }
    }
    if (covered != base.live_count())
        throw std::invalid_argument("quotient: groups do not cover the base");
    for (VertexId v = 1; v < base.verts_.size(); ++v)
        if (base.verts_[v].live && !base.verts_[v].red.empty())
            throw std::invalid_argument("quotient: base must be black-only");

    const std::size_t k = groups.size();
    std::vector<VertexId> rep(k);
    for (std::size_t g = 0; g < k; ++g)
        rep[g] = *std::min_element(groups[g].begin(), groups[g].end());

    // Cross-edge counts between groups; full/empty decides black/none.
    std::vector<std::uint64_t> cross(k * k, 0);
    for (std::size_t g = 0; g < k; ++g)
        for (VertexId v : groups[g])
            for (VertexId u : base.verts_[v].black)
                if (gid[u] != g + 1)
                    ++cross[g * k + (gid[u] - 1)];

    Trigraph out = empty_shell(base.capacity());
    out.live_count_ = static_cast<std::uint32_t>(k);
    for (std::size_t g = 0; g < k; ++g)
        out.verts_[rep[g]].live = true;
    for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t h = 0; h < k; ++h) {
            if (g == h)
                continue;
            const std::uint64_t e = cross[g * k + h];
            if (e == 0)
                continue;
            const std::uint64_t full =
                static_cast<std::uint64_t>(groups[g].size()) * groups[h].size();
            if (e == full)
                out.verts_[rep[g]].black.push_back(rep[h]);
            else
                out.verts_[rep[g]].red.push_back(rep[h]);
        }
    }
    for (std::size_t g = 0; g < k; ++g) {
        auto& vd = out.verts_[rep[g]];
        std::sort(vd.black.begin(), vd.black.end());
        std::sort(vd.red.begin(), vd.red.end());
        const auto rd = static_cast<std::uint32_t>(vd.red.size());
        ++out.red_hist_[rd];
        out.max_red_ = std::max(out.max_red_, rd);
    }
    return out;
}

std::size_t Trigraph::memory_footprint() const {
    std::size_t bytes = sizeof(Trigraph);
    bytes += verts_.size() * sizeof(VertexData);
    for (const auto& vd : verts_)
        bytes += (vd.black.capacity() + vd.red.capacity()) * sizeof(VertexId);
    bytes += red_hist_.capacity() * sizeof(std::uint32_t);
    return bytes;
}

bool Trigraph::operator==(const Trigraph& other) const {
    if (verts_.size() != other.verts_.size() || live_count_ != other.live_count_)
        return false;
    for (VertexId v = 1; v < verts_.size(); ++v) {
        if (verts_[v].live != other.verts_[v].live)
            return false;
        if (verts_[v].black != other.verts_[v].black || verts_[v].red != other.verts_[v].red)
            return false;
    }
    return true;
}

void Trigraph::validate() const {
    auto fail = [](const std::string& msg) { throw std::logic_error("trigraph: " + msg); };
    std::uint32_t live = 0;
    std::vector<std::uint32_t> hist(red_hist_.size(), 0);
    std::uint32_t maxr = 0;
    for (VertexId v = 1; v < verts_.size(); ++v) {
        const auto& vd = verts_[v];
        if (!vd.live) {
            if (!vd.black.empty() || !vd.red.empty())
                fail("dead vertex with edges");
            continue;
        }
        ++live;
        if (!std::is_sorted(vd.black.begin(), vd.black.end()) ||
            !std::is_sorted(vd.red.begin(), vd.red.end()))
            fail("unsorted adjacency");
        for (const auto* list : {&vd.black, &vd.red}) {
            if (std::adjacent_find(list->begin(), list->end()) != list->end())
                fail("duplicate neighbor");
            for (VertexId u : *list) {
                if (u == v)
                    fail("self-loop");
                if (!is_live(u))
                    fail("edge to dead vertex");
            }
        }
        for (VertexId u : vd.black) {
            if (contains_sorted(vd.red, u))
                fail("pair both black and red");
            if (!contains_sorted(verts_[u].black, v))
                fail("asymmetric black edge");
        }
        for (VertexId u : vd.red)
            if (!contains_sorted(verts_[u].red, v))
                fail("asymmetric red edge");
        const auto rd = static_cast<std::uint32_t>(vd.red.size());
        ++hist[rd];
        maxr = std::max(maxr, rd);
    }
    if (live != live_count_)
        fail("live count out of sync");
    if (maxr != max_red_)
        fail("max red degree out of sync");
    for (std::size_t d = 0; d < hist.size(); ++d)
        if (hist[d] != red_hist_[d])
            fail("red degree histogram out of sync");
}

} // namespace tww
