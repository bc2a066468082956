#include "wd/coloring.hpp"

#include <algorithm>
#include <memory>

#include "wd/rng.hpp"

namespace wd {

ListAssignment ListAssignment::palette(int n, int k) {
    ListAssignment la;
    std::vector<int> all(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) all[static_cast<size_t>(c)] = c;
    la.lists.assign(static_cast<size_t>(n), all);
    return la;
}

ColorChooser min_chooser() {
    return [](const std::vector<int>& cand) { return cand.front(); };
}

ColorChooser max_chooser() {
    return [](const std::vector<int>& cand) { return cand.back(); };
}

ColorChooser random_chooser(uint64_t seed) {
    auto rng = std::make_shared<SplitMix64>(seed);
    return [rng](const std::vector<int>& cand) {
        return cand[static_cast<size_t>(rng->below(cand.size()))];
    };
}

namespace {

void erase_color(std::vector<int>& list, int c) {
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it != list.end() && *it == c) list.erase(it);
}

} // namespace

std::optional<Coloring> greedy_color(const SimpleGraph& g, int d,
                                     const std::vector<VertexId>& order, size_t* fail_step) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw Error("greedy_color: order must cover V(G)");
    ListAssignment la = ListAssignment::palette(n, d + 1);
    Coloring col;
    col.color.assign(static_cast<size_t>(n), -1);
    std::vector<char> done(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < order.size(); ++i) {
        VertexId u = order[i];
        auto& lu = la.lists[static_cast<size_t>(u)];
        if (lu.empty()) {
            if (fail_step) *fail_step = i;
            return std::nullopt;
        }
        int c = lu.front();
        col.color[static_cast<size_t>(u)] = c;
        done[static_cast<size_t>(u)] = 1;
        for (VertexId v : g.neighbors(u))
            if (!done[static_cast<size_t>(v)]) erase_color(la.lists[static_cast<size_t>(v)], c);
    }
    return col;
}

Coloring color_from_witness(const SimpleGraph& g, const ChargeFn& f, const Witness& wit,
                            ListAssignment lists, const ColorChooser& chooser) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.lists.size()) != n)
        throw Error("color_from_witness: lists must cover V(G)");
    for (VertexId v = 0; v < n; ++v) {
        auto& l = lists.lists[static_cast<size_t>(v)];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (static_cast<int>(l.size()) < f[static_cast<size_t>(v)] + 1)
            throw Error("color_from_witness: |L(" + std::to_string(v) + ")| < f+1");
    }
    auto check = verify(g, f, wit, false);
    if (!check) throw Error("color_from_witness: witness does not verify: " + check.message);

    Coloring col;
    col.color.assign(static_cast<size_t>(n), -1);
    std::vector<char> live(static_cast<size_t>(n), 1);
    for (const Move& m : wit) {
        auto& lu = lists.lists[static_cast<size_t>(m.vertex)];
        std::vector<int> cand;
        if (m.save_target != kBlank &&
            lu.size() > lists.lists[static_cast<size_t>(m.save_target)].size()) {
            const auto& lw = lists.lists[static_cast<size_t>(m.save_target)];
            std::set_difference(lu.begin(), lu.end(), lw.begin(), lw.end(),
                                std::back_inserter(cand));
        } else {
            cand = lu;
        }
        if (cand.empty())
            throw EngineBug("color pick set empty despite verified witness and list sizes");
        int c = chooser(cand);
        if (std::find(cand.begin(), cand.end(), c) == cand.end())
            throw Error("chooser returned a color outside the candidate set");
        col.color[static_cast<size_t>(m.vertex)] = c;
        live[static_cast<size_t>(m.vertex)] = 0;
        for (VertexId v : g.neighbors(m.vertex))
            if (live[static_cast<size_t>(v)]) erase_color(lists.lists[static_cast<size_t>(v)], c);
    }
    return col;
}

bool validate_coloring(const SimpleGraph& g, const Coloring& col, const ListAssignment* lists) {
    const int n = g.vertex_count();
    if (static_cast<int>(col.color.size()) != n) return false;
    for (VertexId v = 0; v < n; ++v) {
        int c = col.color[static_cast<size_t>(v)];
        if (c < 0) return false;
        if (lists) {
            const auto& l = lists->lists[static_cast<size_t>(v)];
            if (std::find(l.begin(), l.end(), c) == l.end()) return false;
        }
        for (VertexId w : g.neighbors(v))
            if (w > v && col.color[static_cast<size_t>(w)] == c) return false;
    }
    return true;
}

} // namespace wd
