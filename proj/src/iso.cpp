#include "minorlab/iso.hpp"

#include <algorithm>
#include <map>

namespace minorlab {

namespace {

// Iterated neighborhood-color refinement; returns stable colors.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> col(n);
    for (int v = 0; v < n; ++v) col[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{col[v]};
            for (int u : g.neighbors(v)) s.push_back(col[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = ids.find(sig[v].first);
            if (it == ids.end())
                it = ids.emplace(sig[v].first, static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map_ab;   // -1 if unassigned
    std::vector<char> used_b;
    std::vector<int> col_a, col_b;

    bool extend(int u) {
        if (u == a.vertex_count()) return true;
        for (int w = 0; w < b.vertex_count(); ++w) {
            if (used_b[w] || col_a[u] != col_b[w]) continue;
            bool ok = true;
            for (int x = 0; x < u && ok; ++x)
                if (a.has_edge(u, x) != b.has_edge(w, map_ab[x])) ok = false;
            if (!ok) continue;
            map_ab[u] = w;
            used_b[w] = 1;
            if (extend(u + 1)) return true;
            map_ab[u] = -1;
            used_b[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b,
                                            int max_vertices) {
    if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
        throw IsoLimitError("isomorphism check refused: graph larger than " +
                            std::to_string(max_vertices) + " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    // Colors refined on the disjoint union so that ids agree across a and b.
    std::vector<int> joint = refine_colors(disjoint_union(a, b));
    std::vector<int> col_a(joint.begin(), joint.begin() + a.vertex_count());
    std::vector<int> col_b(joint.begin() + a.vertex_count(), joint.end());
    IsoSearch s{a, b, std::vector<int>(a.vertex_count(), -1),
                std::vector<char>(b.vertex_count(), 0), std::move(col_a),
                std::move(col_b)};
    {
        auto sa = s.col_a, sb = s.col_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    if (!s.extend(0)) return std::nullopt;
    return s.map_ab;
}

bool isomorphic(const Graph& a, const Graph& b, int max_vertices) {
    return isomorphism(a, b, max_vertices).has_value();
}

}  // namespace minorlab
