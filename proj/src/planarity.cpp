#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorlab/embed.hpp"

namespace minorlab {

namespace {

// ---------------------------------------------------------------- blocks ---

// Biconnected components as edge lists (original indices), via the classic
// lowpoint edge-stack DFS. Bridges come out as single-edge blocks.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int counter = 0;

    // iterative DFS to survive deep paths
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        num[root] = low[root] = counter++;
        while (!call.empty()) {
            auto& [u, it] = call.back();
            if (it < g.neighbors(u).size()) {
                int v = g.neighbors(u)[it++];
                if (num[v] < 0) {
                    stack.push_back({u, v});
                    parent[v] = u;
                    num[v] = low[v] = counter++;
                    call.push_back({v, 0});
                } else if (v != parent[u] && num[v] < num[u]) {
                    stack.push_back({u, v});
                    low[u] = std::min(low[u], num[v]);
                }
            } else {
                call.pop_back();
                if (!call.empty()) {
                    int p = call.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= num[p]) {
                        std::vector<Edge> block;
                        while (true) {
                            Edge e = stack.back();
                            stack.pop_back();
                            block.push_back(e);
                            if (e.first == p && e.second == u) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

// ------------------------------------------------------- fragment insertion ---

// Planarity of one 2-connected block by iterated fragment insertion: maintain
// an embedded subgraph as a set of facial cycles, repeatedly route a path of
// a fragment through an admissible face. Returns the rotation system or
// nullopt when some fragment has no admissible face.
struct BlockEmbedder {
    const Graph& g;  // block-local graph, 2-connected
    std::vector<char> in_h;
    std::set<Edge> h_edges;
    std::vector<std::vector<int>> faces;  // simple cycles, as vertex lists

    explicit BlockEmbedder(const Graph& graph)
        : g(graph), in_h(static_cast<size_t>(graph.vertex_count()), 0) {}

    bool has_h_edge(int u, int v) const {
        return h_edges.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    std::vector<int> initial_cycle() const {
        // proper DFS; non-tree edges connect ancestor-descendant pairs, so a
        // neighbor at smaller depth is an ancestor and closes a cycle
        std::vector<int> par(g.vertex_count(), -1);
        std::vector<int> depth(g.vertex_count(), -1);
        std::vector<std::pair<int, size_t>> call{{0, 0}};
        depth[0] = 0;
        while (!call.empty()) {
            auto& [u, it] = call.back();
            if (it >= g.neighbors(u).size()) {
                call.pop_back();
                continue;
            }
            int v = g.neighbors(u)[it++];
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                par[v] = u;
                call.push_back({v, 0});
            } else if (v != par[u] && depth[v] < depth[u]) {
                std::vector<int> cyc{u};
                int w = u;
                while (w != v) {
                    w = par[w];
                    cyc.push_back(w);
                }
                return cyc;
            }
        }
        throw std::logic_error("2-connected block without a cycle");
    }

    struct Fragment {
        std::vector<int> attachments;  // sorted, embedded vertices
        std::vector<int> path;         // attachment .. interior .. attachment
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // single unembedded edges between embedded vertices
        for (auto [u, v] : g.edges()) {
            if (in_h[u] && in_h[v] && !has_h_edge(u, v))
                out.push_back({{std::min(u, v), std::max(u, v)}, {u, v}});
        }
        // components of g - V(H) with their attachment edges
        std::vector<int> comp(g.vertex_count(), -1);
        int nc = 0;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (in_h[s] || comp[s] >= 0) continue;
            std::queue<int> q;
            q.push(s);
            comp[s] = nc;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : g.neighbors(u))
                    if (!in_h[v] && comp[v] < 0) {
                        comp[v] = nc;
                        q.push(v);
                    }
            }
            ++nc;
        }
        for (int c = 0; c < nc; ++c) {
            std::set<int> att;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (comp[v] == c)
                    for (int w : g.neighbors(v))
                        if (in_h[w]) att.insert(w);
            Fragment f;
            f.attachments.assign(att.begin(), att.end());
            // path between two attachments through the component: BFS from one
            // attachment, through component vertices, to any other attachment
            int a0 = f.attachments.front();
            std::vector<int> par(g.vertex_count(), -2);
            std::queue<int> q;
            par[a0] = -1;
            q.push(a0);
            int found = -1;
            while (!q.empty() && found < 0) {
                int u = q.front();
                q.pop();
                for (int v : g.neighbors(u)) {
                    if (par[v] != -2) continue;
                    if (u == a0 && comp[v] != c) continue;  // leave a0 into the fragment only
                    if (in_h[v]) {
                        if (v != a0 && att.count(v)) {
                            par[v] = u;
                            found = v;
                            break;
                        }
                        continue;
                    }
                    if (comp[v] != c) continue;
                    par[v] = u;
                    q.push(v);
                }
            }
            if (found < 0) throw std::logic_error("fragment without a second attachment");
            for (int w = found; w != -1; w = par[w]) f.path.push_back(w);
            std::reverse(f.path.begin(), f.path.end());
            out.push_back(std::move(f));
        }
        // deterministic order
        std::sort(out.begin(), out.end(), [](const Fragment& x, const Fragment& y) {
            if (x.attachments != y.attachments) return x.attachments < y.attachments;
            return x.path < y.path;
        });
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& f) const {
        std::vector<int> out;
        for (size_t i = 0; i < faces.size(); ++i) {
            std::set<int> fv(faces[i].begin(), faces[i].end());
            bool ok = true;
            for (int a : f.attachments)
                if (!fv.count(a)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    void embed_path(const std::vector<int>& path, int face_idx) {
        const std::vector<int> face = faces[static_cast<size_t>(face_idx)];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a) ia = static_cast<int>(i);
            if (face[i] == b) ib = static_cast<int>(i);
        }
        int t = static_cast<int>(face.size());
        std::vector<int> side1, side2;  // a..b and b..a along the face
        for (int i = ia; i != ib; i = (i + 1) % t) side1.push_back(face[static_cast<size_t>(i)]);
        side1.push_back(b);
        for (int i = ib; i != ia; i = (i + 1) % t) side2.push_back(face[static_cast<size_t>(i)]);
        side2.push_back(a);
        // interior of the new path, from b back to a and from a to b
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        std::vector<int> face_a = side1;  // a..b + reversed interior
        face_a.insert(face_a.end(), interior.rbegin(), interior.rend());
        std::vector<int> face_b = side2;  // b..a + interior
        face_b.insert(face_b.end(), interior.begin(), interior.end());
        faces.erase(faces.begin() + face_idx);
        faces.push_back(std::move(face_a));
        faces.push_back(std::move(face_b));
        for (int v : path) in_h[v] = 1;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            h_edges.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
    }

    std::optional<std::vector<std::vector<int>>> run() {
        std::vector<int> cyc = initial_cycle();
        faces.push_back(cyc);
        std::reverse(cyc.begin(), cyc.end());
        faces.push_back(cyc);
        for (int v : faces[0]) in_h[v] = 1;
        for (size_t i = 0; i < faces[0].size(); ++i) {
            int u = faces[0][i], v = faces[0][(i + 1) % faces[0].size()];
            h_edges.insert({std::min(u, v), std::max(u, v)});
        }
        while (h_edges.size() < static_cast<size_t>(g.edge_count())) {
            auto frags = fragments();
            int best = -1, best_count = -1;
            int best_face = -1;
            for (size_t i = 0; i < frags.size(); ++i) {
                auto adm = admissible_faces(frags[i]);
                if (adm.empty()) return std::nullopt;  // non-planar
                if (best < 0 || static_cast<int>(adm.size()) < best_count) {
                    best = static_cast<int>(i);
                    best_count = static_cast<int>(adm.size());
                    best_face = adm.front();
                }
            }
            embed_path(frags[static_cast<size_t>(best)].path, best_face);
        }
        return rotation_from_faces();
    }

    std::vector<std::vector<int>> rotation_from_faces() const {
        // successor map: face dart (u -> v) followed by (v -> w) fixes
        // rotation at v: w comes after u.
        std::vector<std::map<int, int>> succ(static_cast<size_t>(g.vertex_count()));
        for (const auto& f : faces) {
            size_t t = f.size();
            for (size_t i = 0; i < t; ++i) {
                int u = f[i], v = f[(i + 1) % t], w = f[(i + 2) % t];
                succ[static_cast<size_t>(v)][u] = w;
            }
        }
        std::vector<std::vector<int>> rot(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 0) continue;
            int start = g.neighbors(v).front();
            int u = start;
            do {
                rot[static_cast<size_t>(v)].push_back(u);
                auto it = succ[static_cast<size_t>(v)].find(u);
                if (it == succ[static_cast<size_t>(v)].end())
                    throw std::logic_error("face successor map incomplete");
                u = it->second;
            } while (u != start);
            if (rot[static_cast<size_t>(v)].size() != static_cast<size_t>(g.degree(v)))
                throw std::logic_error("rotation does not close into one cycle");
        }
        return rot;
    }
};

std::optional<std::vector<std::vector<int>>> embed_block(const Graph& block) {
    if (block.edge_count() <= 2 || block.vertex_count() <= 3) {
        // cycles, paths, single edges: any rotation works
        std::vector<std::vector<int>> rot;
        for (int v = 0; v < block.vertex_count(); ++v) rot.push_back(block.neighbors(v));
        return rot;
    }
    // Euler bound: a simple planar graph has at most 3n-6 edges.
    if (block.edge_count() > 3 * block.vertex_count() - 6) return std::nullopt;
    return BlockEmbedder(block).run();
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    res.embedding.rotation.assign(static_cast<size_t>(g.vertex_count()), {});
    for (const auto& block_edges : biconnected_blocks(g)) {
        std::set<int> vs;
        for (auto [u, v] : block_edges) {
            vs.insert(u);
            vs.insert(v);
        }
        std::vector<int> verts(vs.begin(), vs.end());
        Graph local = induced_subgraph(g, verts);
        // induced_subgraph keeps all induced edges; for a biconnected block
        // the induced edges are exactly the block edges.
        auto rot = embed_block(local);
        if (!rot) {
            res.planar = false;
            return res;
        }
        // merge block rotations at (cut) vertices: concatenation keeps each
        // block contiguous, which is always planar-compatible
        for (size_t i = 0; i < verts.size(); ++i)
            for (int w_local : (*rot)[i])
                res.embedding.rotation[static_cast<size_t>(verts[i])].push_back(
                    verts[static_cast<size_t>(w_local)]);
    }
    res.planar = true;
    return res;
}

bool is_planar_quick(const Graph& g) { return is_planar(g).planar; }

Graph kuratowski_subgraph(const Graph& g, std::vector<int>* orig_vertices) {
    if (is_planar_quick(g))
        throw std::invalid_argument("kuratowski_subgraph: graph is planar");
    std::vector<Edge> edges = g.edges();
    std::vector<char> alive(edges.size(), 1);
    auto build_without = [&](int skip) {
        Graph h(g.vertex_count());
        for (size_t i = 0; i < edges.size(); ++i)
            if (alive[i] && static_cast<int>(i) != skip)
                h.add_edge(edges[i].first, edges[i].second);
        return h;
    };
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!is_planar_quick(build_without(static_cast<int>(i)))) alive[i] = 0;
    }
    Graph pruned = build_without(-1);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (pruned.degree(v) > 0) keep.push_back(v);
    if (orig_vertices) *orig_vertices = keep;
    Graph k = induced_subgraph(pruned, keep);

    // sanity: must be a subdivision of K5 or K_{3,3}
    int deg3 = 0, deg4 = 0, deg2 = 0;
    for (int v = 0; v < k.vertex_count(); ++v) {
        int d = k.degree(v);
        if (d == 2)
            ++deg2;
        else if (d == 3)
            ++deg3;
        else if (d == 4)
            ++deg4;
        else
            throw std::logic_error("kuratowski extraction: unexpected degree");
    }
    bool shape_k5 = (deg4 == 5 && deg3 == 0);
    bool shape_k33 = (deg3 == 6 && deg4 == 0);
    if (!shape_k5 && !shape_k33)
        throw std::logic_error("kuratowski extraction: not a K5/K33 subdivision shape");
    (void)deg2;
    return k;
}

bool disk_embeddable(const Graph& g, const std::vector<int>& x) {
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("disk_embeddable: vertex out of range");
    Graph apex(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) apex.add_edge(u, v);
    std::set<int> xs(x.begin(), x.end());
    for (int v : xs) apex.add_edge(g.vertex_count(), v);
    return is_planar_quick(apex);
}

}  // namespace minorlab
