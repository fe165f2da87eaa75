#include <algorithm>
#include <stdexcept>

#include "minorlab/embed.hpp"

namespace minorlab {

namespace {

struct DartTables {
    // darts indexed 2e, 2e+1 for edge e=(u<v): 2e is u->v, 2e+1 is v->u
    std::vector<Edge> edge_list;
    std::vector<int> dart_head;                 // dart -> head vertex
    std::vector<int> dart_tail;                 // dart -> tail vertex
    std::vector<int> dart_sign;                 // per dart (same for both)
    std::vector<std::vector<int>> rot_darts;    // rotation[v] as dart indices (outgoing)
    std::vector<std::vector<int>> pos_in_rot;   // vertex -> neighbor-slot for dart
    std::map<Edge, int> edge_index;

    int out_dart(int u, int v) const {
        auto it = edge_index.find({std::min(u, v), std::max(u, v)});
        int e = it->second;
        return (edge_list[e].first == u) ? 2 * e : 2 * e + 1;
    }
};

DartTables build_tables(const Graph& g, const Embedding& emb) {
    if (static_cast<int>(emb.rotation.size()) != g.vertex_count())
        throw std::invalid_argument("rotation size does not match vertex count");
    DartTables t;
    t.edge_list = g.edges();
    for (size_t e = 0; e < t.edge_list.size(); ++e)
        t.edge_index[t.edge_list[e]] = static_cast<int>(e);
    t.dart_head.resize(2 * t.edge_list.size());
    t.dart_tail.resize(2 * t.edge_list.size());
    t.dart_sign.resize(2 * t.edge_list.size());
    for (size_t e = 0; e < t.edge_list.size(); ++e) {
        auto [u, v] = t.edge_list[e];
        t.dart_tail[2 * e] = u;
        t.dart_head[2 * e] = v;
        t.dart_tail[2 * e + 1] = v;
        t.dart_head[2 * e + 1] = u;
        int s = emb.sign(u, v);
        if (s != 1 && s != -1) throw std::invalid_argument("edge sign must be +1 or -1");
        t.dart_sign[2 * e] = t.dart_sign[2 * e + 1] = s;
    }
    t.rot_darts.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = emb.rotation[v];
        std::vector<int> expect = g.neighbors(v);
        std::vector<int> got = rot;
        std::sort(got.begin(), got.end());
        if (got != expect)
            throw std::invalid_argument(
                "rotation at vertex " + std::to_string(v) +
                " is not a permutation of its neighborhood");
        for (int w : rot) t.rot_darts[v].push_back(t.out_dart(v, w));
    }
    return t;
}

// next state of the face walk: arrive along dart d with orientation flag o
// (0 = upright). Crossing a negative edge flips the flag; leave the head by
// the rotation successor (upright) or predecessor (flipped).
std::pair<int, int> walk_step(const DartTables& t, int d, int o) {
    int v = t.dart_head[d];
    int o2 = (t.dart_sign[d] < 0) ? 1 - o : o;
    int back = d ^ 1;  // dart v -> tail
    const auto& rot = t.rot_darts[v];
    int pos = -1;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == back) pos = static_cast<int>(i);
    int deg = static_cast<int>(rot.size());
    int next_pos = (o2 == 0) ? (pos + 1) % deg : (pos - 1 + deg) % deg;
    return {rot[next_pos], o2};
}

}  // namespace

// Each geometric face appears as exactly two traversal walks here (one per
// local orientation); face_count() halves the orbit count accordingly.
std::vector<std::vector<Edge>> trace_faces(const Graph& g, const Embedding& emb) {
    DartTables t = build_tables(g, emb);
    int nd = static_cast<int>(t.dart_head.size());
    std::vector<char> seen(2 * nd, 0);  // state = dart * 2 + orient
    std::vector<std::vector<Edge>> walks;
    size_t states = 0;
    for (int s0 = 0; s0 < 2 * nd; ++s0) {
        if (seen[s0]) continue;
        std::vector<Edge> walk;
        int d = s0 / 2, o = s0 % 2;
        do {
            seen[d * 2 + o] = 1;
            walk.emplace_back(t.dart_tail[d], t.dart_head[d]);
            auto [nd2, no2] = walk_step(t, d, o);
            d = nd2;
            o = no2;
        } while (!seen[d * 2 + o]);
        states += walk.size();
        walks.push_back(std::move(walk));
    }
    if (states != static_cast<size_t>(2 * nd))
        throw std::logic_error("face walk did not partition dart states");
    return walks;
}

int face_count(const Graph& g, const Embedding& emb) {
    // Number of faces = orbit count / 2 (each face appears in both global
    // orientations, possibly inside one orbit when signs flip the walk).
    DartTables t = build_tables(g, emb);
    int nd = static_cast<int>(t.dart_head.size());
    std::vector<char> seen(2 * nd, 0);
    int orbits = 0;
    for (int s0 = 0; s0 < 2 * nd; ++s0) {
        if (seen[s0]) continue;
        ++orbits;
        int d = s0 / 2, o = s0 % 2;
        while (!seen[d * 2 + o]) {
            seen[d * 2 + o] = 1;
            auto [d2, o2] = walk_step(t, d, o);
            d = d2;
            o = o2;
        }
    }
    if (orbits % 2 != 0) throw std::logic_error("odd face-orbit count");
    return orbits / 2;
}

Surface verify_embedding(const Graph& g, const Embedding& emb) {
    DartTables t = build_tables(g, emb);
    auto comps = components(g);

    // Per-component face counts.
    int nd = static_cast<int>(t.dart_head.size());
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> face_per_comp(comps.size(), 0);
    std::vector<char> seen(2 * nd, 0);
    for (int s0 = 0; s0 < 2 * nd; ++s0) {
        if (seen[s0]) continue;
        int d = s0 / 2, o = s0 % 2;
        face_per_comp[comp_of[t.dart_tail[d]]] += 1;
        while (!seen[d * 2 + o]) {
            seen[d * 2 + o] = 1;
            auto [d2, o2] = walk_step(t, d, o);
            d = d2;
            o = o2;
        }
    }

    int total_eg = 0;
    bool orientable = true;
    for (size_t c = 0; c < comps.size(); ++c) {
        int vc = static_cast<int>(comps[c].size());
        int ec = 0;
        for (int v : comps[c]) ec += g.degree(v);
        ec /= 2;
        if (ec == 0) continue;  // isolated vertex: sphere component
        int fc = face_per_comp[c] / 2;
        int chi = vc - ec + fc;
        int eg_c = 2 - chi;
        if (eg_c < 0) throw std::logic_error("negative traced genus");
        total_eg += eg_c;
    }

    // Orientability: signs reducible to all-positive by vertex reflections,
    // checked by a parity walk over a spanning forest.
    std::vector<int> refl(g.vertex_count(), 0);
    std::vector<char> vis(g.vertex_count(), 0);
    for (int root = 0; root < g.vertex_count() && orientable; ++root) {
        if (vis[root]) continue;
        vis[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty() && orientable) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                int s = emb.sign(u, w) < 0 ? 1 : 0;
                if (!vis[w]) {
                    vis[w] = 1;
                    refl[w] = refl[u] ^ s;
                    stack.push_back(w);
                } else if ((refl[u] ^ refl[w]) != s) {
                    orientable = false;
                    break;
                }
            }
        }
    }

    if (orientable) {
        if (total_eg % 2 != 0) throw std::logic_error("odd orientable genus trace");
        return Surface{false, total_eg / 2, 0};
    }
    return normalize(0, total_eg);
}

}  // namespace minorlab
