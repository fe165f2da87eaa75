#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "minorlab/embed.hpp"

namespace minorlab {

namespace {

// --------------------------------------------------------------- helpers ---

bool bipartite(const Graph& g) {
    std::vector<int> col(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (col[v] < 0) {
                    col[v] = col[u] ^ 1;
                    stack.push_back(v);
                } else if (col[v] == col[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Euler-formula floor for a connected graph: F <= 2m/3 (girth >= 3), F <= m/2
// when bipartite.
int eg_lower_bound(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (m == 0) return 0;
    int fmax = bipartite(g) ? m / 2 : (2 * m) / 3;
    return std::max(0, 2 - n + m - fmax);
}

// ------------------------------------------------------ exhaustive search ---

// Branch and bound over signed rotation systems: edges are inserted one at a
// time into rotation slots; spanning-tree edges keep sign +1 (switching
// canonical form), other edges branch over signs unless the target surface is
// orientable. A partial embedding whose traced genus already exceeds the
// target is abandoned: deleting edges never increases the traced genus.
struct GenusSearch {
    const Graph& g;
    int target_eg;
    bool orientable_only;
    bool require_nonorientable;

    std::vector<Edge> all_edges;
    std::map<Edge, int> edge_index;
    std::vector<int> order;          // indices into all_edges, insertion order
    std::vector<char> tree_edge;     // per order position
    std::vector<int> nontree_after;  // non-tree edges strictly after position

    std::vector<std::vector<int>> rot;  // rotation under construction
    std::vector<int> sign_of_edge;      // +1 / -1 per edge id
    std::vector<char> live;             // edge id currently embedded
    int neg_count = 0;
    std::optional<Embedding> found;

    // scratch buffers
    std::vector<char> seen_state;
    std::vector<int> comp_of;
    std::vector<int> comp_faces, comp_v, comp_e;

    GenusSearch(const Graph& graph, int target, bool orient_only, bool need_nonor)
        : g(graph),
          target_eg(target),
          orientable_only(orient_only),
          require_nonorientable(need_nonor),
          all_edges(graph.edges()),
          rot(static_cast<size_t>(graph.vertex_count())),
          sign_of_edge(all_edges.size(), 1),
          live(all_edges.size(), 0),
          seen_state(4 * all_edges.size(), 0),
          comp_of(static_cast<size_t>(graph.vertex_count()), -1) {
        for (size_t e = 0; e < all_edges.size(); ++e)
            edge_index[all_edges[e]] = static_cast<int>(e);
        build_order();
    }

    void build_order() {
        std::vector<char> placed(all_edges.size(), 0);
        std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
        int start = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(start)) start = v;
        if (g.vertex_count() > 0) in[static_cast<size_t>(start)] = 1;
        for (size_t step = 0; step < all_edges.size(); ++step) {
            int best = -1, best_rank = -1;
            for (size_t e = 0; e < all_edges.size(); ++e) {
                if (placed[e]) continue;
                auto [u, v] = all_edges[e];
                int touch = in[static_cast<size_t>(u)] + in[static_cast<size_t>(v)];
                int rank = touch * 1000 + g.degree(u) + g.degree(v);
                if (touch > 0 && rank > best_rank) {
                    best_rank = rank;
                    best = static_cast<int>(e);
                }
            }
            if (best < 0) {  // next component
                for (size_t e = 0; e < all_edges.size(); ++e) {
                    if (placed[e]) continue;
                    auto [u, v] = all_edges[e];
                    int rank = g.degree(u) + g.degree(v);
                    if (rank > best_rank) {
                        best_rank = rank;
                        best = static_cast<int>(e);
                    }
                }
                in[static_cast<size_t>(all_edges[static_cast<size_t>(best)].first)] = 1;
            }
            auto [u, v] = all_edges[static_cast<size_t>(best)];
            tree_edge.push_back(!(in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)]));
            in[static_cast<size_t>(u)] = in[static_cast<size_t>(v)] = 1;
            order.push_back(best);
            placed[static_cast<size_t>(best)] = 1;
        }
        nontree_after.assign(order.size() + 1, 0);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i)
            nontree_after[static_cast<size_t>(i)] =
                nontree_after[static_cast<size_t>(i) + 1] + (tree_edge[static_cast<size_t>(i)] ? 0 : 1);
    }

    int out_dart(int v, int w) const {
        int e = edge_index.at({std::min(v, w), std::max(v, w)});
        return (all_edges[static_cast<size_t>(e)].first == v) ? 2 * e : 2 * e + 1;
    }

    // Euler genus of the current partial embedding, summed per component.
    int partial_eg() {
        std::fill(comp_of.begin(), comp_of.end(), -1);
        int nc = 0;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (comp_of[static_cast<size_t>(s)] >= 0 || rot[static_cast<size_t>(s)].empty())
                continue;
            comp_of[static_cast<size_t>(s)] = nc;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : rot[static_cast<size_t>(u)])
                    if (comp_of[static_cast<size_t>(v)] < 0) {
                        comp_of[static_cast<size_t>(v)] = nc;
                        stack.push_back(v);
                    }
            }
            ++nc;
        }
        comp_faces.assign(static_cast<size_t>(nc), 0);
        comp_v.assign(static_cast<size_t>(nc), 0);
        comp_e.assign(static_cast<size_t>(nc), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp_of[static_cast<size_t>(v)] >= 0)
                comp_v[static_cast<size_t>(comp_of[static_cast<size_t>(v)])] += 1;
        std::fill(seen_state.begin(), seen_state.end(), 0);
        for (size_t e = 0; e < all_edges.size(); ++e)
            if (live[e])
                comp_e[static_cast<size_t>(comp_of[static_cast<size_t>(all_edges[e].first)])] += 1;
        for (size_t e = 0; e < all_edges.size(); ++e) {
            if (!live[e]) continue;
            for (int half = 0; half < 2; ++half) {
                for (int o0 = 0; o0 < 2; ++o0) {
                    int d0 = static_cast<int>(2 * e) + half;
                    if (seen_state[static_cast<size_t>(d0) * 2 + static_cast<size_t>(o0)])
                        continue;
                    comp_faces[static_cast<size_t>(
                        comp_of[static_cast<size_t>(all_edges[e].first)])] += 1;
                    int d = d0, o = o0;
                    while (!seen_state[static_cast<size_t>(d) * 2 + static_cast<size_t>(o)]) {
                        seen_state[static_cast<size_t>(d) * 2 + static_cast<size_t>(o)] = 1;
                        const Edge& ed = all_edges[static_cast<size_t>(d / 2)];
                        int v = (d % 2 == 0) ? ed.second : ed.first;
                        int o2 = (sign_of_edge[static_cast<size_t>(d / 2)] < 0) ? 1 - o : o;
                        int back = d ^ 1;
                        const auto& r = rot[static_cast<size_t>(v)];
                        int pos = -1;
                        for (size_t i = 0; i < r.size(); ++i)
                            if (out_dart(v, r[i]) == back) {
                                pos = static_cast<int>(i);
                                break;
                            }
                        int deg = static_cast<int>(r.size());
                        int np = (o2 == 0) ? (pos + 1) % deg : (pos - 1 + deg) % deg;
                        d = out_dart(v, r[static_cast<size_t>(np)]);
                        o = o2;
                    }
                }
            }
        }
        int total = 0;
        for (int c = 0; c < nc; ++c) {
            int chi = comp_v[static_cast<size_t>(c)] - comp_e[static_cast<size_t>(c)] +
                      comp_faces[static_cast<size_t>(c)] / 2;
            total += 2 - chi;
        }
        return total;
    }

    bool search(size_t idx, uint64_t& nodes, uint64_t node_cap) {
        if (idx == order.size()) {
            if (require_nonorientable && neg_count == 0) return false;
            Embedding emb;
            emb.rotation = rot;
            for (size_t e = 0; e < all_edges.size(); ++e)
                if (sign_of_edge[e] < 0) emb.signs[all_edges[e]] = -1;
            found = emb;
            return true;
        }
        int eid = order[idx];
        auto [u, v] = all_edges[static_cast<size_t>(eid)];
        auto& ru = rot[static_cast<size_t>(u)];
        auto& rv = rot[static_cast<size_t>(v)];
        bool u_new = ru.empty(), v_new = rv.empty();
        int su = u_new ? 1 : static_cast<int>(ru.size());
        int sv = v_new ? 1 : static_cast<int>(rv.size());
        bool branch_sign = !orientable_only && !tree_edge[idx];
        bool force_negative =
            branch_sign && require_nonorientable && neg_count == 0 && nontree_after[idx + 1] == 0;
        for (int si = 0; si < su; ++si) {
            for (int sj = 0; sj < sv; ++sj) {
                for (int sg : {1, -1}) {
                    if (sg < 0 && !branch_sign) continue;
                    if (sg > 0 && force_negative) continue;
                    if (++nodes > node_cap)
                        throw std::runtime_error("genus search exceeded its node cap");
                    ru.insert(ru.begin() + (u_new ? 0 : si + 1), v);
                    rv.insert(rv.begin() + (v_new ? 0 : sj + 1), u);
                    sign_of_edge[static_cast<size_t>(eid)] = sg;
                    live[static_cast<size_t>(eid)] = 1;
                    if (sg < 0) ++neg_count;
                    if (partial_eg() <= target_eg && search(idx + 1, nodes, node_cap))
                        return true;
                    if (sg < 0) --neg_count;
                    live[static_cast<size_t>(eid)] = 0;
                    sign_of_edge[static_cast<size_t>(eid)] = 1;
                    ru.erase(ru.begin() + (u_new ? 0 : si + 1));
                    rv.erase(rv.begin() + (v_new ? 0 : sj + 1));
                }
            }
        }
        return false;
    }
};

std::optional<Embedding> find_embedding(const Graph& g, int target_eg,
                                        bool orientable_only, bool need_nonor) {
    GenusSearch s(g, target_eg, orientable_only, need_nonor);
    uint64_t nodes = 0;
    const uint64_t node_cap = 2000ull * 1000 * 1000;
    if (s.search(0, nodes, node_cap)) return s.found;
    return std::nullopt;
}

// ----------------------------------------------------- per-block analysis ---

struct BlockInfo {
    std::vector<int> verts;  // original indices
    Graph local;
    int gamma = -1;  // orientable genus (handles); -1 = not found within cap
    int nonor = -1;  // min Euler genus over non-orientable hosts; -1 likewise
    std::optional<Embedding> emb_orient;
    std::optional<Embedding> emb_nonor;
};

std::vector<std::vector<Edge>> blocks_of(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int counter = 0;
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

// Analyzes one block up to the caps (gamma_cap in handles, nonor_cap in Euler
// genus). Returns nullopt when a non-planar block exceeds the edge budget.
std::optional<BlockInfo> analyze_block(const Graph& g, const std::vector<Edge>& edges,
                                       int gamma_cap, int nonor_cap,
                                       int max_block_edges) {
    BlockInfo info;
    std::set<int> vs;
    for (auto [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
    }
    info.verts.assign(vs.begin(), vs.end());
    info.local = induced_subgraph(g, info.verts);
    PlanarityResult pl = is_planar(info.local);
    if (pl.planar) {
        info.gamma = 0;
        info.nonor = 1;  // drawn inside a disk of the projective plane
        info.emb_orient = pl.embedding;
        info.emb_nonor = pl.embedding;  // traces the sphere, below any N_k
        return info;
    }
    if (info.local.edge_count() > max_block_edges) return std::nullopt;
    int lb = eg_lower_bound(info.local);
    for (int h = (lb + 1) / 2; h <= gamma_cap; ++h) {
        auto emb = find_embedding(info.local, 2 * h, true, false);
        if (emb) {
            info.gamma = h;
            info.emb_orient = emb;
            break;
        }
    }
    for (int t = std::max(1, lb); t <= nonor_cap; ++t) {
        auto emb = find_embedding(info.local, t, false, true);
        if (emb) {
            info.nonor = t;
            info.emb_nonor = emb;
            break;
        }
    }
    // the non-cellular route: an orientable embedding plus a spare crosscap
    if (info.gamma >= 0 && 2 * info.gamma + 1 <= nonor_cap &&
        (info.nonor < 0 || 2 * info.gamma + 1 < info.nonor)) {
        info.nonor = 2 * info.gamma + 1;
        info.emb_nonor = info.emb_orient;
    }
    return info;
}

void merge_witness(Embedding& into, const BlockInfo& b, const Embedding& local_emb) {
    for (size_t i = 0; i < b.verts.size(); ++i)
        for (int w_local : local_emb.rotation[i])
            into.rotation[static_cast<size_t>(b.verts[i])].push_back(
                b.verts[static_cast<size_t>(w_local)]);
    for (const auto& [e, s] : local_emb.signs)
        if (s < 0) {
            int a = b.verts[static_cast<size_t>(e.first)];
            int c = b.verts[static_cast<size_t>(e.second)];
            into.signs[{std::min(a, c), std::max(a, c)}] = -1;
        }
}

struct WholeGenus {
    Verdict verdict = Verdict::Yes;
    long long gamma_total = -1;  // -1: above cap
    long long nonor_total = -1;  // -1: above cap
    std::vector<BlockInfo> blocks;
    std::vector<char> nonor_choice;  // per block, for the nonor_total witness
    int refused_edges = 0;
};

// Orientable genus sums over blocks. The cheapest non-orientable host picks,
// independently per block, the cheaper of its orientable (2 gamma) and
// non-orientable realizations, requiring at least one non-orientable pick;
// when every block prefers orientable, one extra crosscap hosts the rest.
WholeGenus whole_graph_genus(const Graph& g, int gamma_cap, int nonor_cap,
                             int max_block_edges) {
    WholeGenus w;
    for (const auto& be : blocks_of(g)) {
        auto info = analyze_block(g, be, gamma_cap, nonor_cap, max_block_edges);
        if (!info) {
            w.verdict = Verdict::Refused;
            w.refused_edges = static_cast<int>(be.size());
            return w;
        }
        w.blocks.push_back(std::move(*info));
    }
    const long long kInf = std::numeric_limits<long long>::max() / 4;

    long long gamma = 0;
    for (const auto& b : w.blocks) gamma = (b.gamma < 0 || gamma >= kInf) ? kInf : gamma + b.gamma;
    w.gamma_total = (gamma <= gamma_cap) ? gamma : -1;

    w.nonor_choice.assign(w.blocks.size(), 0);
    long long sum_min = 0;
    bool some_nonor_pick = false;
    long long cheapest_upgrade = kInf;  // cost of forcing one block non-orientable
    int upgrade_block = -1;
    for (size_t i = 0; i < w.blocks.size(); ++i) {
        const auto& b = w.blocks[i];
        long long oc = b.gamma >= 0 ? 2ll * b.gamma : kInf;
        long long nc = b.nonor >= 0 ? b.nonor : kInf;
        long long mc = std::min(oc, nc);
        if (mc >= kInf) {
            sum_min = kInf;
            break;
        }
        sum_min += mc;
        if (nc <= oc) {
            some_nonor_pick = true;
            w.nonor_choice[i] = 1;
        } else if (nc - oc < cheapest_upgrade) {
            cheapest_upgrade = nc - oc;
            upgrade_block = static_cast<int>(i);
        }
    }
    long long best;
    if (w.blocks.empty()) {
        best = 1;  // planar content inside a projective plane
    } else if (sum_min >= kInf) {
        best = kInf;
    } else if (some_nonor_pick) {
        best = sum_min;
    } else {
        // all blocks prefer orientable: either upgrade one or spend a crosscap
        long long via_upgrade = cheapest_upgrade >= kInf ? kInf : sum_min + cheapest_upgrade;
        long long via_crosscap = sum_min + 1;
        if (via_upgrade < via_crosscap && upgrade_block >= 0) {
            w.nonor_choice[static_cast<size_t>(upgrade_block)] = 1;
            best = via_upgrade;
        } else {
            best = via_crosscap;  // all-orientable witness below N_{2g+1}
        }
    }
    w.nonor_total = (best <= nonor_cap) ? best : -1;
    return w;
}

Embedding assemble_witness(const Graph& g, const WholeGenus& w, bool nonorientable) {
    Embedding emb;
    emb.rotation.assign(static_cast<size_t>(g.vertex_count()), {});
    for (size_t i = 0; i < w.blocks.size(); ++i) {
        const BlockInfo& b = w.blocks[i];
        bool use_nonor = nonorientable && w.nonor_choice[i] && b.emb_nonor.has_value();
        const Embedding& le = use_nonor ? *b.emb_nonor : *b.emb_orient;
        merge_witness(emb, b, le);
    }
    return emb;
}

}  // namespace

GenusResult euler_genus(const Graph& g, int max_block_edges) {
    GenusResult res;
    int cap = std::max(1, g.edge_count() - g.vertex_count() + 2);
    WholeGenus w = whole_graph_genus(g, cap, 2 * cap + 1, max_block_edges);
    if (w.verdict == Verdict::Refused) {
        res.verdict = Verdict::Refused;
        res.refused_block_edges = w.refused_edges;
        return res;
    }
    res.verdict = Verdict::Yes;
    res.orientable_genus = static_cast<int>(w.gamma_total);
    res.nonorientable_genus = static_cast<int>(w.nonor_total);
    res.eg = static_cast<int>(std::min(2 * w.gamma_total, w.nonor_total));
    bool use_nonor = w.nonor_total < 2 * w.gamma_total;
    res.witness = assemble_witness(g, w, use_nonor);
    return res;
}

EmbedResult embeds(const Graph& g, const Surface& s, int max_block_edges) {
    EmbedResult res;
    if (s.empty) {
        // only the vertexless graph lives in the empty surface
        res.verdict = (g.vertex_count() == 0) ? Verdict::Yes : Verdict::No;
        if (res.verdict == Verdict::Yes) res.witness = Embedding{};
        return res;
    }
    int t = s.euler_genus();
    int gamma_cap = s.orientable() ? s.h : t / 2;
    WholeGenus w = whole_graph_genus(g, gamma_cap, t, max_block_edges);
    if (w.verdict == Verdict::Refused) {
        res.verdict = Verdict::Refused;
        res.refused_block_edges = w.refused_edges;
        return res;
    }
    if (s.orientable()) {
        if (w.gamma_total >= 0 && w.gamma_total <= s.h) {
            res.verdict = Verdict::Yes;
            res.witness = assemble_witness(g, w, false);
        } else {
            res.verdict = Verdict::No;
        }
        return res;
    }
    bool via_orient = w.gamma_total >= 0 && 2 * w.gamma_total + 1 <= t;
    bool via_nonor = w.nonor_total >= 0 && w.nonor_total <= t;
    if (via_orient || via_nonor) {
        res.verdict = Verdict::Yes;
        res.witness = assemble_witness(g, w, !via_orient);
    } else {
        res.verdict = Verdict::No;
    }
    return res;
}

MinimalSurfaces minimal_surfaces(const Graph& g, int max_block_edges) {
    MinimalSurfaces out;
    GenusResult gr = euler_genus(g, max_block_edges);
    if (gr.verdict == Verdict::Refused) {
        out.verdict = Verdict::Refused;
        out.refused_block_edges = gr.refused_block_edges;
        return out;
    }
    out.verdict = Verdict::Yes;
    Surface orient{false, *gr.orientable_genus, 0};
    Surface nonor = normalize(0, *gr.nonorientable_genus);
    out.antichain.push_back(orient);
    if (!surface_leq(orient, nonor)) out.antichain.push_back(nonor);
    return out;
}

}  // namespace minorlab
