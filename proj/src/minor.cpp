#include "minorlab/minor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "minorlab/embed.hpp"

namespace minorlab {

bool verify_model(const Graph& pattern, const Graph& host, const MinorModel& m) {
    if (static_cast<int>(m.branch.size()) != pattern.vertex_count()) return false;
    std::vector<int> owner(static_cast<size_t>(host.vertex_count()), -1);
    for (size_t p = 0; p < m.branch.size(); ++p) {
        if (m.branch[p].empty()) return false;
        for (int v : m.branch[p]) {
            if (v < 0 || v >= host.vertex_count()) return false;
            if (owner[static_cast<size_t>(v)] != -1) return false;
            owner[static_cast<size_t>(v)] = static_cast<int>(p);
        }
        // connectivity of the branch set
        std::set<int> in(m.branch[p].begin(), m.branch[p].end());
        std::vector<int> stack{m.branch[p].front()};
        std::set<int> seen{m.branch[p].front()};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : host.neighbors(u))
                if (in.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != in.size()) return false;
    }
    for (auto [p, q] : pattern.edges()) {
        bool realized = false;
        for (int v : m.branch[static_cast<size_t>(p)]) {
            for (int w : host.neighbors(v))
                if (owner[static_cast<size_t>(w)] == q) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized) return false;
    }
    return true;
}

namespace {

struct BudgetExceeded {};

struct FreeSetKey {
    std::vector<uint64_t> words;
    bool operator==(const FreeSetKey& o) const { return words == o.words; }
};
struct FreeSetHash {
    size_t operator()(const FreeSetKey& k) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : k.words) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Branch-and-bound minor search over one or more pattern copies. Branch sets
// grow one host vertex at a time; the next requirement is either the first
// unseeded pattern vertex or the unrealized pattern edge whose endpoints are
// farthest apart. Sound pruning only: unreachable branch sets, vertex counts,
// and planarity of the untouched region against unplaced non-planar pattern
// components.
struct MinorSearch {
    const Graph& host;
    std::vector<Graph> copies;
    int mult;
    uint64_t budget;
    SearchStats stats;

    // global pattern index space
    int total_pv = 0;
    std::vector<int> copy_of;             // global pv -> copy id
    std::vector<int> local_of;            // global pv -> local vertex in copy
    std::vector<std::vector<int>> gadj;   // global pattern adjacency
    std::vector<Edge> gedges;             // global pattern edges (u < v)
    std::vector<int> order;               // seeding order of global pv
    std::vector<int> pos_in_order;
    std::vector<int> comp_id;             // pattern component id (global)
    std::vector<char> comp_nonplanar;     // per component
    std::vector<int> comp_seed_count;     // seeded vertices per component
    std::vector<int> prev_equal_copy;     // copy id -> previous identical copy or -1

    // host state
    std::vector<std::array<int, 2>> owners;  // global pv ids using the vertex
    std::vector<int> owner_count;
    std::vector<std::vector<int>> branch;  // per global pv
    std::vector<int> first_seed;           // per copy: host index of first seed
    std::vector<int> real_count;           // per global pattern edge
    std::vector<std::vector<int>> edges_at;  // global pv -> incident gedge ids
    int seeded_count = 0;

    std::unordered_map<FreeSetKey, bool, FreeSetHash> planar_cache;
    std::optional<MinorModel> found;

    MinorSearch(const Graph& h, std::vector<Graph> cps, int multiplicity, uint64_t b)
        : host(h), copies(std::move(cps)), mult(multiplicity), budget(b) {
        stats.budget = b;
        build_pattern();
        owners.assign(static_cast<size_t>(host.vertex_count()), {-1, -1});
        owner_count.assign(static_cast<size_t>(host.vertex_count()), 0);
        branch.assign(static_cast<size_t>(total_pv), {});
        first_seed.assign(copies.size(), -1);
        real_count.assign(gedges.size(), 0);
    }

    void build_pattern() {
        for (size_t c = 0; c < copies.size(); ++c) {
            int off = total_pv;
            total_pv += copies[c].vertex_count();
            for (int v = 0; v < copies[c].vertex_count(); ++v) {
                copy_of.push_back(static_cast<int>(c));
                local_of.push_back(v);
            }
            for (auto [u, v] : copies[c].edges())
                gedges.push_back({off + u, off + v});
        }
        gadj.assign(static_cast<size_t>(total_pv), {});
        edges_at.assign(static_cast<size_t>(total_pv), {});
        for (size_t e = 0; e < gedges.size(); ++e) {
            auto [u, v] = gedges[e];
            gadj[static_cast<size_t>(u)].push_back(v);
            gadj[static_cast<size_t>(v)].push_back(u);
            edges_at[static_cast<size_t>(u)].push_back(static_cast<int>(e));
            edges_at[static_cast<size_t>(v)].push_back(static_cast<int>(e));
        }
        // components (global, within copies by construction)
        comp_id.assign(static_cast<size_t>(total_pv), -1);
        int nc = 0;
        for (int s = 0; s < total_pv; ++s) {
            if (comp_id[static_cast<size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            comp_id[static_cast<size_t>(s)] = nc;
            std::vector<int> verts;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                verts.push_back(u);
                for (int w : gadj[static_cast<size_t>(u)])
                    if (comp_id[static_cast<size_t>(w)] < 0) {
                        comp_id[static_cast<size_t>(w)] = nc;
                        stack.push_back(w);
                    }
            }
            // planarity of the component (pattern-side, once)
            std::vector<int> locals;
            for (int g : verts) locals.push_back(local_of[static_cast<size_t>(g)]);
            Graph comp_local = induced_subgraph(copies[static_cast<size_t>(
                                                    copy_of[static_cast<size_t>(s)])],
                                                locals);
            comp_nonplanar.push_back(!is_planar_quick(comp_local));
            ++nc;
        }
        comp_seed_count.assign(static_cast<size_t>(nc), 0);

        // seeding order: copies in order; inside a copy, components by
        // descending weight; inside a component, BFS from the max-degree
        // vertex, most-attached first
        std::vector<char> placed(static_cast<size_t>(total_pv), 0);
        for (size_t c = 0; c < copies.size(); ++c) {
            std::vector<std::vector<int>> comps_here;
            std::set<int> comp_seen;
            for (int g = 0; g < total_pv; ++g) {
                if (copy_of[static_cast<size_t>(g)] != static_cast<int>(c)) continue;
                if (!comp_seen.insert(comp_id[static_cast<size_t>(g)]).second) continue;
                std::vector<int> members;
                for (int x = 0; x < total_pv; ++x)
                    if (comp_id[static_cast<size_t>(x)] == comp_id[static_cast<size_t>(g)])
                        members.push_back(x);
                comps_here.push_back(std::move(members));
            }
            std::stable_sort(comps_here.begin(), comps_here.end(),
                             [&](const std::vector<int>& a, const std::vector<int>& b) {
                                 return a.size() > b.size();
                             });
            for (const auto& members : comps_here) {
                int start = members.front();
                for (int g : members)
                    if (gadj[static_cast<size_t>(g)].size() >
                        gadj[static_cast<size_t>(start)].size())
                        start = g;
                std::vector<int> local_order{start};
                placed[static_cast<size_t>(start)] = 1;
                while (local_order.size() < members.size()) {
                    int best = -1, best_att = -1, best_deg = -1;
                    for (int g : members) {
                        if (placed[static_cast<size_t>(g)]) continue;
                        int att = 0;
                        for (int w : gadj[static_cast<size_t>(g)])
                            if (placed[static_cast<size_t>(w)]) ++att;
                        int deg = static_cast<int>(gadj[static_cast<size_t>(g)].size());
                        if (att > best_att || (att == best_att && deg > best_deg)) {
                            best = g;
                            best_att = att;
                            best_deg = deg;
                        }
                    }
                    placed[static_cast<size_t>(best)] = 1;
                    local_order.push_back(best);
                }
                for (int g : local_order) order.push_back(g);
            }
        }
        pos_in_order.assign(static_cast<size_t>(total_pv), 0);
        for (size_t i = 0; i < order.size(); ++i)
            pos_in_order[static_cast<size_t>(order[i])] = static_cast<int>(i);

        // copy-level symmetry: identical consecutive copies seed in
        // increasing host order of their first seeds
        prev_equal_copy.assign(copies.size(), -1);
        for (size_t c = 1; c < copies.size(); ++c)
            if (copies[c] == copies[c - 1])
                prev_equal_copy[c] = static_cast<int>(c) - 1;
    }

    bool available(int hv, int copy) const {
        if (owner_count[static_cast<size_t>(hv)] >= mult) return false;
        for (int o : owners[static_cast<size_t>(hv)])
            if (o >= 0 && copy_of[static_cast<size_t>(o)] == copy) return false;
        return true;
    }

    void add_to_branch(int gpv, int hv) {
        branch[static_cast<size_t>(gpv)].push_back(hv);
        auto& ow = owners[static_cast<size_t>(hv)];
        ow[ow[0] < 0 ? 0 : 1] = gpv;
        owner_count[static_cast<size_t>(hv)] += 1;
        for (int e : edges_at[static_cast<size_t>(gpv)]) {
            int other = gedges[static_cast<size_t>(e)].first == gpv
                            ? gedges[static_cast<size_t>(e)].second
                            : gedges[static_cast<size_t>(e)].first;
            for (int w : host.neighbors(hv))
                for (int o : owners[static_cast<size_t>(w)])
                    if (o == other) real_count[static_cast<size_t>(e)] += 1;
        }
    }

    void remove_from_branch(int gpv, int hv) {
        for (int e : edges_at[static_cast<size_t>(gpv)]) {
            int other = gedges[static_cast<size_t>(e)].first == gpv
                            ? gedges[static_cast<size_t>(e)].second
                            : gedges[static_cast<size_t>(e)].first;
            for (int w : host.neighbors(hv))
                for (int o : owners[static_cast<size_t>(w)])
                    if (o == other) real_count[static_cast<size_t>(e)] -= 1;
        }
        auto& ow = owners[static_cast<size_t>(hv)];
        if (ow[1] == gpv)
            ow[1] = -1;
        else {
            ow[0] = ow[1];
            ow[1] = -1;
        }
        owner_count[static_cast<size_t>(hv)] -= 1;
        branch[static_cast<size_t>(gpv)].pop_back();
    }

    // distance from branch(p) to branch(q) through vertices available to the
    // copy; returns pair(distance, parent map) or distance -1 if unreachable
    int branch_distance(int p, int q, std::vector<int>* dist_from_q = nullptr) {
        int copy = copy_of[static_cast<size_t>(p)];
        std::vector<int> dist(static_cast<size_t>(host.vertex_count()), -1);
        std::queue<int> bfs;
        for (int v : branch[static_cast<size_t>(q)]) {
            dist[static_cast<size_t>(v)] = 0;
            bfs.push(v);
        }
        int best = -1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : host.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] >= 0) continue;
                bool in_p = false;
                for (int o : owners[static_cast<size_t>(w)])
                    if (o == p) in_p = true;
                if (in_p) {
                    best = dist[static_cast<size_t>(u)] + 1;
                    if (dist_from_q) *dist_from_q = dist;
                    return best;
                }
                if (!available(w, copy)) continue;
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                bfs.push(w);
            }
        }
        if (dist_from_q) *dist_from_q = dist;
        return -1;
    }

    // planarity-based prune against pattern components with no seeds yet
    bool region_prune() {
        if (mult != 1) return false;
        int q = 0;
        for (size_t c = 0; c < comp_nonplanar.size(); ++c)
            if (comp_nonplanar[c] && comp_seed_count[c] == 0) ++q;
        if (q == 0) return false;
        std::vector<int> free_verts;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (owner_count[static_cast<size_t>(v)] == 0) free_verts.push_back(v);
        FreeSetKey key;
        key.words.assign((static_cast<size_t>(host.vertex_count()) + 63) / 64, 0);
        for (int v : free_verts)
            key.words[static_cast<size_t>(v) / 64] |= 1ull << (v % 64);
        bool planar;
        auto it = planar_cache.find(key);
        if (it != planar_cache.end()) {
            planar = it->second;
        } else {
            planar = is_planar_quick(induced_subgraph(host, free_verts));
            planar_cache.emplace(key, planar);
        }
        if (planar) {
            ++stats.planarity_prunes;
            return true;
        }
        if (q >= 2) {
            // greedy apex cover: if q-1 vertices planarize the region, it
            // cannot host q disjoint non-planar pattern components
            Graph region = induced_subgraph(host, free_verts);
            int removed = 0;
            while (removed < q - 1) {
                std::vector<int> kv;
                kuratowski_subgraph(region, &kv);
                int best = kv.front();
                for (int v : kv)
                    if (region.degree(v) > region.degree(best)) best = v;
                region = delete_vertex(region, best);
                ++removed;
                if (is_planar_quick(region)) {
                    ++stats.planarity_prunes;
                    return true;
                }
            }
        }
        return false;
    }

    bool search() {
        if (++stats.nodes > budget) throw BudgetExceeded{};
        // periodic region check; sound prunes cannot cut any model, so the
        // firing cadence affects speed only
        if ((stats.nodes & 0xFF) == 0 && region_prune()) return false;

        // requirement 1: an unrealized pattern edge between seeded vertices
        int req_edge = -1, req_dist = -1;
        for (size_t e = 0; e < gedges.size(); ++e) {
            if (real_count[e] > 0) continue;
            auto [p, q] = gedges[e];
            if (branch[static_cast<size_t>(p)].empty() ||
                branch[static_cast<size_t>(q)].empty())
                continue;
            int d = branch_distance(p, q);
            if (d < 0) {
                ++stats.connect_prunes;
                return false;
            }
            if (d > req_dist) {
                req_dist = d;
                req_edge = static_cast<int>(e);
            }
        }
        if (req_edge >= 0) {
            auto [p, q] = gedges[static_cast<size_t>(req_edge)];
            return branch_edge_growth(p, q);
        }

        // requirement 2: seed the next pattern vertex
        int next = -1;
        for (int g : order)
            if (branch[static_cast<size_t>(g)].empty()) {
                next = g;
                break;
            }
        if (next < 0) {
            MinorModel m;
            m.branch = branch;
            for (auto& b : m.branch) std::sort(b.begin(), b.end());
            found = m;
            return true;
        }
        return branch_seed(next);
    }

    bool branch_edge_growth(int p, int q) {
        // candidates: grow either endpoint by an adjacent available vertex,
        // nearest to the other side first
        std::vector<int> dist_from_q, dist_from_p;
        branch_distance(p, q, &dist_from_q);
        branch_distance(q, p, &dist_from_p);
        struct Cand {
            int side_pv;
            int hv;
            int key;
        };
        std::vector<Cand> cands;
        auto collect = [&](int side, const std::vector<int>& dist_to_other) {
            int copy = copy_of[static_cast<size_t>(side)];
            std::set<int> seen;
            for (int v : branch[static_cast<size_t>(side)])
                for (int w : host.neighbors(v)) {
                    if (!available(w, copy) || !seen.insert(w).second) continue;
                    int d = dist_to_other[static_cast<size_t>(w)];
                    cands.push_back({side, w, d < 0 ? 1 << 20 : d});
                }
        };
        collect(p, dist_from_q);
        collect(q, dist_from_p);
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.key != b.key) return a.key < b.key;
            if (a.hv != b.hv) return a.hv < b.hv;
            return a.side_pv < b.side_pv;
        });
        for (const auto& cand : cands) {
            add_to_branch(cand.side_pv, cand.hv);
            bool ok = search();
            remove_from_branch(cand.side_pv, cand.hv);
            if (ok) return true;
        }
        return false;
    }

    bool branch_seed(int gpv) {
        int copy = copy_of[static_cast<size_t>(gpv)];
        int cid = comp_id[static_cast<size_t>(gpv)];
        bool first_of_copy = branch_is_first_of_copy(gpv);
        bool component_start = comp_seed_count[static_cast<size_t>(cid)] == 0;

        // free-region feasibility once per component boundary
        if (component_start && region_prune()) return false;

        // vertex-count feasibility
        if (mult == 1) {
            int unseeded = 0;
            for (int g = 0; g < total_pv; ++g)
                if (branch[static_cast<size_t>(g)].empty()) ++unseeded;
            int avail_count = 0;
            for (int v = 0; v < host.vertex_count(); ++v)
                if (owner_count[static_cast<size_t>(v)] == 0) ++avail_count;
            if (avail_count < unseeded) {
                ++stats.capacity_prunes;
                return false;
            }
        }

        // candidate hosts, ordered by proximity to seeded pattern neighbors
        std::vector<std::pair<long, int>> cands;  // (key, host vertex)
        std::vector<std::vector<int>> neighbor_dists;
        for (int w : gadj[static_cast<size_t>(gpv)]) {
            if (branch[static_cast<size_t>(w)].empty()) continue;
            std::vector<int> dist(static_cast<size_t>(host.vertex_count()), -1);
            std::queue<int> bfs;
            for (int v : branch[static_cast<size_t>(w)]) {
                dist[static_cast<size_t>(v)] = 0;
                bfs.push(v);
            }
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int x : host.neighbors(u)) {
                    if (dist[static_cast<size_t>(x)] >= 0) continue;
                    if (!available(x, copy)) continue;
                    dist[static_cast<size_t>(x)] = dist[static_cast<size_t>(u)] + 1;
                    bfs.push(x);
                }
            }
            neighbor_dists.push_back(std::move(dist));
        }
        int lower = -1;
        if (first_of_copy && prev_equal_copy[static_cast<size_t>(copy)] >= 0)
            lower = first_seed[static_cast<size_t>(
                prev_equal_copy[static_cast<size_t>(copy)])];
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (!available(v, copy)) continue;
            if (first_of_copy && v <= lower) continue;
            long key = 0;
            bool dead = false;
            for (const auto& dist : neighbor_dists) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dead = true;
                    break;
                }
                key += dist[static_cast<size_t>(v)];
            }
            if (dead) continue;
            cands.push_back({key * 1000 + v, v});
        }
        std::sort(cands.begin(), cands.end());
        for (auto [key, v] : cands) {
            (void)key;
            add_to_branch(gpv, v);
            comp_seed_count[static_cast<size_t>(cid)] += 1;
            int saved_first = first_seed[static_cast<size_t>(copy)];
            if (first_of_copy) first_seed[static_cast<size_t>(copy)] = v;
            bool ok = search();
            if (first_of_copy) first_seed[static_cast<size_t>(copy)] = saved_first;
            comp_seed_count[static_cast<size_t>(cid)] -= 1;
            remove_from_branch(gpv, v);
            if (ok) return true;
        }
        return false;
    }

    bool branch_is_first_of_copy(int gpv) const {
        for (int g : order) {
            if (copy_of[static_cast<size_t>(g)] != copy_of[static_cast<size_t>(gpv)])
                continue;
            return g == gpv;
        }
        return false;
    }
};

MinorResult run_search(const Graph& host, std::vector<Graph> copies, int mult,
                       uint64_t budget) {
    MinorResult res;
    int total = 0;
    for (const auto& c : copies) total += c.vertex_count();
    if (total == 0) {
        res.verdict = MinorVerdict::Found;
        res.model = MinorModel{};
        return res;
    }
    MinorSearch s(host, std::move(copies), mult, budget);
    try {
        bool ok = s.search();
        res.stats = s.stats;
        if (ok) {
            res.verdict = MinorVerdict::Found;
            res.model = s.found;
        } else {
            res.verdict = MinorVerdict::Absent;
        }
    } catch (const BudgetExceeded&) {
        res.stats = s.stats;
        res.verdict = MinorVerdict::Refused;
    }
    return res;
}

}  // namespace

MinorResult is_minor(const Graph& pattern, const Graph& host, uint64_t budget) {
    MinorResult res = run_search(host, {pattern}, 1, budget);
    if (res.verdict == MinorVerdict::Found &&
        !verify_model(pattern, host, *res.model))
        throw std::logic_error("minor search produced an invalid model");
    return res;
}

MinorResult find_packing(const Graph& pattern_single, int copies, const Graph& host,
                         int multiplicity, uint64_t budget) {
    std::vector<Graph> cps(static_cast<size_t>(copies), pattern_single);
    MinorResult res = run_search(host, cps, multiplicity, budget);
    if (res.verdict == MinorVerdict::Found) {
        // verify each copy's model and the sharing constraint
        std::vector<int> use(static_cast<size_t>(host.vertex_count()), 0);
        int off = 0;
        for (int c = 0; c < copies; ++c) {
            MinorModel part;
            part.branch.assign(res.model->branch.begin() + off,
                               res.model->branch.begin() + off +
                                   pattern_single.vertex_count());
            off += pattern_single.vertex_count();
            if (!verify_model(pattern_single, host, part))
                throw std::logic_error("packing search produced an invalid copy");
            for (const auto& b : part.branch)
                for (int v : b) use[static_cast<size_t>(v)] += 1;
        }
        for (int v = 0; v < host.vertex_count(); ++v)
            if (use[static_cast<size_t>(v)] > multiplicity)
                throw std::logic_error("packing search exceeded the multiplicity");
    }
    return res;
}

MinorResult find_mixed_packing(const std::vector<Graph>& patterns, const Graph& host,
                               int multiplicity, uint64_t budget) {
    return run_search(host, patterns, multiplicity, budget);
}

// ------------------------------------------------------------ minimality ---

namespace {

// Prunes each branch set to a tree spanning its attachment vertices.
MinorModel prune_model(const Graph& pattern, const Graph& host, const MinorModel& m,
                       std::vector<Edge>* chosen_cross) {
    std::vector<int> owner(static_cast<size_t>(host.vertex_count()), -1);
    for (size_t p = 0; p < m.branch.size(); ++p)
        for (int v : m.branch[p]) owner[static_cast<size_t>(v)] = static_cast<int>(p);
    // one host edge per pattern edge: lexicographically least
    std::vector<std::set<int>> attach(m.branch.size());
    std::vector<Edge> cross;
    for (auto [p, q] : pattern.edges()) {
        Edge best{-1, -1};
        for (int v : m.branch[static_cast<size_t>(p)])
            for (int w : host.neighbors(v))
                if (owner[static_cast<size_t>(w)] == q) {
                    Edge e{std::min(v, w), std::max(v, w)};
                    if (best.first < 0 || e < best) best = e;
                }
        cross.push_back(best);
        attach[static_cast<size_t>(p)].insert(
            owner[static_cast<size_t>(best.first)] == p ? best.first : best.second);
        attach[static_cast<size_t>(q)].insert(
            owner[static_cast<size_t>(best.first)] == q ? best.first : best.second);
    }
    if (chosen_cross) *chosen_cross = cross;
    MinorModel out;
    out.branch.resize(m.branch.size());
    for (size_t p = 0; p < m.branch.size(); ++p) {
        if (attach[p].empty()) attach[p].insert(m.branch[p].front());
        // BFS tree of the branch set from one attachment, then drop
        // non-attachment leaves repeatedly
        std::set<int> in(m.branch[p].begin(), m.branch[p].end());
        int root = *attach[p].begin();
        std::map<int, int> par;
        par[root] = -1;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : host.neighbors(u))
                if (in.count(w) && !par.count(w)) {
                    par[w] = u;
                    bfs.push(w);
                }
        }
        // keep only vertices on root->attachment paths
        std::set<int> keep;
        for (int a : attach[p])
            for (int x = a; x != -1; x = par.at(x)) {
                if (keep.count(x)) break;
                keep.insert(x);
            }
        out.branch[p].assign(keep.begin(), keep.end());
    }
    return out;
}

}  // namespace

Expansion minimize_host(const Graph& pattern, const Graph& host, const MinorModel& m) {
    if (!verify_model(pattern, host, m))
        throw std::invalid_argument("minimize_host: invalid model");
    std::vector<Edge> cross;
    MinorModel pruned = prune_model(pattern, host, m, &cross);
    std::vector<int> owner(static_cast<size_t>(host.vertex_count()), -1);
    for (size_t p = 0; p < pruned.branch.size(); ++p)
        for (int v : pruned.branch[p]) owner[static_cast<size_t>(v)] = static_cast<int>(p);

    Expansion exp;
    std::set<int> verts;
    std::set<Edge> edges;
    for (size_t p = 0; p < pruned.branch.size(); ++p) {
        std::set<int> in(pruned.branch[p].begin(), pruned.branch[p].end());
        for (int v : pruned.branch[p]) verts.insert(v);
        // tree edges inside the branch set: recompute the BFS tree on the kept set
        int root = pruned.branch[p].front();
        std::map<int, int> par;
        par[root] = -1;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : host.neighbors(u))
                if (in.count(w) && !par.count(w)) {
                    par[w] = u;
                    bfs.push(w);
                    edges.insert({std::min(u, w), std::max(u, w)});
                }
        }
    }
    for (const auto& e : cross) edges.insert(e);
    exp.vertices.assign(verts.begin(), verts.end());
    exp.edges.assign(edges.begin(), edges.end());
    // branch vertices: everything of degree != 2 in the witness subgraph
    std::map<int, int> deg;
    for (auto [u, v] : exp.edges) {
        deg[u] += 1;
        deg[v] += 1;
    }
    for (int v : exp.vertices)
        if (deg[v] != 2) exp.t.push_back(v);
    int hsq = pattern.vertex_count() * pattern.vertex_count();
    if (static_cast<int>(exp.t.size()) > hsq)
        throw std::logic_error("minimized expansion has too many branch vertices");
    return exp;
}

// --------------------------------------------------------- density shortcut ---

DenseCliqueResult dense_clique_minor(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("dense_clique_minor needs k >= 3");
    DenseCliqueResult res;
    long double threshold =
        (k >= 60 ? std::numeric_limits<long double>::infinity()
                 : static_cast<long double>(1ull << k) * g.vertex_count());
    if (static_cast<long double>(g.edge_count()) <= threshold) {
        res.density_verdict = true;
        return res;
    }
    // greedy supernode contraction, looking for a K_k among supernodes
    std::vector<std::vector<int>> super;  // branch sets
    for (int v = 0; v < g.vertex_count(); ++v) super.push_back({v});
    auto adjacent = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int v : a)
            for (int w : g.neighbors(v))
                if (std::find(b.begin(), b.end(), w) != b.end()) return true;
        return false;
    };
    auto find_clique = [&](int need) -> std::optional<std::vector<int>> {
        int n = static_cast<int>(super.size());
        std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                           std::vector<char>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adjacent(super[static_cast<size_t>(i)], super[static_cast<size_t>(j)]))
                    adj[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
        std::vector<int> cur;
        std::function<bool(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == need) return true;
            for (int v = start; v < n; ++v) {
                bool ok = true;
                for (int u : cur)
                    if (!adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) ok = false;
                if (!ok) continue;
                cur.push_back(v);
                if (rec(v + 1)) return true;
                cur.pop_back();
            }
            return false;
        };
        if (rec(0)) return cur;
        return std::nullopt;
    };
    while (true) {
        if (auto clique = find_clique(k)) {
            MinorModel m;
            for (int s : *clique) m.branch.push_back(super[static_cast<size_t>(s)]);
            for (auto& b : m.branch) std::sort(b.begin(), b.end());
            // prune to a minimal model
            Graph kk(k);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) kk.add_edge(i, j);
            MinorModel pruned = prune_model(kk, g, m, nullptr);
            if (!verify_model(kk, g, pruned))
                throw std::logic_error("dense clique extraction failed verification");
            res.model = pruned;
            return res;
        }
        // contract the adjacent supernode pair with the largest common
        // neighborhood among supernodes
        int n = static_cast<int>(super.size());
        if (n < k) break;
        int bi = -1, bj = -1, best_common = -1;
        std::vector<std::set<int>> nbr(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adjacent(super[static_cast<size_t>(i)], super[static_cast<size_t>(j)])) {
                    nbr[static_cast<size_t>(i)].insert(j);
                    nbr[static_cast<size_t>(j)].insert(i);
                }
        for (int i = 0; i < n; ++i)
            for (int j : nbr[static_cast<size_t>(i)]) {
                if (j <= i) continue;
                int common = 0;
                for (int x : nbr[static_cast<size_t>(i)])
                    if (nbr[static_cast<size_t>(j)].count(x)) ++common;
                if (common > best_common) {
                    best_common = common;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        for (int v : super[static_cast<size_t>(bj)])
            super[static_cast<size_t>(bi)].push_back(v);
        super.erase(super.begin() + bj);
    }
    // greedy failed: fall back to the exact engine
    Graph kk(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) kk.add_edge(i, j);
    MinorResult mr = is_minor(kk, g);
    if (mr.verdict == MinorVerdict::Found) res.model = mr.model;
    return res;
}

}  // namespace minorlab
