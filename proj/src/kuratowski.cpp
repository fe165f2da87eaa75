#include "minorlab/kuratowski.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "minorlab/embed.hpp"

namespace minorlab {

namespace {

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(size));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            std::vector<int> c;
            for (int i : idx) c.push_back(pool[static_cast<size_t>(i)]);
            out.push_back(std::move(c));
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

bool dominates(const Graph& g, const std::vector<int>& comp,
               const std::vector<int>& separator) {
    std::set<int> in(comp.begin(), comp.end());
    for (int s : separator) {
        bool seen = false;
        for (int w : g.neighbors(s))
            if (in.count(w)) {
                seen = true;
                break;
            }
        if (!seen) return false;
    }
    return true;
}

}  // namespace

std::vector<MinimalSeparationReport> minimal_separations(
    const Graph& g, int max_order,
    const std::optional<std::vector<int>>& restrict_separator_within) {
    if (max_order > 3)
        throw std::invalid_argument("minimal separations supported up to order 3");
    std::vector<int> pool;
    if (restrict_separator_within) {
        pool = *restrict_separator_within;
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) pool.push_back(v);
    }

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<MinimalSeparationReport> out;
    for (int ord = 0; ord <= max_order; ++ord) {
        for (const auto& sep : combinations(pool, ord)) {
            Graph rest = delete_vertices(g, sep);
            // map back: vertices of rest are g's vertices minus sep, ascending
            std::vector<int> back;
            {
                std::set<int> s(sep.begin(), sep.end());
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!s.count(v)) back.push_back(v);
            }
            auto comps_local = components(rest);
            if (comps_local.size() < 2) continue;
            std::vector<std::vector<int>> comps;
            for (const auto& cl : comps_local) {
                std::vector<int> c;
                for (int v : cl) c.push_back(back[static_cast<size_t>(v)]);
                comps.push_back(std::move(c));
            }
            std::vector<char> dom(comps.size(), 0);
            int dom_count = 0;
            for (size_t i = 0; i < comps.size(); ++i) {
                dom[i] = dominates(g, comps[i], sep);
                dom_count += dom[i];
            }
            if (dom_count < 2) continue;
            if (comps.size() > 22)
                throw std::runtime_error("minimal separation enumeration too large");
            // every 2-coloring of components with a dominating component on
            // each side is a minimal separation with this separator
            uint32_t masks = 1u << (comps.size() - 1);  // fix the last component to side B
            for (uint32_t mask = 0; mask < masks; ++mask) {
                std::vector<int> a_side = sep, b_side = sep;
                int dom_a = 0, dom_b = 0;
                for (size_t i = 0; i < comps.size(); ++i) {
                    bool to_a = i + 1 < comps.size() && (mask >> i & 1);
                    auto& side = to_a ? a_side : b_side;
                    for (int v : comps[i]) side.push_back(v);
                    if (dom[i]) (to_a ? dom_a : dom_b) += 1;
                }
                if (dom_a == 0 || dom_b == 0) continue;
                std::sort(a_side.begin(), a_side.end());
                std::sort(b_side.begin(), b_side.end());
                if (b_side < a_side) std::swap(a_side, b_side);
                if (!seen.insert({a_side, b_side}).second) continue;
                MinimalSeparationReport rep;
                rep.separation = Separation{a_side, b_side};
                std::set<int> a_set(a_side.begin(), a_side.end());
                for (size_t i = 0; i < comps.size(); ++i) {
                    if (!dom[i]) continue;
                    bool in_a = a_set.count(comps[i].front()) > 0;
                    if (in_a && rep.witness_c.empty()) rep.witness_c = comps[i];
                    if (!in_a && rep.witness_d.empty()) rep.witness_d = comps[i];
                }
                bool disk_a = disk_embeddable(induced_subgraph(g, a_side), [&] {
                    std::vector<int> x;
                    for (size_t i = 0; i < a_side.size(); ++i)
                        if (std::binary_search(b_side.begin(), b_side.end(), a_side[i]))
                            x.push_back(static_cast<int>(i));
                    return x;
                }());
                bool disk_b = disk_embeddable(induced_subgraph(g, b_side), [&] {
                    std::vector<int> x;
                    for (size_t i = 0; i < b_side.size(); ++i)
                        if (std::binary_search(a_side.begin(), a_side.end(), b_side[i]))
                            x.push_back(static_cast<int>(i));
                    return x;
                }());
                rep.disk_side = disk_a ? (disk_b ? DiskSide::Both : DiskSide::A)
                                       : (disk_b ? DiskSide::B : DiskSide::None);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

KuratowskiConnectivityResult is_kuratowski_connected(const Graph& g) {
    for (auto& rep : minimal_separations(g, 3)) {
        if (rep.disk_side == DiskSide::None)
            return {false, std::move(rep)};
    }
    return {true, std::nullopt};
}

CoreResult core_component(const Graph& h, const Separation& sep) {
    if (!sep.valid_for(h))
        throw std::invalid_argument("core_component: not a separation of the graph");
    std::vector<int> separator = sep.separator();
    if (static_cast<int>(separator.size()) > 3)
        throw std::invalid_argument("core_component: separation order exceeds 3");
    std::vector<int> a_only, b_only;
    std::set_difference(sep.a.begin(), sep.a.end(), sep.b.begin(), sep.b.end(),
                        std::back_inserter(a_only));
    std::set_difference(sep.b.begin(), sep.b.end(), sep.a.begin(), sep.a.end(),
                        std::back_inserter(b_only));
    if (a_only.empty() || b_only.empty())
        throw std::invalid_argument("core_component: separation is trivial");
    if (components(h).size() != 1)
        throw std::invalid_argument("core_component: graph is not connected");
    if (is_planar_quick(h))
        throw std::invalid_argument("core_component: graph is planar");
    if (!is_kuratowski_connected(h).connected)
        throw std::invalid_argument("core_component: graph is not Kuratowski-connected");

    CoreResult res;
    auto seps = minimal_separations(h, 3, separator);
    std::vector<int> intersection;
    bool first = true;
    for (auto& rep : seps) {
        const auto& a = rep.separation.a;
        const auto& b = rep.separation.b;
        std::vector<int> side;
        if (rep.disk_side == DiskSide::A)
            side = b;
        else if (rep.disk_side == DiskSide::B)
            side = a;
        else {
            res.status = CoreResult::Status::NoneFound;
            res.diagnostic = rep.disk_side == DiskSide::Both
                                 ? "a minimal separation has two disk-embeddable sides"
                                 : "a minimal separation has no disk-embeddable side";
            res.sigma_trace.push_back({rep, {}});
            return res;
        }
        res.sigma_trace.push_back({rep, side});
        if (first) {
            intersection = side;
            first = false;
        } else {
            std::vector<int> next;
            std::set_intersection(intersection.begin(), intersection.end(), side.begin(),
                                  side.end(), std::back_inserter(next));
            intersection = std::move(next);
        }
    }
    if (first) {
        for (int v = 0; v < h.vertex_count(); ++v) intersection.push_back(v);
    }
    std::vector<int> phi;
    std::set_difference(intersection.begin(), intersection.end(), separator.begin(),
                        separator.end(), std::back_inserter(phi));
    res.intersection = phi;

    // does phi match exactly one component of h - separator?
    Graph rest = delete_vertices(h, separator);
    std::vector<int> back;
    {
        std::set<int> s(separator.begin(), separator.end());
        for (int v = 0; v < h.vertex_count(); ++v)
            if (!s.count(v)) back.push_back(v);
    }
    for (const auto& cl : components(rest)) {
        std::vector<int> comp;
        for (int v : cl) comp.push_back(back[static_cast<size_t>(v)]);
        std::sort(comp.begin(), comp.end());
        if (comp == phi) {
            res.status = CoreResult::Status::Found;
            res.core = phi;
            return res;
        }
    }
    res.status = CoreResult::Status::NoneFound;
    res.diagnostic = phi.empty()
                         ? "the intersection of non-embeddable sides is empty"
                         : "the intersection is not a single component";
    return res;
}

Graph npl(const Graph& h, std::vector<int>* orig_vertices) {
    std::vector<int> keep;
    for (const auto& comp : components(h)) {
        Graph sub = induced_subgraph(h, comp);
        if (!is_planar_quick(sub))
            for (int v : comp) keep.push_back(v);
    }
    std::sort(keep.begin(), keep.end());
    if (orig_vertices) *orig_vertices = keep;
    return induced_subgraph(h, keep);
}

}  // namespace minorlab
