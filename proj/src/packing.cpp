#include "minorlab/packing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "minorlab/families.hpp"
#include "minorlab/surface_alg.hpp"

namespace minorlab {

bool verify_packing(const Graph& host, const PackingCert& cert) {
    if (cert.multiplicity < 1 || cert.multiplicity > 2) return false;
    std::vector<int> use(static_cast<size_t>(host.vertex_count()), 0);
    for (const auto& [pattern, model] : cert.hosts) {
        if (!verify_model(pattern, host, model)) return false;
        for (const auto& b : model.branch)
            for (int v : b) use[static_cast<size_t>(v)] += 1;
    }
    for (int v = 0; v < host.vertex_count(); ++v)
        if (use[static_cast<size_t>(v)] > cert.multiplicity) return false;
    if (cert.kind == PackKind::Single) {
        for (const auto& [pattern, model] : cert.hosts)
            if (!(pattern == cert.hosts.front().first)) return false;
    }
    if (cert.kind == PackKind::Mixed && cert.multiplicity == 1) {
        // mixed packings are pairwise vertex-disjoint; covered by use[] <= 1
    }
    return true;
}

namespace {

PackingCert cert_from_model(const std::vector<Graph>& patterns, const MinorModel& m,
                            int multiplicity, PackKind kind) {
    PackingCert cert;
    cert.multiplicity = multiplicity;
    cert.kind = kind;
    int off = 0;
    for (const auto& p : patterns) {
        MinorModel part;
        part.branch.assign(m.branch.begin() + off,
                           m.branch.begin() + off + p.vertex_count());
        off += p.vertex_count();
        cert.hosts.push_back({p, part});
    }
    return cert;
}

// multisets of indices 0..n-1 of size k, lexicographically
void multisets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

PackResult pack(const std::vector<Graph>& z, const Graph& g, int k_target,
                int multiplicity, PackKind kind, uint64_t budget) {
    PackResult res;
    bool any_refused = false;
    if (kind == PackKind::Single) {
        for (const auto& h : z) {
            MinorResult mr = find_packing(h, k_target, g, multiplicity, budget);
            res.stats.nodes += mr.stats.nodes;
            if (mr.verdict == MinorVerdict::Found) {
                std::vector<Graph> patterns(static_cast<size_t>(k_target), h);
                res.cert = cert_from_model(patterns, *mr.model, multiplicity, kind);
                res.verdict = MinorVerdict::Found;
                if (!verify_packing(g, *res.cert))
                    throw std::logic_error("pack produced an invalid certificate");
                return res;
            }
            if (mr.verdict == MinorVerdict::Refused) any_refused = true;
        }
    } else {
        std::vector<std::vector<int>> choices;
        multisets(static_cast<int>(z.size()), k_target, choices);
        for (const auto& choice : choices) {
            std::vector<Graph> patterns;
            for (int i : choice) patterns.push_back(z[static_cast<size_t>(i)]);
            MinorResult mr = find_mixed_packing(patterns, g, multiplicity, budget);
            res.stats.nodes += mr.stats.nodes;
            if (mr.verdict == MinorVerdict::Found) {
                res.cert = cert_from_model(patterns, *mr.model, multiplicity, kind);
                res.verdict = MinorVerdict::Found;
                if (!verify_packing(g, *res.cert))
                    throw std::logic_error("pack produced an invalid certificate");
                return res;
            }
            if (mr.verdict == MinorVerdict::Refused) any_refused = true;
        }
    }
    res.verdict = any_refused ? MinorVerdict::Refused : MinorVerdict::Absent;
    return res;
}

bool verify_cover(const std::vector<Graph>& z, const Graph& g, CoverCert& cert,
                  uint64_t budget) {
    Graph rest = delete_vertices(g, cert.vertices);
    for (const auto& h : z) {
        MinorResult mr = is_minor(h, rest, budget);
        if (mr.verdict != MinorVerdict::Absent) return false;
    }
    cert.verified = true;
    return true;
}

namespace {

// depth-bounded hitting-set branching: find a model, branch over deleting a
// vertex of its minimized witness subgraph
bool cover_rec(const std::vector<Graph>& z, const Graph& g, std::vector<int>& chosen,
               int depth_left, uint64_t budget, SearchStats& stats, bool& refused) {
    Graph rest = delete_vertices(g, chosen);
    // map rest indices back to g
    std::vector<int> back;
    {
        std::set<int> s(chosen.begin(), chosen.end());
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!s.count(v)) back.push_back(v);
    }
    std::optional<Expansion> witness;
    for (const auto& h : z) {
        MinorResult mr = is_minor(h, rest, budget);
        stats.nodes += mr.stats.nodes;
        if (mr.verdict == MinorVerdict::Refused) {
            refused = true;
            return false;
        }
        if (mr.verdict == MinorVerdict::Found) {
            witness = minimize_host(h, rest, *mr.model);
            break;
        }
    }
    if (!witness) return true;  // already a cover
    if (depth_left == 0) return false;
    for (int v_local : witness->vertices) {
        int v = back[static_cast<size_t>(v_local)];
        chosen.push_back(v);
        std::sort(chosen.begin(), chosen.end());
        if (cover_rec(z, g, chosen, depth_left - 1, budget, stats, refused))
            return true;  // chosen now holds the cover
        chosen.erase(std::find(chosen.begin(), chosen.end(), v));
        if (refused) return false;
    }
    return false;
}

}  // namespace

CoverResult cover(const std::vector<Graph>& z, const Graph& g, int size_cap,
                  uint64_t budget) {
    CoverResult res;
    for (int size = 0; size <= size_cap; ++size) {
        std::vector<int> chosen;
        bool refused = false;
        if (cover_rec(z, g, chosen, size, budget, res.stats, refused)) {
            CoverCert cert;
            cert.vertices = chosen;
            if (!verify_cover(z, g, cert, budget))
                throw std::logic_error("cover produced an invalid certificate");
            res.cert = cert;
            res.verdict = MinorVerdict::Found;
            return res;
        }
        if (refused) {
            res.verdict = MinorVerdict::Refused;
            return res;
        }
    }
    res.verdict = MinorVerdict::Absent;  // no cover within the cap
    return res;
}

EpResult ep_parameter(const std::vector<Graph>& z, const Graph& g, int k_max,
                      uint64_t budget) {
    EpResult res;
    auto family = dyck_family_for(z);
    res.verdict = MinorVerdict::Found;
    for (const auto& [sigma, tmpl] : family) {
        int best = 0;
        for (int k = 1; k <= k_max; ++k) {
            GeneratedGraph d = generate(FamilySpec::dyck_grid(k, tmpl.h, tmpl.c));
            MinorResult mr = is_minor(d.graph, g, budget);
            if (mr.verdict == MinorVerdict::Refused) {
                res.verdict = MinorVerdict::Refused;
                return res;
            }
            if (mr.verdict == MinorVerdict::Absent) break;
            best = k;
            if (d.degenerate) res.degenerate_indices = true;
        }
        res.per_surface.push_back({sigma, best});
        res.value = std::max(res.value, best);
    }
    return res;
}

}  // namespace minorlab
