#include "minorlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minorlab {

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g(n);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        Edge e{std::min(u, v), std::max(u, v)};
        if (seen.insert(e).second) g.add_edge(e.first, e.second);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_label(int v, std::string label) {
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
    static const std::string kEmpty;
    if (labels_.empty()) return kEmpty;
    return labels_[v];
}

BoundariedGraph::BoundariedGraph(Graph g, std::vector<int> b)
    : graph(std::move(g)), boundary(std::move(b)) {
    std::set<int> seen;
    for (int v : boundary) {
        if (v < 0 || v >= graph.vertex_count())
            throw std::invalid_argument("boundary vertex out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("boundary vertices must be distinct");
    }
}

std::vector<int> Separation::separator() const {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

bool Separation::valid_for(const Graph& g) const {
    std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_a[v] && !in_b[v]) return false;
    for (auto [u, v] : g.edges()) {
        bool cross = (in_a[u] && !in_b[u] && in_b[v] && !in_a[v]) ||
                     (in_a[v] && !in_b[v] && in_b[u] && !in_a[u]);
        if (cross) return false;
    }
    return true;
}

Graph contract(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract: not an edge: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    int keep = std::min(u, v), drop = std::max(u, v);
    auto remap = [&](int w) { return w > drop ? w - 1 : w; };
    Graph out(g.vertex_count() - 1);
    for (auto [x, y] : g.edges()) {
        int a = (x == drop) ? keep : x;
        int b = (y == drop) ? keep : y;
        if (a == b) continue;
        if (!out.has_edge(remap(a), remap(b))) out.add_edge(remap(a), remap(b));
    }
    if (!g.labels().empty()) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (w == drop || w == keep) continue;
            out.set_label(remap(w), g.label(w));
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}); }

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("delete: vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> idx(g.vertex_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) idx[sorted[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(sorted.size()));
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && idx[v] >= 0) out.add_edge(idx[u], idx[v]);
    if (!g.labels().empty())
        for (size_t i = 0; i < sorted.size(); ++i)
            out.set_label(static_cast<int>(i), g.label(sorted[i]));
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) out.add_edge(u + off, v + off);
    if (!a.labels().empty() || !b.labels().empty()) {
        for (int v = 0; v < a.vertex_count(); ++v)
            if (!a.label(v).empty()) out.set_label(v, a.label(v));
        for (int v = 0; v < b.vertex_count(); ++v)
            if (!b.label(v).empty()) out.set_label(v + off, b.label(v));
    }
    return out;
}

Graph glue(const BoundariedGraph& g1, const BoundariedGraph& g2) {
    if (g1.boundary.size() != g2.boundary.size())
        throw std::invalid_argument("glue: incompatible boundary lengths (" +
                                    std::to_string(g1.boundary.size()) + " vs " +
                                    std::to_string(g2.boundary.size()) + ")");
    int n1 = g1.graph.vertex_count();
    int n2 = g2.graph.vertex_count();
    // Map g2 vertices: boundary vertex i goes to g1.boundary[i], the rest are
    // appended after g1's vertices in ascending index order.
    std::vector<int> map2(n2, -1);
    for (size_t i = 0; i < g2.boundary.size(); ++i)
        map2[g2.boundary[i]] = g1.boundary[i];
    int next = n1;
    for (int v = 0; v < n2; ++v)
        if (map2[v] < 0) map2[v] = next++;
    Graph out(next);
    for (auto [u, v] : g1.graph.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.graph.edges())
        if (map2[u] != map2[v] && !out.has_edge(map2[u], map2[v]))
            out.add_edge(map2[u], map2[v]);
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n)) throw std::invalid_argument("edge list: missing vertex count");
    std::vector<Edge> edges;
    int u, v;
    while (is >> u >> v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (!g.label(v).empty()) os << " [label=\"" << g.label(v) << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace minorlab
