#ifndef MINORLAB_GRAPH_HPP
#define MINORLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex indices 0..n-1.
/// Values are immutable by convention: every operation returns a new graph.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    /// Validating constructor. Duplicate pairs collapse to one edge.
    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    static Graph build(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);
    const std::string& label(int v) const;

    /// Adds one edge in place; used by builders before the value is shared.
    void add_edge(int u, int v);

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // empty or size n_
};

/// Graph with an ordered boundary sequence of distinct vertices.
struct BoundariedGraph {
    Graph graph;
    std::vector<int> boundary;

    BoundariedGraph(Graph g, std::vector<int> b);
};

/// Ordered separation (A, B): A u B = V, no edge between A\B and B\A.
struct Separation {
    std::vector<int> a;  // sorted
    std::vector<int> b;  // sorted

    std::vector<int> separator() const;  // A n B, sorted
    int order() const { return static_cast<int>(separator().size()); }

    /// Checks the covering and no-cross-edge conditions against g.
    bool valid_for(const Graph& g) const;
};

/// Contraction of edge {u,v}: the merged vertex takes min(u,v); indices above
/// max(u,v) shift down by one. The merged vertex loses its label.
Graph contract(const Graph& g, int u, int v);

/// Vertex deletion; labels of surviving vertices are kept.
Graph delete_vertex(const Graph& g, int v);
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);

/// Induced subgraph on `vs` (sorted ascending internally); vertex i of the
/// result corresponds to the i-th smallest member of vs.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

/// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Boundaried gluing: disjoint union with the i-th boundary vertices
/// identified. The identified vertex keeps g1's index and inherits the union
/// of neighborhoods. Throws on incompatible boundary lengths.
Graph glue(const BoundariedGraph& g1, const BoundariedGraph& g2);

/// Text formats.
std::string to_edge_list(const Graph& g);           // "n\nu v\n..."
Graph from_edge_list(const std::string& text);
std::string to_dot(const Graph& g);                 // labels as node attrs

}  // namespace minorlab

#endif
