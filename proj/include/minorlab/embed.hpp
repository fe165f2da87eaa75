#ifndef MINORLAB_EMBED_HPP
#define MINORLAB_EMBED_HPP

#include <map>
#include <optional>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/surface.hpp"

namespace minorlab {

/// Combinatorial embedding: a rotation system plus edge signs. Witness for
/// membership of a graph in the surface traced by verify_embedding.
struct Embedding {
    std::vector<std::vector<int>> rotation;  // rotation[v]: incident neighbors, cyclic
    std::map<Edge, int> signs;               // {u<v} -> +1/-1; absent means +1

    int sign(int u, int v) const {
        auto it = signs.find({std::min(u, v), std::max(u, v)});
        return it == signs.end() ? 1 : it->second;
    }
};

/// Face-traces the signed rotation system and returns the traced surface:
/// eg = sum over components of (2 - V + E - F), orientable iff the signs are
/// reducible to all-positive by vertex reflections.
/// Throws std::invalid_argument naming the vertex on a malformed rotation.
Surface verify_embedding(const Graph& g, const Embedding& emb);

/// Face count of the traced embedding (for reporting face structures).
int face_count(const Graph& g, const Embedding& emb);

/// All traced faces, each as a closed dart walk (u0,u1),(u1,u2),...
std::vector<std::vector<Edge>> trace_faces(const Graph& g, const Embedding& emb);

struct PlanarityResult {
    bool planar = false;
    Embedding embedding;  // meaningful iff planar
};

/// Deterministic planarity test (fragment insertion per biconnected block);
/// returns a planar rotation witness on success. No size limits.
PlanarityResult is_planar(const Graph& g);
bool is_planar_quick(const Graph& g);

/// For a non-planar g: an edge-minimal non-planar subgraph, i.e. a K5- or
/// K_{3,3}-subdivision. Vertices are re-indexed; orig_vertices (if non-null)
/// receives the original indices.
Graph kuratowski_subgraph(const Graph& g, std::vector<int>* orig_vertices = nullptr);

/// Disk embeddability with x on the boundary, decided by the apex test:
/// add a fresh vertex adjacent to all of x and test planarity.
bool disk_embeddable(const Graph& g, const std::vector<int>& x);

enum class Verdict { Yes, No, Refused };

struct EmbedResult {
    Verdict verdict = Verdict::Refused;
    std::optional<Embedding> witness;  // present iff verdict == Yes
    int refused_block_edges = 0;       // meaningful iff verdict == Refused
};

struct GenusResult {
    Verdict verdict = Verdict::Refused;
    int eg = -1;
    std::optional<int> orientable_genus;     // handles, not Euler genus
    std::optional<int> nonorientable_genus;  // Euler genus of best non-orientable
    std::optional<Embedding> witness;
    int refused_block_edges = 0;
};

/// Exact decision by branch-and-bound over signed rotation systems per
/// 2-connected block; per-component and per-block results combine additively.
/// Blocks larger than max_block_edges refuse rather than guess (planar blocks
/// are decided at any size).
EmbedResult embeds(const Graph& g, const Surface& s, int max_block_edges = 24);

GenusResult euler_genus(const Graph& g, int max_block_edges = 24);

/// The <=-minimal surfaces hosting g: the orientable minimum and, when not
/// dominated by it, the non-orientable minimum. 1 or 2 surfaces.
struct MinimalSurfaces {
    Verdict verdict = Verdict::Refused;
    std::vector<Surface> antichain;
    int refused_block_edges = 0;
};
MinimalSurfaces minimal_surfaces(const Graph& g, int max_block_edges = 24);

}  // namespace minorlab

#endif
