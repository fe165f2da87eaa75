#ifndef MINORLAB_FAMILIES_HPP
#define MINORLAB_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorlab/embed.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

enum class Family {
    AnnulusGrid,        // (4k x k) cylinder
    CylGrid,            // cycle on n, path on m
    Grid,               // n x m
    HandleGrid,         // annulus of circumference 4k + one handle band
    CrosscapGrid,       // annulus of circumference 4k + one crosscap band
    DyckGrid,           // k cycles of length 4k(1+h+c), handle/crosscap bands
    Wall,               // elementary k-wall
    DyckWall,           // elementary (h,c;t)-Dyck wall
    ShallowVortexGrid,  // (4k x k) cylinder + k crossing pairs on the inner cycle
    RingBlowup,
    MobiusLadder,
    Complete,
    CompleteBipartite,
    PetersenFamily,
    GraphJ,
};

struct FamilySpec {
    Family family;
    int k = 0;
    int h = 0;
    int c = 0;
    int rows = 0;
    int cols = 0;
    int index = 0;
    std::optional<Graph> base;                // RingBlowup
    std::vector<int> base_cycle;              // RingBlowup facial cycle

    static FamilySpec annulus(int k);
    static FamilySpec cyl_grid(int n_cycle, int m_path);
    static FamilySpec grid(int rows, int cols);
    static FamilySpec handle_grid(int k);
    static FamilySpec crosscap_grid(int k);
    static FamilySpec dyck_grid(int k, int h, int c);
    static FamilySpec wall(int k);
    static FamilySpec dyck_wall(int t, int h, int c);
    static FamilySpec shallow_vortex_grid(int k);
    static FamilySpec ring_blowup(Graph base, std::vector<int> cycle);
    static FamilySpec mobius_ladder(int two_n);
    static FamilySpec complete(int n);
    static FamilySpec complete_bipartite(int m, int n);
    static FamilySpec petersen_family(int index);
    static FamilySpec graph_j();

    std::string name() const;
};

struct GeneratedGraph {
    Graph graph;
    FamilySpec spec;
    std::map<std::string, std::vector<int>> vertex_tags;  // cycles, tracks, perimeter
    std::map<std::string, std::vector<Edge>> edge_tags;   // transactions, crossings
    bool degenerate = false;  // parametric index below the usual range
};

/// Builds the family member from its edge formulas. Substructure tags record
/// the cycles C_i, tracks P_j, perimeter, and transaction/crossing edges.
GeneratedGraph generate(const FamilySpec& spec);

/// Apex test: C is facial in g iff g plus a new vertex joined to all of C is
/// planar. Throws if cyc is not a cycle of g.
bool is_facial(const Graph& g, const std::vector<int>& cyc);

struct FaceReport {
    int simple_expected = -1;
    int simple_traced = -1;
    int exceptional_expected = -1;
    int exceptional_traced = -1;
    bool simple_matches() const { return simple_expected == simple_traced; }
    bool exceptional_matches() const { return exceptional_expected == exceptional_traced; }
};

struct CanonicalEmbedding {
    Embedding embedding;
    Surface surface;                     // traced by verify_embedding
    FaceReport faces;                    // populated for Dyck grids and walls
    std::vector<int> exceptional_cycle;  // vertex walk, when identified
};

/// The layout-derived witness embedding for grid/wall families. Signs are -1
/// exactly on crosscap transaction edges. Throws for unsupported families.
CanonicalEmbedding canonical_embedding(const GeneratedGraph& gen);
CanonicalEmbedding canonical_embedding(const FamilySpec& spec);

}  // namespace minorlab

#endif
