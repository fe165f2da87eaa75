#ifndef MINORLAB_MINOR_HPP
#define MINORLAB_MINOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

/// Witness for pattern <= host: disjoint connected branch sets, one per
/// pattern vertex, with a host edge behind every pattern edge.
struct MinorModel {
    std::vector<std::vector<int>> branch;  // sorted host-vertex sets
};

/// Validity check, independent of the search code.
bool verify_model(const Graph& pattern, const Graph& host, const MinorModel& m);

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t budget = 0;
    uint64_t planarity_prunes = 0;
    uint64_t capacity_prunes = 0;
    uint64_t connect_prunes = 0;
};

enum class MinorVerdict { Found, Absent, Refused };

struct MinorResult {
    MinorVerdict verdict = MinorVerdict::Refused;
    std::optional<MinorModel> model;
    SearchStats stats;
};

constexpr uint64_t kDefaultMinorBudget = 10ull * 1000 * 1000;

/// Exact minor containment by branch-and-bound over growing branch sets.
/// Found results carry a verified model; Absent only after exhausting the
/// space; Refused when the node budget runs out.
MinorResult is_minor(const Graph& pattern, const Graph& host,
                     uint64_t budget = kDefaultMinorBudget);

/// Like is_minor for the pattern t*H, with host vertices shared by at most
/// `multiplicity` of the t copies (1 = vertex-disjoint packing search).
MinorResult find_packing(const Graph& pattern_single, int copies, const Graph& host,
                         int multiplicity, uint64_t budget = kDefaultMinorBudget);

/// Mixed packing: one copy of each listed pattern, pairwise disjoint
/// (or vertex-shared up to `multiplicity`).
MinorResult find_mixed_packing(const std::vector<Graph>& patterns, const Graph& host,
                               int multiplicity, uint64_t budget = kDefaultMinorBudget);

/// Density shortcut: either reports |E| <= 2^k |V| (no model attempted) or
/// extracts a K_k-minor model from the dense graph greedily.
struct DenseCliqueResult {
    bool density_verdict = false;  // true: |E| <= 2^k |V|, nothing extracted
    std::optional<MinorModel> model;
};
DenseCliqueResult dense_clique_minor(const Graph& g, int k);

/// Edge-minimal witness subgraph: branch sets pruned to trees, one host edge
/// per pattern edge; every vertex outside t has degree exactly two.
struct Expansion {
    std::vector<int> vertices;  // host indices, sorted
    std::vector<Edge> edges;    // host edges of the witness subgraph
    std::vector<int> t;         // branch vertices, sorted
};
Expansion minimize_host(const Graph& pattern, const Graph& host, const MinorModel& m);

}  // namespace minorlab

#endif
