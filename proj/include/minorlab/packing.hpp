#ifndef MINORLAB_PACKING_HPP
#define MINORLAB_PACKING_HPP

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/surface.hpp"

namespace minorlab {

enum class PackKind { Single, Mixed };

struct PackingCert {
    std::vector<std::pair<Graph, MinorModel>> hosts;  // pattern + its model
    int multiplicity = 1;  // 1 integral, 2 half-integral
    PackKind kind = PackKind::Single;
};

/// Independent certificate check: each model valid, no host vertex used by
/// more than `multiplicity` models, single-pattern certificates use one
/// pattern graph throughout.
bool verify_packing(const Graph& host, const PackingCert& cert);

struct PackResult {
    MinorVerdict verdict = MinorVerdict::Refused;  // Found / Absent / Refused
    std::optional<PackingCert> cert;
    SearchStats stats;
};

/// Searches for k pairwise-compatible pattern models. Single kind tries each
/// member of z as the repeated pattern; mixed tries multisets from z.
PackResult pack(const std::vector<Graph>& z, const Graph& g, int k_target,
                int multiplicity, PackKind kind,
                uint64_t budget = kDefaultMinorBudget);

struct CoverCert {
    std::vector<int> vertices;  // sorted
    // attestation: per-member exhaustive absence re-check
    bool verified = false;
};

/// Independent cover check: no member of z has a model in g minus the cover.
bool verify_cover(const std::vector<Graph>& z, const Graph& g, CoverCert& cert,
                  uint64_t budget = kDefaultMinorBudget);

struct CoverResult {
    MinorVerdict verdict = MinorVerdict::Refused;  // Found = cover returned
    std::optional<CoverCert> cert;
    SearchStats stats;
};

/// Smallest cover up to size_cap, by iterative deepening on the cover size
/// with model-hitting branching.
CoverResult cover(const std::vector<Graph>& z, const Graph& g, int size_cap,
                  uint64_t budget = kDefaultMinorBudget);

struct EpResult {
    MinorVerdict verdict = MinorVerdict::Refused;
    int value = 0;  // largest k <= k_max with some Dyck obstruction grid a minor
    std::vector<std::pair<Surface, int>> per_surface;  // best k per obstruction
    bool degenerate_indices = false;  // value came from k < 3 grids
};

/// EP parameter of the antichain z: the largest k <= k_max such that the
/// order-k Dyck grid of some obstruction surface of z is a minor of g.
EpResult ep_parameter(const std::vector<Graph>& z, const Graph& g, int k_max,
                      uint64_t budget = kDefaultMinorBudget);

}  // namespace minorlab

#endif
