#ifndef MINORLAB_KURATOWSKI_HPP
#define MINORLAB_KURATOWSKI_HPP

#include <optional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

enum class DiskSide { None, A, B, Both };

struct MinimalSeparationReport {
    Separation separation;
    std::vector<int> witness_c;  // component in A\B seeing all of A n B
    std::vector<int> witness_d;  // component in B\A seeing all of A n B
    DiskSide disk_side = DiskSide::None;
};

/// Every minimal separation of order <= max_order (canonical side order:
/// lexicographically least side first). With restrict_separator_within set,
/// only separations whose separator lies inside that set are produced.
std::vector<MinimalSeparationReport> minimal_separations(
    const Graph& g, int max_order,
    const std::optional<std::vector<int>>& restrict_separator_within = std::nullopt);

struct KuratowskiConnectivityResult {
    bool connected;  // Kuratowski-connected
    std::optional<MinimalSeparationReport> violation;
};

/// True iff every minimal separation of order <= 3 has a disk-embeddable side.
KuratowskiConnectivityResult is_kuratowski_connected(const Graph& g);

struct SigmaEntry {
    MinimalSeparationReport separation;
    std::vector<int> non_disk_side;  // the side that is not separator-disk-embeddable
};

struct CoreResult {
    enum class Status { Found, NoneFound };
    Status status = Status::NoneFound;
    std::vector<int> core;            // component vertex set, when Found
    std::vector<int> intersection;    // the raw intersection of sides minus separator
    std::vector<SigmaEntry> sigma_trace;
    std::string diagnostic;
};

/// Constructive core-component computation: enumerates the minimal
/// separations whose separator lies inside sep's separator, maps each to its
/// unique non-disk-embeddable side, intersects, and reports the outcome as
/// evidence rather than asserting it.
CoreResult core_component(const Graph& h, const Separation& sep);

/// Induced subgraph on the union of non-planar components; orig_vertices
/// receives the original indices.
Graph npl(const Graph& h, std::vector<int>* orig_vertices = nullptr);

}  // namespace minorlab

#endif
