#ifndef MINORLAB_SURFACE_ALG_HPP
#define MINORLAB_SURFACE_ALG_HPP

#include <vector>

#include "minorlab/embed.hpp"
#include "minorlab/families.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/surface.hpp"

namespace minorlab {

/// The closed, proper set of surfaces where no member of z embeds, returned
/// through its obstruction antichain. eg_max bounds the embedder probing and
/// must be at least the largest Euler genus among the members.
ClosedSurfaceSet surfaces_excluding(const std::vector<Graph>& z, int eg_max = 8,
                                    int max_block_edges = 24);

/// One Dyck-grid template per obstruction surface of surfaces_excluding(z).
/// Throws when some member embeds everywhere probed (e.g. a planar member or
/// the empty graph), naming the offending index.
std::vector<std::pair<Surface, FamilySpec>> dyck_family_for(
    const std::vector<Graph>& z, int eg_max = 8, int max_block_edges = 24);

}  // namespace minorlab

#endif
