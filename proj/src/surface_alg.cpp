#include "minorlab/surface_alg.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlab {

ClosedSurfaceSet surfaces_excluding(const std::vector<Graph>& z, int eg_max,
                                    int max_block_edges) {
    // S_Z is downward-closed: if some member embeds in Sigma, it embeds in
    // everything above Sigma. Its obstruction antichain is therefore the
    // <=-minimal element set of the union of the members' minimal surfaces.
    std::vector<Surface> minima;
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i].vertex_count() == 0) {
            minima.push_back(Surface::make_empty());
            continue;
        }
        MinimalSurfaces ms = minimal_surfaces(z[i], max_block_edges);
        if (ms.verdict == Verdict::Refused)
            throw std::runtime_error(
                "surfaces_excluding: embedder refused member " + std::to_string(i) +
                " (block with " + std::to_string(ms.refused_block_edges) + " edges)");
        for (const auto& s : ms.antichain) {
            if (s.euler_genus() > eg_max)
                throw std::invalid_argument(
                    "surfaces_excluding: eg_max too small for member " +
                    std::to_string(i));
            minima.push_back(s);
        }
    }
    if (minima.empty())
        throw std::invalid_argument("surfaces_excluding: empty antichain");
    return ClosedSurfaceSet::from_obstructions(std::move(minima));
}

std::vector<std::pair<Surface, FamilySpec>> dyck_family_for(
    const std::vector<Graph>& z, int eg_max, int max_block_edges) {
    for (size_t i = 0; i < z.size(); ++i)
        if (z[i].vertex_count() == 0 || is_planar_quick(z[i]))
            throw std::invalid_argument(
                "antichain not in H-: member " + std::to_string(i) +
                " embeds in the sphere, so the surface set has no Dyck obstructions");
    ClosedSurfaceSet s = surfaces_excluding(z, eg_max, max_block_edges);
    std::vector<std::pair<Surface, FamilySpec>> out;
    for (const auto& sigma : s.sobs()) {
        if (sigma.empty || (sigma.h == 0 && sigma.c == 0))
            throw std::invalid_argument("antichain not in H-: obstruction below the sphere");
        out.push_back({sigma, FamilySpec::dyck_grid(1, sigma.h, sigma.c)});
    }
    return out;
}

}  // namespace minorlab
