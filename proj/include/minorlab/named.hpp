#ifndef MINORLAB_NAMED_HPP
#define MINORLAB_NAMED_HPP

#include <optional>
#include <string>

#include "minorlab/graph.hpp"

namespace minorlab {

Graph complete(int n);
Graph complete_bipartite(int m, int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

/// Cycle on 2n vertices plus the n anti-diametrical chords (requires n >= 3).
Graph mobius_ladder(int two_n);

/// K5 and K_{3,3} glued on a pair of identified vertices that are adjacent on
/// both sides.
Graph graph_j();

/// The seven-member obstruction family for linkless embeddability, shipped as
/// fixed graph6 data (index 0..6, ordered by vertex count then code).
Graph petersen_family(int index);

/// Parses tokens like "k5", "k33", "petersen", "j", "m8", "c6" or a graph6
/// code; returns nullopt for unknown tokens that are not valid graph6.
std::optional<Graph> parse_graph_token(const std::string& token);

}  // namespace minorlab

#endif
