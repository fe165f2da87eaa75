#ifndef MINORLAB_ISO_HPP
#define MINORLAB_ISO_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

struct IsoLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Backtracking isomorphism check with degree/neighborhood-color pruning.
/// Intended for small claim checks; refuses (throws IsoLimitError) beyond
/// `max_vertices` rather than attempting an answer it cannot guarantee fast.
bool isomorphic(const Graph& a, const Graph& b, int max_vertices = 16);

/// The witness bijection a->b, if one exists.
std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b,
                                            int max_vertices = 16);

}  // namespace minorlab

#endif
