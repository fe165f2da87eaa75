#ifndef MINORLAB_GRAPH6_HPP
#define MINORLAB_GRAPH6_HPP

#include <string>

#include "minorlab/graph.hpp"

namespace minorlab {

/// graph6 byte format: header 63+n (short form, n <= 62) or the long form,
/// then the upper triangle in column-major order, 6 bits per byte offset by
/// 63, zero-padded.
std::string graph6_encode(const Graph& g);

/// Throws Graph6Error (with byte offset in the message) on malformed input.
Graph graph6_decode(const std::string& s);

struct Graph6Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace minorlab

#endif
