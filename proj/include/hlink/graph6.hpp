#pragma once

#include <string>
#include <string_view>

#include "hlink/graph.hpp"

namespace hlink {

/// Largest vertex count graph6 can encode (36-bit size field).
inline constexpr long long kGraph6MaxVertices = 68719476735LL;

/// Encodes g in graph6: size prefix, then the upper triangle of the adjacency
/// matrix in column order packed six bits per byte (big-endian, offset 63).
/// No ">>graph6<<" header and no trailing newline.
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 record. Accepts an optional ">>graph6<<" header and a
/// trailing newline. Throws ParseError with the offending byte offset.
Graph decode_graph6(std::string_view text);

}  // namespace hlink
