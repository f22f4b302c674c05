#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "thetakit/graph.hpp"

namespace thetakit {

// Standard graph6 layout. A leading ">>graph6<<" header and trailing line breaks are accepted
// on decode. Throws ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// One "u v" pair per line, 0-indexed; '#' starts a comment. The vertex count is
// 1 + the largest endpoint unless a "# n = <count>" comment line says otherwise.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace thetakit
