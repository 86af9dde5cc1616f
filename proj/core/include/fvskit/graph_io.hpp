#pragma once

// Edge-list text format:
//
//   c optional comment lines, anywhere
//   p dg <n> <m>
//   <u> <v>          (m lines, 1-based ids)
//
// Writers emit arcs in lexicographic order so output is byte-stable.

#include <iosfwd>
#include <string>
#include <string_view>

#include "fvskit/digraph.hpp"

namespace fvskit {

// Throws FormatError on malformed text and InvalidGraphError on loops or
// duplicate arcs.
Digraph ReadEdgeList(std::istream& in);
Digraph ParseEdgeList(std::string_view text);

void WriteEdgeList(std::ostream& out, const Digraph& g);
std::string FormatEdgeList(const Digraph& g);

// Graphviz output. When `tree` is given, arcs are colored by class:
// tree black, forward blue, cycle red (dashed), cross gray (dotted).
void WriteDot(std::ostream& out, const Digraph& g, const DfsTree* tree = nullptr,
              std::string_view name = "G");

}  // namespace fvskit
