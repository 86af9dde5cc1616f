#include "fvskit/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace fvskit {

namespace {

bool IsBlankOrComment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == 'c';
}

}  // namespace

Digraph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string p, kind;
      if (!(fields >> p >> kind >> n >> m) || p != "p" || kind != "dg" || n < 0 || m < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'p dg <n> <m>'");
      }
    } else {
      long long u, v;
      if (!(fields >> u >> v)) {
        throw FormatError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
      }
      std::string extra;
      if (fields >> extra) {
        throw FormatError("line " + std::to_string(line_no) + ": trailing text");
      }
      if (u < 1 || v < 1 || u > n || v > n) {
        throw FormatError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  if (n < 0) throw FormatError("missing 'p dg' header");
  if (static_cast<long long>(arcs.size()) != m) {
    throw FormatError("header announces " + std::to_string(m) + " arcs, found " +
                      std::to_string(arcs.size()));
  }
  return Digraph(static_cast<int>(n), arcs);
}

Digraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ReadEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Digraph& g) {
  out << "p dg " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

std::string FormatEdgeList(const Digraph& g) {
  std::ostringstream out;
  WriteEdgeList(out, g);
  return out.str();
}

void WriteDot(std::ostream& out, const Digraph& g, const DfsTree* tree,
              std::string_view name) {
  out << "digraph " << name << " {\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    out << "  " << v;
    if (tree != nullptr) out << " [label=\"" << v << " (po " << tree->po[v] << ")\"]";
    out << ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << a.from << " -> " << a.to;
    if (tree != nullptr) {
      switch (tree->ClassOf(a)) {
        case ArcClass::kTree: out << " [color=black]"; break;
        case ArcClass::kForward: out << " [color=blue]"; break;
        case ArcClass::kCycle: out << " [color=red, style=dashed]"; break;
        case ArcClass::kCross: out << " [color=gray, style=dotted]"; break;
      }
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace fvskit
