#include "fvskit/fvs.hpp"

#include <algorithm>

namespace fvskit {

const char* ToString(Side side) { return side == Side::kRight ? "R" : "L"; }

VertexSet LROrder::RightSet() const {
  VertexSet out;
  for (std::size_t v = 1; v < side.size(); ++v) {
    if (side[v] == Side::kRight) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool LROrder::IsStandard() const {
  bool seen_left = false;
  for (Vertex v : order) {
    if (side.at(static_cast<std::size_t>(v)) == Side::kLeft) {
      seen_left = true;
    } else if (seen_left) {
      return false;
    }
  }
  return true;
}

namespace {

void CheckProper(const Digraph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
  }
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw PreconditionError("vertex set must be sorted and duplicate-free");
  }
  if (static_cast<int>(s.size()) == g.vertex_count()) {
    throw ProperSubsetError("the vertex set must be a proper subset of V");
  }
}

}  // namespace

bool IsFvs(const Digraph& g, const VertexSet& s) {
  CheckProper(g, s);
  return IsAcyclic(g, Complement(g, s));
}

bool IsAcyclicFvs(const Digraph& g, const VertexSet& s) {
  CheckProper(g, s);
  return IsAcyclic(g, Complement(g, s)) && IsAcyclic(g, s);
}

bool VerifyLrOrder(const Digraph& g, const LROrder& o) {
  const int n = g.vertex_count();
  if (static_cast<int>(o.order.size()) != n || static_cast<int>(o.side.size()) != n + 1) {
    return false;
  }
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < o.order.size(); ++i) {
    const Vertex v = o.order[i];
    if (!g.contains(v) || pos[v] != -1) return false;
    pos[v] = static_cast<int>(i);
  }
  for (Vertex v = 1; v <= n; ++v) {
    const bool right = o.side[v] == Side::kRight;
    for (Vertex w : g.successors(v)) {
      if (right ? pos[w] < pos[v] : pos[w] > pos[v]) return false;
    }
  }
  return true;
}

LROrder LrOrderFromAcyclicFvs(const Digraph& g, const VertexSet& s) {
  if (s.empty()) throw NotAcyclicFvsError("the Right set must be nonempty");
  if (!IsAcyclicFvs(g, s)) throw NotAcyclicFvsError("not an acyclic feedback vertex set");
  const VertexSet rest = Complement(g, s);
  LROrder o;
  o.order = TopologicalOrder(g, s);
  std::vector<Vertex> tail = TopologicalOrder(g, rest);
  o.order.insert(o.order.end(), tail.rbegin(), tail.rend());
  o.side.assign(static_cast<std::size_t>(g.vertex_count()) + 1, Side::kLeft);
  for (Vertex v : s) o.side[v] = Side::kRight;
  return o;
}

Digraph GammaGraph(const Digraph& representative, const Assignment& a) {
  std::vector<Arc> arcs;
  for (const Arc& e : representative.arcs()) {
    arcs.push_back(a[e.from] ? e : Arc{e.to, e.from});
  }
  return Digraph::FromArcsDedup(representative.vertex_count(), arcs);
}

LROrder LrOrderFromNae(const Formula& f, const Assignment& a) {
  const Digraph rep = RepresentativeGraph(f);
  if (!Evaluate(f, a, SatMode::kNae).satisfied) {
    throw PreconditionError("assignment does not NAE-satisfy the formula");
  }
  const Digraph gamma = GammaGraph(rep, a);
  LROrder o;
  try {
    o.order = TopologicalOrder(gamma);
  } catch (const CyclicError&) {
    throw GammaCyclicError("orientation induced by the assignment has a cycle");
  }
  o.side.assign(static_cast<std::size_t>(f.var_count()) + 1, Side::kLeft);
  for (Var v = 1; v <= f.var_count(); ++v) {
    if (a[v]) o.side[v] = Side::kRight;
  }
  return o;
}

}  // namespace fvskit
