#pragma once

// Simple directed graphs on dense 1-based vertex ids, plus the traversal
// primitives (acyclicity, topological order, elementary cycles, depth-first
// spanning trees, pairwise dominance) that the rest of the library builds on.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fvskit/errors.hpp"

namespace fvskit {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple digraph: vertices 1..n, no loops, no parallel arcs. Immutable once
// built; adjacency lists are kept sorted by vertex id.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);

  // Throws InvalidGraphError on loops, duplicate arcs or out-of-range ids.
  Digraph(int vertex_count, std::span<const Arc> arcs);

  // Same as above but silently drops duplicate arcs (loops still rejected).
  static Digraph FromArcsDedup(int vertex_count, std::span<const Arc> arcs);

  int vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return m_; }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  const std::vector<Vertex>& successors(Vertex v) const { return succ_[v]; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return pred_[v]; }
  bool has_arc(Vertex from, Vertex to) const;

  // All arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.succ_ == b.succ_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> succ_{1};
  std::vector<std::vector<Vertex>> pred_{1};
};

// Membership vector indexed by vertex id (slot 0 unused).
std::vector<bool> Membership(int vertex_count, const VertexSet& set);

// The vertices of `g` that are not in `set`.
VertexSet Complement(const Digraph& g, const VertexSet& set);

// G[keep]: same vertex ids, only arcs with both ends in `keep`.
Digraph InducedSubgraph(const Digraph& g, const VertexSet& keep);

bool IsAcyclic(const Digraph& g);
// Acyclicity of G[within].
bool IsAcyclic(const Digraph& g, const VertexSet& within);

// Kahn's algorithm, smallest available id first. Throws CyclicError.
std::vector<Vertex> TopologicalOrder(const Digraph& g);
// Topological order of G[within]; only vertices of `within` are returned.
std::vector<Vertex> TopologicalOrder(const Digraph& g, const VertexSet& within);

// Calls `visit` once per elementary cycle (Johnson's algorithm). Each cycle is
// reported starting at its smallest vertex. Return false from `visit` to
// stop; the function then returns false.
bool ForEachCycle(const Digraph& g,
                  const std::function<bool(std::span<const Vertex>)>& visit);

// Every elementary cycle. Throws LimitExceeded if there are more than `limit`.
std::vector<std::vector<Vertex>> EnumerateCycles(const Digraph& g,
                                                 std::size_t limit);

// Vertices reachable from `from` without entering `avoid` (0 = avoid none).
std::vector<bool> ReachableFrom(const Digraph& g, Vertex from,
                                Vertex avoid = 0);

enum class ArcClass { kTree, kForward, kCycle, kCross };

const char* ToString(ArcClass c);

enum class ChildOrder { kAscending, kDescending };

// Depth-first spanning tree with consecutive preorder numbers 1..n.
struct DfsTree {
  Vertex root = 0;
  std::vector<Vertex> parent;       // by vertex; 0 for the root
  std::vector<int> po;              // by vertex; 1..n
  std::vector<Vertex> preorder;     // preorder[i] has po i+1
  std::vector<int> subtree_end;     // by vertex; largest po in its subtree
  std::vector<std::pair<Arc, ArcClass>> arc_classes;  // sorted by arc

  // v ->* w in the tree (reflexive).
  bool IsAncestor(Vertex v, Vertex w) const {
    return po[v] <= po[w] && po[w] <= subtree_end[v];
  }
  ArcClass ClassOf(Arc a) const;
  std::vector<Vertex> Children(Vertex v) const;
};

// Throws NotFlowGraphError if some vertex is unreachable from `source`.
DfsTree BuildDfsTree(const Digraph& g, Vertex source,
                     ChildOrder order = ChildOrder::kAscending);

// True iff w != v, v != s, and every s->v path passes through w.
bool Dominates(const Digraph& g, Vertex s, Vertex w, Vertex v);

}  // namespace fvskit
