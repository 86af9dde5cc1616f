#pragma once

// Flow graphs (G, s): reducibility testing by head collapsing, the hn/sn
// numberings, the reduction order, and LR-orders of reducible flow graphs
// built from the block tree of the collapse.
//
// Terminology: a head is a target w != s of some cycle arc; C(w) are the
// sources of cycle arcs into w; P(w) are the vertices v != w that reach C(w)
// without passing through w (C(w) itself included via the empty path).
// P*(w) is P(w) evaluated in the graph where the heads processed so far
// (by decreasing po) have absorbed their own P* sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "fvskit/digraph.hpp"
#include "fvskit/fvs.hpp"

namespace fvskit {

struct ReducibilityFailure {
  Vertex head = 0;
  Vertex vertex = 0;  // in P*(head) but not a tree descendant of head
};

struct PSet {
  Vertex owner = 0;  // a head, or the source
  VertexSet members;
};

struct FlowAnalysis {
  Vertex source = 0;
  DfsTree dfst;
  std::vector<Vertex> heads;      // decreasing po
  std::vector<PSet> cycle_sources;  // C(w) per head, same order as heads
  // P*(w) per processed head in processing order; P*(s) last when complete.
  std::vector<PSet> pstar;
  std::vector<int> hn;  // by vertex; 1 unless absorbed by a head
  std::vector<int> sn;  // by vertex; filled only when reducible
  bool reducible = false;
  std::optional<ReducibilityFailure> failure;

  const VertexSet* PStarOf(Vertex w) const;
};

// DFST, heads and C(w); no collapsing. Throws NotFlowGraphError.
FlowAnalysis HeadsAndCycleSources(const Digraph& g, Vertex s);

// Runs the head-collapsing test; stops at the first head with a member of
// P*(head) outside its subtree. Throws NotFlowGraphError.
FlowAnalysis AnalyzeReducibility(const Digraph& g, Vertex s);

// P(w) computed directly in `g` for the cycle arcs of `tree`.
VertexSet OriginalPSet(const Digraph& g, const DfsTree& tree, Vertex w);

// Merges each target (in order) into w: w gains the out-arcs and in-arcs of
// the target it lacks, then the target loses all its arcs. Ids are kept; the
// merged vertices stay behind isolated. Throws PreconditionError when w is a
// target.
Digraph Collapse(const Digraph& g, const VertexSet& targets, Vertex w);

// Preorder numbers of the DFST with children taken in decreasing po.
std::vector<int> SnNumbering(const DfsTree& tree);

// V \ {s} by (hn descending, sn ascending), then s. Requires a reducible
// analysis.
std::vector<Vertex> ReductionOrder(const FlowAnalysis& fa);

struct BlockGraph {
  std::vector<VertexSet> boxes;
  std::vector<std::pair<int, int>> edges;  // box indices
  std::vector<int> box_of;                 // by vertex

  bool IsTree() const;
};

// Boxes {w} for w in W = heads + {s} ({s} is box 0), then P*(w) \ W for
// each w with that set nonempty. Requires a reducible analysis.
BlockGraph BuildBlockGraph(const FlowAnalysis& fa);

struct LrOrdering {
  LROrder order;
  BlockGraph blocks;
  VertexSet right;
  VertexSet left;
};

// Throws NotReducibleError, NotFlowGraphError.
LrOrdering ComputeLrOrdering(const Digraph& g, Vertex s);
LROrder LrOrderOfReducible(const Digraph& g, Vertex s);

// A reducible flow graph with source 1 grown from a single vertex by
// reverse collapses, plus up to `extra_arcs` random arcs that keep it
// reducible.
Digraph GenReducible(std::uint64_t seed, int n, int extra_arcs);

}  // namespace fvskit
