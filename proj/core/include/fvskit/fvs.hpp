#pragma once

// Feedback vertex sets and LR-orders.
//
// An LR-order is a vertex sequence in which every vertex has all its
// successors on one side of it: after it (a Right vertex) or before it (a
// Left vertex). The Right vertices of an LR-order form an acyclic FVS and
// vice versa.

#include <vector>

#include "fvskit/digraph.hpp"
#include "fvskit/sat.hpp"

namespace fvskit {

enum class Side { kLeft, kRight };

const char* ToString(Side side);

struct LROrder {
  std::vector<Vertex> order;
  std::vector<Side> side;  // by vertex id; slot 0 unused

  VertexSet RightSet() const;
  // All Right vertices precede all Left vertices.
  bool IsStandard() const;
};

// G[V \ s] acyclic. Throws ProperSubsetError when s = V.
bool IsFvs(const Digraph& g, const VertexSet& s);
// G[V \ s] and G[s] acyclic. Throws ProperSubsetError when s = V.
bool IsAcyclicFvs(const Digraph& g, const VertexSet& s);

// False when `o.order` is not a permutation of V or some vertex has
// successors on its wrong side.
bool VerifyLrOrder(const Digraph& g, const LROrder& o);

// Topological order of G[s] followed by the reversed topological order of
// G[V \ s]; s becomes the Right set. Throws NotAcyclicFvsError (including
// s empty) or ProperSubsetError.
LROrder LrOrderFromAcyclicFvs(const Digraph& g, const VertexSet& s);

// For a monotone formula in strongly 3-covered form and a NAE-satisfying
// assignment: orient each arc u->v of the representative graph as u->v when u
// is true and v->u otherwise, topologically sort the result. The true
// variables become the Right set. Throws NotMonotoneError, PreconditionError
// (assignment not NAE-satisfying) or GammaCyclicError.
LROrder LrOrderFromNae(const Formula& f, const Assignment& a);

// The oriented graph used by LrOrderFromNae.
Digraph GammaGraph(const Digraph& representative, const Assignment& a);

}  // namespace fvskit
