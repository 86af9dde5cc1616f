#include "fvskit/flowgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fvskit/random.hpp"

namespace fvskit {

const VertexSet* FlowAnalysis::PStarOf(Vertex w) const {
  for (const PSet& p : pstar) {
    if (p.owner == w) return &p.members;
  }
  return nullptr;
}

FlowAnalysis HeadsAndCycleSources(const Digraph& g, Vertex s) {
  FlowAnalysis fa;
  fa.source = s;
  fa.dfst = BuildDfsTree(g, s);
  std::vector<VertexSet> sources(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (const auto& [arc, cls] : fa.dfst.arc_classes) {
    if (cls == ArcClass::kCycle && arc.to != s) sources[arc.to].push_back(arc.from);
  }
  // Reverse preorder lists heads by decreasing po.
  for (auto it = fa.dfst.preorder.rbegin(); it != fa.dfst.preorder.rend(); ++it) {
    if (sources[*it].empty()) continue;
    fa.heads.push_back(*it);
    VertexSet c = sources[*it];
    std::sort(c.begin(), c.end());
    fa.cycle_sources.push_back({*it, std::move(c)});
  }
  fa.hn.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 1);
  return fa;
}

namespace {

// Vertices (other than w) reaching `targets` in the graph given by reverse
// adjacency `pred`, never entering w. Includes the targets.
VertexSet ReachingAvoiding(const std::vector<VertexSet>& pred, const VertexSet& targets,
                           Vertex w) {
  std::vector<bool> seen(pred.size(), false);
  std::vector<Vertex> stack;
  for (Vertex t : targets) {
    if (t != w && !seen[t]) {
      seen[t] = true;
      stack.push_back(t);
    }
  }
  VertexSet out;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Vertex y : pred[x]) {
      if (y != w && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FlowAnalysis AnalyzeReducibility(const Digraph& g, Vertex s) {
  FlowAnalysis fa = HeadsAndCycleSources(g, s);
  const int n = g.vertex_count();
  const auto slots = static_cast<std::size_t>(n) + 1;
  std::vector<Vertex> rep(slots);
  std::iota(rep.begin(), rep.end(), 0);
  const std::vector<Arc> arcs = g.arcs();

  for (std::size_t i = 0; i < fa.heads.size(); ++i) {
    const Vertex w = fa.heads[i];
    // The current graph: original arcs between representatives.
    std::vector<VertexSet> pred(slots);
    for (const Arc& a : arcs) {
      const Vertex x = rep[a.from], y = rep[a.to];
      if (x != y) pred[y].push_back(x);
    }
    VertexSet cstar;
    for (Vertex x : fa.cycle_sources[i].members) cstar.push_back(rep[x]);
    const VertexSet members = ReachingAvoiding(pred, cstar, w);
    fa.pstar.push_back({w, members});
    for (Vertex v : members) {
      if (!fa.dfst.IsAncestor(w, v)) {
        fa.reducible = false;
        fa.failure = ReducibilityFailure{w, v};
        return fa;
      }
    }
    for (Vertex v : members) {
      fa.hn[v] = fa.dfst.po[w];
      for (Vertex x = 1; x <= n; ++x) {
        if (rep[x] == v) rep[x] = w;
      }
    }
  }

  VertexSet rest;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != s && rep[v] == v) rest.push_back(v);
  }
  fa.pstar.push_back({s, std::move(rest)});
  fa.reducible = true;
  fa.sn = SnNumbering(fa.dfst);
  return fa;
}

VertexSet OriginalPSet(const Digraph& g, const DfsTree& tree, Vertex w) {
  VertexSet c;
  for (Vertex x : g.predecessors(w)) {
    if (tree.ClassOf({x, w}) == ArcClass::kCycle) c.push_back(x);
  }
  std::vector<VertexSet> pred(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) pred[v] = g.predecessors(v);
  return ReachingAvoiding(pred, c, w);
}

Digraph Collapse(const Digraph& g, const VertexSet& targets, Vertex w) {
  if (std::find(targets.begin(), targets.end(), w) != targets.end()) {
    throw PreconditionError("cannot collapse a vertex into itself");
  }
  std::set<Arc> arcs;
  for (const Arc& a : g.arcs()) arcs.insert(a);
  for (Vertex v : targets) {
    if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
    std::vector<Arc> incident;
    for (const Arc& a : arcs) {
      if (a.from == v || a.to == v) incident.push_back(a);
    }
    for (const Arc& a : incident) {
      arcs.erase(a);
      if (a.from == v && a.to != w) arcs.insert({w, a.to});
      if (a.to == v && a.from != w) arcs.insert({a.from, w});
    }
  }
  return Digraph(g.vertex_count(), std::vector<Arc>(arcs.begin(), arcs.end()));
}

std::vector<int> SnNumbering(const DfsTree& tree) {
  std::vector<int> sn(tree.po.size(), 0);
  std::vector<std::vector<Vertex>> children(tree.po.size());
  for (Vertex v : tree.preorder) {
    if (v != tree.root) children[tree.parent[v]].push_back(v);
  }
  // Pushing children in increasing po pops them in decreasing po.
  std::vector<Vertex> stack{tree.root};
  int next = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    sn[v] = ++next;
    for (Vertex c : children[v]) stack.push_back(c);
  }
  return sn;
}

std::vector<Vertex> ReductionOrder(const FlowAnalysis& fa) {
  if (!fa.reducible) throw NotReducibleError("reduction order needs a reducible flow graph");
  std::vector<Vertex> order;
  for (Vertex v : fa.dfst.preorder) {
    if (v != fa.source) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (fa.hn[a] != fa.hn[b]) return fa.hn[a] > fa.hn[b];
    return fa.sn[a] < fa.sn[b];
  });
  order.push_back(fa.source);
  return order;
}

bool BlockGraph::IsTree() const {
  if (boxes.empty() || edges.size() != boxes.size() - 1) return false;
  std::vector<int> root(boxes.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    root[ra] = rb;
  }
  return true;
}

BlockGraph BuildBlockGraph(const FlowAnalysis& fa) {
  if (!fa.reducible) throw NotReducibleError("block graph needs a reducible flow graph");
  BlockGraph b;
  b.box_of.assign(fa.hn.size(), -1);
  std::vector<Vertex> w_set{fa.source};
  w_set.insert(w_set.end(), fa.heads.begin(), fa.heads.end());
  std::vector<bool> in_w(fa.hn.size(), false);
  for (Vertex w : w_set) {
    in_w[w] = true;
    b.box_of[w] = static_cast<int>(b.boxes.size());
    b.boxes.push_back({w});
  }
  // pstar lists the heads in processing order and s last.
  for (const PSet& p : fa.pstar) {
    VertexSet rest;
    for (Vertex v : p.members) {
      if (in_w[v]) {
        b.edges.emplace_back(b.box_of[p.owner], b.box_of[v]);
      } else {
        rest.push_back(v);
      }
    }
    if (!rest.empty()) {
      const int box = static_cast<int>(b.boxes.size());
      for (Vertex v : rest) b.box_of[v] = box;
      b.boxes.push_back(std::move(rest));
      b.edges.emplace_back(b.box_of[p.owner], box);
    }
  }
  return b;
}

LrOrdering ComputeLrOrdering(const Digraph& g, Vertex s) {
  const FlowAnalysis fa = AnalyzeReducibility(g, s);
  if (!fa.reducible) {
    throw NotReducibleError("not reducible: vertex " + std::to_string(fa.failure->vertex) +
                            " is in P*(" + std::to_string(fa.failure->head) +
                            ") but not below it in the DFS tree");
  }
  LrOrdering result;
  result.blocks = BuildBlockGraph(fa);
  const BlockGraph& b = result.blocks;
  if (!b.IsTree()) throw std::logic_error("block graph is not a tree");

  std::vector<std::vector<int>> adj(b.boxes.size());
  for (const auto& [x, y] : b.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  // Color 0 = Left, starting from the box {s}.
  std::vector<int> color(b.boxes.size(), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int y : adj[queue[i]]) {
      if (color[y] < 0) {
        color[y] = 1 - color[queue[i]];
        queue.push_back(y);
      }
    }
  }
  for (std::size_t box = 0; box < b.boxes.size(); ++box) {
    VertexSet& side = color[box] == 1 ? result.right : result.left;
    side.insert(side.end(), b.boxes[box].begin(), b.boxes[box].end());
  }
  std::sort(result.right.begin(), result.right.end());
  std::sort(result.left.begin(), result.left.end());

  LROrder& o = result.order;
  o.order = TopologicalOrder(g, result.right);
  const std::vector<Vertex> tail = TopologicalOrder(g, result.left);
  o.order.insert(o.order.end(), tail.rbegin(), tail.rend());
  o.side.assign(static_cast<std::size_t>(g.vertex_count()) + 1, Side::kLeft);
  for (Vertex v : result.right) o.side[v] = Side::kRight;
  return result;
}

LROrder LrOrderOfReducible(const Digraph& g, Vertex s) { return ComputeLrOrdering(g, s).order; }

Digraph GenReducible(std::uint64_t seed, int n, int extra_arcs) {
  if (n < 1) throw PreconditionError("need at least one vertex");
  Rng rng(seed);
  std::set<Arc> arcs;
  for (Vertex v = 2; v <= n; ++v) {
    const Vertex w = rng.Between(1, v - 1);
    std::vector<Vertex> outs;
    for (auto it = arcs.lower_bound({w, 0}); it != arcs.end() && it->from == w; ++it) {
      outs.push_back(it->to);
    }
    // Each out-arc of w stays, moves to v, or is duplicated on v.
    for (Vertex x : outs) {
      switch (rng.Uniform(3)) {
        case 0: break;
        case 1:
          arcs.erase({w, x});
          arcs.insert({v, x});
          break;
        default: arcs.insert({v, x}); break;
      }
    }
    arcs.insert({w, v});
    if (rng.Coin()) arcs.insert({v, w});
  }
  Digraph g(n, std::vector<Arc>(arcs.begin(), arcs.end()));
  if (n == 1) return g;
  for (int e = 0; e < extra_arcs; ++e) {
    const Vertex u = rng.Between(1, n);
    const Vertex v = rng.Between(1, n);
    if (u == v || arcs.count({u, v})) continue;
    arcs.insert({u, v});
    Digraph candidate(n, std::vector<Arc>(arcs.begin(), arcs.end()));
    if (AnalyzeReducibility(candidate, 1).reducible) {
      g = std::move(candidate);
    } else {
      arcs.erase({u, v});
    }
  }
  return g;
}

}  // namespace fvskit
