#include "fvskit/digraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>

namespace fvskit {

namespace {

std::string ArcText(Arc a) {
  std::ostringstream out;
  out << a.from << "->" << a.to;
  return out.str();
}

}  // namespace

Digraph::Digraph(int vertex_count)
    : n_(vertex_count),
      succ_(static_cast<std::size_t>(vertex_count) + 1),
      pred_(static_cast<std::size_t>(vertex_count) + 1) {
  if (vertex_count < 0) throw InvalidGraphError("negative vertex count");
}

Digraph::Digraph(int vertex_count, std::span<const Arc> arcs)
    : Digraph(vertex_count) {
  for (const Arc& a : arcs) {
    if (!contains(a.from) || !contains(a.to)) {
      throw InvalidGraphError("arc " + ArcText(a) + " references a vertex outside 1.." +
                              std::to_string(n_));
    }
    if (a.from == a.to) throw InvalidGraphError("loop at vertex " + std::to_string(a.from));
    succ_[a.from].push_back(a.to);
    pred_[a.to].push_back(a.from);
  }
  for (Vertex v = 1; v <= n_; ++v) {
    std::sort(succ_[v].begin(), succ_[v].end());
    std::sort(pred_[v].begin(), pred_[v].end());
    auto dup = std::adjacent_find(succ_[v].begin(), succ_[v].end());
    if (dup != succ_[v].end()) {
      throw InvalidGraphError("duplicate arc " + ArcText({v, *dup}));
    }
  }
  m_ = arcs.size();
}

Digraph Digraph::FromArcsDedup(int vertex_count, std::span<const Arc> arcs) {
  std::vector<Arc> unique(arcs.begin(), arcs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return Digraph(vertex_count, unique);
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (!contains(from) || !contains(to)) return false;
  return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (Vertex v = 1; v <= n_; ++v) {
    for (Vertex w : succ_[v]) out.push_back({v, w});
  }
  return out;
}

std::vector<bool> Membership(int vertex_count, const VertexSet& set) {
  std::vector<bool> in(static_cast<std::size_t>(vertex_count) + 1, false);
  for (Vertex v : set) {
    if (v < 1 || v > vertex_count) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = true;
  }
  return in;
}

VertexSet Complement(const Digraph& g, const VertexSet& set) {
  const auto in = Membership(g.vertex_count(), set);
  VertexSet out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

Digraph InducedSubgraph(const Digraph& g, const VertexSet& keep) {
  const auto in = Membership(g.vertex_count(), keep);
  std::vector<Arc> arcs;
  for (Vertex v : keep) {
    for (Vertex w : g.successors(v)) {
      if (in[w]) arcs.push_back({v, w});
    }
  }
  return Digraph(g.vertex_count(), arcs);
}

namespace {

// Kahn's algorithm restricted to `in`; returns the partial order it managed
// to emit (shorter than the member count iff there is a cycle).
std::vector<Vertex> KahnOrder(const Digraph& g, const std::vector<bool>& in) {
  const int n = g.vertex_count();
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.successors(v)) {
      if (in[w]) ++indegree[w];
    }
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (in[v] && indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.successors(v)) {
      if (in[w] && --indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

std::vector<Vertex> TopologicalOrderImpl(const Digraph& g,
                                         const std::vector<bool>& in) {
  const auto members = static_cast<std::size_t>(std::count(in.begin() + 1, in.end(), true));
  auto order = KahnOrder(g, in);
  if (order.size() != members) throw CyclicError("graph has a directed cycle");
  return order;
}

}  // namespace

bool IsAcyclic(const Digraph& g) {
  std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()) + 1, true);
  return KahnOrder(g, all).size() == static_cast<std::size_t>(g.vertex_count());
}

bool IsAcyclic(const Digraph& g, const VertexSet& within) {
  return KahnOrder(g, Membership(g.vertex_count(), within)).size() == within.size();
}

std::vector<Vertex> TopologicalOrder(const Digraph& g) {
  std::vector<bool> all(static_cast<std::size_t>(g.vertex_count()) + 1, true);
  all[0] = false;
  return TopologicalOrderImpl(g, all);
}

std::vector<Vertex> TopologicalOrder(const Digraph& g, const VertexSet& within) {
  return TopologicalOrderImpl(g, Membership(g.vertex_count(), within));
}

namespace {

// Johnson, "Finding all the elementary circuits of a directed graph" (1975).
class CycleWalker {
 public:
  CycleWalker(const Digraph& g,
              const std::function<bool(std::span<const Vertex>)>& visit)
      : g_(g),
        visit_(visit),
        in_scc_(Slots(), false),
        blocked_(Slots(), false),
        blocked_by_(Slots()) {}

  bool Run() {
    const int n = g_.vertex_count();
    for (Vertex s = 1; s <= n && !stopped_; ++s) {
      MarkStrongComponent(s);
      bool nontrivial = false;
      for (Vertex w : g_.successors(s)) nontrivial |= in_scc_[w];
      if (!nontrivial) continue;
      for (Vertex v = s; v <= n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      start_ = s;
      Circuit(s);
    }
    return !stopped_;
  }

 private:
  std::size_t Slots() const { return static_cast<std::size_t>(g_.vertex_count()) + 1; }

  // Strong component of s in the subgraph induced by vertices >= s.
  void MarkStrongComponent(Vertex s) {
    const int n = g_.vertex_count();
    std::vector<bool> fwd(Slots(), false), bwd(Slots(), false);
    auto sweep = [&](std::vector<bool>& seen, bool forward) {
      std::vector<Vertex> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        const auto& next = forward ? g_.successors(v) : g_.predecessors(v);
        for (Vertex w : next) {
          if (w >= s && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    };
    sweep(fwd, true);
    sweep(bwd, false);
    for (Vertex v = 1; v <= n; ++v) in_scc_[v] = v >= s && fwd[v] && bwd[v];
  }

  void Unblock(Vertex u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (Vertex w : pending) {
      if (blocked_[w]) Unblock(w);
    }
  }

  bool Circuit(Vertex v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : g_.successors(v)) {
      if (stopped_) break;
      if (!in_scc_[w]) continue;
      if (w == start_) {
        found = true;
        if (!visit_(path_)) stopped_ = true;
      } else if (!blocked_[w] && Circuit(w)) {
        found = true;
      }
    }
    if (found) {
      Unblock(v);
    } else {
      for (Vertex w : g_.successors(v)) {
        if (!in_scc_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Digraph& g_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<bool> in_scc_;
  std::vector<bool> blocked_;
  std::vector<std::vector<Vertex>> blocked_by_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  bool stopped_ = false;
};

}  // namespace

bool ForEachCycle(const Digraph& g,
                  const std::function<bool(std::span<const Vertex>)>& visit) {
  return CycleWalker(g, visit).Run();
}

std::vector<std::vector<Vertex>> EnumerateCycles(const Digraph& g,
                                                 std::size_t limit) {
  if (limit == 0) throw PreconditionError("cycle limit must be positive");
  std::vector<std::vector<Vertex>> cycles;
  const bool complete = ForEachCycle(g, [&](std::span<const Vertex> c) {
    if (cycles.size() == limit) return false;
    cycles.emplace_back(c.begin(), c.end());
    return true;
  });
  if (!complete) {
    throw LimitExceeded("more than " + std::to_string(limit) + " elementary cycles");
  }
  return cycles;
}

std::vector<bool> ReachableFrom(const Digraph& g, Vertex from, Vertex avoid) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  if (from == avoid) return seen;
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.successors(v)) {
      if (w != avoid && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

const char* ToString(ArcClass c) {
  switch (c) {
    case ArcClass::kTree: return "tree";
    case ArcClass::kForward: return "forward";
    case ArcClass::kCycle: return "cycle";
    case ArcClass::kCross: return "cross";
  }
  return "?";
}

ArcClass DfsTree::ClassOf(Arc a) const {
  auto it = std::lower_bound(arc_classes.begin(), arc_classes.end(), a,
                             [](const auto& entry, Arc key) { return entry.first < key; });
  if (it == arc_classes.end() || it->first != a) {
    throw PreconditionError("arc is not part of the graph");
  }
  return it->second;
}

std::vector<Vertex> DfsTree::Children(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w : preorder) {
    if (parent[w] == v) out.push_back(w);
  }
  return out;
}

DfsTree BuildDfsTree(const Digraph& g, Vertex source, ChildOrder order) {
  const int n = g.vertex_count();
  if (!g.contains(source)) throw PreconditionError("source is not a vertex");
  const auto slots = static_cast<std::size_t>(n) + 1;

  DfsTree t;
  t.root = source;
  t.parent.assign(slots, 0);
  t.po.assign(slots, 0);
  t.subtree_end.assign(slots, 0);

  // (vertex, how many successors already examined)
  std::vector<std::pair<Vertex, std::size_t>> stack;
  auto enter = [&](Vertex v) {
    t.preorder.push_back(v);
    t.po[v] = static_cast<int>(t.preorder.size());
    stack.emplace_back(v, 0);
  };
  enter(source);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& succ = g.successors(v);
    if (next == succ.size()) {
      t.subtree_end[v] = static_cast<int>(t.preorder.size());
      stack.pop_back();
      continue;
    }
    const Vertex w = order == ChildOrder::kAscending ? succ[next] : succ[succ.size() - 1 - next];
    ++next;
    if (t.po[w] == 0) {
      t.parent[w] = v;
      enter(w);
    }
  }

  if (t.preorder.size() != static_cast<std::size_t>(n)) {
    for (Vertex v = 1; v <= n; ++v) {
      if (t.po[v] == 0) {
        throw NotFlowGraphError("vertex " + std::to_string(v) + " is unreachable from source " +
                                std::to_string(source));
      }
    }
  }

  for (const Arc& a : g.arcs()) {
    ArcClass c;
    if (t.parent[a.to] == a.from) {
      c = ArcClass::kTree;
    } else if (t.IsAncestor(a.from, a.to)) {
      c = ArcClass::kForward;
    } else if (t.IsAncestor(a.to, a.from)) {
      c = ArcClass::kCycle;
    } else {
      c = ArcClass::kCross;
    }
    t.arc_classes.emplace_back(a, c);
  }
  return t;
}

bool Dominates(const Digraph& g, Vertex s, Vertex w, Vertex v) {
  if (w == v || v == s) return false;
  if (w == s) return true;
  return !ReachableFrom(g, s, w)[v];
}

}  // namespace fvskit
