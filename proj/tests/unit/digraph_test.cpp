#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "brute.hpp"
#include "fvskit/digraph.hpp"
#include "fvskit/graph_io.hpp"
#include "fvskit/random.hpp"

namespace fvskit {
namespace {

Digraph Make(int n, std::vector<Arc> arcs) { return Digraph(n, arcs); }

Digraph Cycle(int n) {
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) arcs.push_back({v, v % n + 1});
  return Make(n, arcs);
}

// Every digraph on n vertices, one per arc mask over the n(n-1) ordered pairs.
Digraph FromMask(int n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) arcs.push_back({u, v});
      ++bit;
    }
  }
  return Make(n, arcs);
}

TEST(Digraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Make(2, {{1, 1}}), InvalidGraphError);
  EXPECT_THROW(Make(2, {{1, 2}, {1, 2}}), InvalidGraphError);
  EXPECT_THROW(Make(2, {{1, 3}}), InvalidGraphError);
  EXPECT_THROW(Make(2, {{0, 1}}), InvalidGraphError);
  const std::vector<Arc> dup{{1, 2}, {1, 2}, {2, 1}};
  EXPECT_EQ(Digraph::FromArcsDedup(2, dup).arc_count(), 2u);
}

TEST(Digraph, AdjacencyIsSorted) {
  const Digraph g = Make(4, {{1, 4}, {1, 2}, {3, 1}, {1, 3}});
  EXPECT_EQ(g.successors(1), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(g.predecessors(1), (std::vector<Vertex>{3}));
  EXPECT_TRUE(g.has_arc(3, 1));
  EXPECT_FALSE(g.has_arc(1, 1));
  EXPECT_EQ(g.arcs().front(), (Arc{1, 2}));
}

TEST(Digraph, Acyclicity) {
  EXPECT_FALSE(IsAcyclic(Cycle(3)));
  EXPECT_TRUE(IsAcyclic(Make(3, {{1, 2}, {2, 3}})));
  EXPECT_TRUE(IsAcyclic(Digraph(4)));
  EXPECT_TRUE(IsAcyclic(Cycle(3), {1, 2}));
}

TEST(Digraph, TopologicalOrderExamples) {
  EXPECT_EQ(TopologicalOrder(Make(3, {{1, 2}, {2, 3}})), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(TopologicalOrder(Make(3, {{3, 1}})), (std::vector<Vertex>{2, 3, 1}));
  EXPECT_THROW(TopologicalOrder(Cycle(3)), CyclicError);
  EXPECT_EQ(TopologicalOrder(Cycle(4), {4, 1, 2}), (std::vector<Vertex>{4, 1, 2}));
}

TEST(Digraph, TopologicalOrderIsSmallestAmongAll) {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const Digraph g = FromMask(4, mask);
    const auto all = brute::AllTopologicalOrders(g);
    if (all.empty()) {
      EXPECT_THROW(TopologicalOrder(g), CyclicError);
      EXPECT_FALSE(IsAcyclic(g));
    } else {
      EXPECT_EQ(TopologicalOrder(g), *std::min_element(all.begin(), all.end()));
      EXPECT_TRUE(IsAcyclic(g));
    }
  }
}

TEST(Digraph, CycleEnumerationExamples) {
  EXPECT_EQ(EnumerateCycles(Cycle(3), 10), (std::vector<std::vector<Vertex>>{{1, 2, 3}}));
  EXPECT_TRUE(EnumerateCycles(Make(3, {{1, 2}, {2, 3}, {1, 3}}), 10).empty());
  auto two = EnumerateCycles(Make(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}), 10);
  std::sort(two.begin(), two.end());
  EXPECT_EQ(two, (std::vector<std::vector<Vertex>>{{1, 2}, {2, 3}}));
  EXPECT_THROW(EnumerateCycles(Make(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}), 1), LimitExceeded);
}

TEST(Digraph, CycleCountMatchesBruteForce) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.Between(1, 8);
    std::vector<Arc> arcs;
    const int density = rng.Between(1, 4);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = 1; v <= n; ++v) {
        if (u != v && rng.Uniform(8) < static_cast<std::uint64_t>(density)) arcs.push_back({u, v});
      }
    }
    const Digraph g(n, arcs);
    const auto cycles = EnumerateCycles(g, 1'000'000);
    EXPECT_EQ(static_cast<long>(cycles.size()), brute::CountCycles(g));
    for (const auto& c : cycles) {
      EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(g.has_arc(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST(Digraph, ForEachCycleStops) {
  int seen = 0;
  const bool done = ForEachCycle(FromMask(4, (1u << 12) - 1), [&](std::span<const Vertex>) {
    return ++seen < 3;
  });
  EXPECT_FALSE(done);
  EXPECT_EQ(seen, 3);
}

TEST(DfsTree, SimpleLoopGraph) {
  const Digraph g1 = Make(3, {{1, 2}, {2, 3}, {3, 2}});
  const DfsTree t = BuildDfsTree(g1, 1);
  EXPECT_EQ(t.po, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(t.ClassOf({1, 2}), ArcClass::kTree);
  EXPECT_EQ(t.ClassOf({2, 3}), ArcClass::kTree);
  EXPECT_EQ(t.ClassOf({3, 2}), ArcClass::kCycle);
}

TEST(DfsTree, ForwardArc) {
  const DfsTree t = BuildDfsTree(Make(3, {{1, 2}, {1, 3}, {2, 3}, {3, 2}}), 1);
  EXPECT_EQ(t.ClassOf({1, 2}), ArcClass::kTree);
  EXPECT_EQ(t.ClassOf({2, 3}), ArcClass::kTree);
  EXPECT_EQ(t.ClassOf({3, 2}), ArcClass::kCycle);
  EXPECT_EQ(t.ClassOf({1, 3}), ArcClass::kForward);
}

TEST(DfsTree, CrossArcAndDescendingOrder) {
  const Digraph g = Make(3, {{1, 2}, {1, 3}, {3, 2}});
  EXPECT_EQ(BuildDfsTree(g, 1).ClassOf({3, 2}), ArcClass::kCross);
  const DfsTree d = BuildDfsTree(g, 1, ChildOrder::kDescending);
  EXPECT_EQ(d.preorder, (std::vector<Vertex>{1, 3, 2}));
  EXPECT_EQ(d.ClassOf({3, 2}), ArcClass::kTree);
  EXPECT_EQ(d.ClassOf({1, 2}), ArcClass::kForward);
}

TEST(DfsTree, UnreachableVertex) {
  EXPECT_THROW(BuildDfsTree(Make(3, {{1, 2}}), 1), NotFlowGraphError);
}

TEST(DfsTree, ClassificationProperties) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Digraph g = RandomFlowGraph(rng, rng.Between(1, 9), rng.Between(0, 12));
    for (ChildOrder order : {ChildOrder::kAscending, ChildOrder::kDescending}) {
      const DfsTree t = BuildDfsTree(g, 1, order);
      const int n = g.vertex_count();
      EXPECT_EQ(t.po[1], 1);
      std::vector<int> pos(t.po.begin() + 1, t.po.end());
      std::sort(pos.begin(), pos.end());
      for (int i = 0; i < n; ++i) EXPECT_EQ(pos[static_cast<std::size_t>(i)], i + 1);
      int tree_arcs = 0;
      ASSERT_EQ(t.arc_classes.size(), g.arc_count());
      for (const auto& [a, cls] : t.arc_classes) {
        switch (cls) {
          case ArcClass::kTree:
            ++tree_arcs;
            EXPECT_EQ(t.parent[a.to], a.from);
            break;
          case ArcClass::kForward:
            EXPECT_TRUE(t.IsAncestor(a.from, a.to));
            EXPECT_NE(t.parent[a.to], a.from);
            break;
          case ArcClass::kCycle:
            EXPECT_TRUE(t.IsAncestor(a.to, a.from));
            break;
          case ArcClass::kCross:
            EXPECT_FALSE(t.IsAncestor(a.from, a.to));
            EXPECT_FALSE(t.IsAncestor(a.to, a.from));
            EXPECT_LT(t.po[a.to], t.po[a.from]);
            break;
        }
      }
      EXPECT_EQ(tree_arcs, n - 1);
    }
  }
}

TEST(Dominance, Examples) {
  const Digraph g1 = Make(3, {{1, 2}, {2, 3}, {3, 2}});
  EXPECT_TRUE(Dominates(g1, 1, 2, 3));
  EXPECT_FALSE(Dominates(Make(3, {{1, 2}, {1, 3}, {2, 3}}), 1, 2, 3));
  for (Vertex x = 1; x <= 3; ++x) EXPECT_FALSE(Dominates(g1, 1, x, 1));
}

TEST(Dominance, MatchesPathEnumeration) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph g = RandomFlowGraph(rng, rng.Between(2, 7), rng.Between(0, 8));
    const int n = g.vertex_count();
    for (Vertex w = 1; w <= n; ++w) {
      for (Vertex v = 1; v <= n; ++v) {
        if (w == v) continue;
        EXPECT_EQ(Dominates(g, 1, w, v), brute::Dominates(g, 1, w, v));
      }
    }
  }
}

TEST(GraphIo, RoundTripAndErrors) {
  const Digraph g = Make(4, {{4, 1}, {1, 2}, {2, 3}});
  const std::string text = FormatEdgeList(g);
  EXPECT_EQ(text, "p dg 4 3\n1 2\n2 3\n4 1\n");
  EXPECT_EQ(ParseEdgeList("c hi\n" + text), g);
  EXPECT_THROW(ParseEdgeList("p dg 2 1\n1 x\n"), FormatError);
  EXPECT_THROW(ParseEdgeList("p dg 2 2\n1 2\n"), FormatError);
  EXPECT_THROW(ParseEdgeList("1 2\n"), FormatError);
  EXPECT_THROW(ParseEdgeList("p dg 2 1\n1 1\n"), InvalidGraphError);
  std::ostringstream dot;
  const DfsTree t = BuildDfsTree(Make(2, {{1, 2}, {2, 1}}), 1);
  WriteDot(dot, Make(2, {{1, 2}, {2, 1}}), &t);
  EXPECT_NE(dot.str().find("2 -> 1"), std::string::npos);
  EXPECT_NE(dot.str().find("red"), std::string::npos);
}

}  // namespace
}  // namespace fvskit
