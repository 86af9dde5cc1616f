#include <gtest/gtest.h>

#include <vector>

#include "brute.hpp"
#include "fvskit/fvs.hpp"
#include "fvskit/oracles.hpp"
#include "fvskit/random.hpp"
#include "fvskit/reduction.hpp"

namespace fvskit {
namespace {

using Sides = std::vector<Side>;
constexpr Side R = Side::kRight;
constexpr Side Lf = Side::kLeft;

Digraph Make(int n, std::vector<Arc> arcs) { return Digraph(n, arcs); }
Digraph Cycle(int n) {
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) arcs.push_back({v, v % n + 1});
  return Make(n, arcs);
}
Digraph TwoTriangles() {
  return Make(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
}
Clause3 P(int a, int b, int c) { return {Literal::Pos(a), Literal::Pos(b), Literal::Pos(c)}; }

Digraph RandomDigraph(Rng& rng, int n, int per_eight) {
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v && rng.Uniform(8) < static_cast<std::uint64_t>(per_eight)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

Formula RandomMonotone(Rng& rng, int n, int m) {
  const Formula r = RandomThreeSat(rng, n, m);
  std::vector<Clause3> pos;
  for (Clause3 c : r.clauses()) {
    for (Literal& l : c) l.positive = true;
    pos.push_back(c);
  }
  return Formula(n, pos);
}

LROrder Order(std::vector<Vertex> order, Sides by_vertex) {
  LROrder o;
  o.order = std::move(order);
  o.side = {Lf};
  o.side.insert(o.side.end(), by_vertex.begin(), by_vertex.end());
  return o;
}

TEST(Fvs, Examples) {
  EXPECT_TRUE(IsFvs(Cycle(3), {1}));
  EXPECT_FALSE(IsFvs(Cycle(3), {}));
  EXPECT_TRUE(IsFvs(Make(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}), {2}));
  EXPECT_THROW(IsFvs(Cycle(3), {1, 2, 3}), ProperSubsetError);
}

TEST(AcyclicFvs, Examples) {
  EXPECT_TRUE(IsAcyclicFvs(Cycle(3), {1}));
  EXPECT_FALSE(IsAcyclicFvs(TwoTriangles(), {1, 2, 3}));
  EXPECT_TRUE(IsAcyclicFvs(Cycle(4), {1, 3}));
  EXPECT_THROW(IsAcyclicFvs(Cycle(3), {1, 2, 3}), ProperSubsetError);
}

TEST(LrOrder, Verify) {
  EXPECT_TRUE(VerifyLrOrder(Cycle(3), Order({1, 2, 3}, {R, R, Lf})));
  EXPECT_FALSE(VerifyLrOrder(Cycle(3), Order({1, 2, 3}, {R, R, R})));
  EXPECT_TRUE(VerifyLrOrder(Digraph(3), Order({3, 1, 2}, {Lf, Lf, Lf})));
  EXPECT_FALSE(VerifyLrOrder(Cycle(3), Order({1, 2}, {R, R, Lf})));
  EXPECT_FALSE(VerifyLrOrder(Cycle(3), Order({1, 1, 2}, {R, R, Lf})));
  EXPECT_TRUE(Order({1, 2, 3}, {R, R, Lf}).IsStandard());
  EXPECT_FALSE(Order({1, 2, 3}, {R, Lf, R}).IsStandard());
}

TEST(LrOrder, FromAcyclicFvsExamples) {
  const LROrder a = LrOrderFromAcyclicFvs(Cycle(3), {1});
  EXPECT_EQ(a.order, (std::vector<Vertex>{1, 3, 2}));
  EXPECT_EQ(a.side, (Sides{Lf, R, Lf, Lf}));
  const LROrder b = LrOrderFromAcyclicFvs(Cycle(4), {1, 3});
  EXPECT_EQ(b.order, (std::vector<Vertex>{1, 3, 4, 2}));
  EXPECT_EQ(b.RightSet(), (VertexSet{1, 3}));
  EXPECT_TRUE(b.IsStandard());
  EXPECT_THROW(LrOrderFromAcyclicFvs(Cycle(3), {1, 2, 3}), ProperSubsetError);
  EXPECT_THROW(LrOrderFromAcyclicFvs(Cycle(3), {}), NotAcyclicFvsError);
  EXPECT_THROW(LrOrderFromAcyclicFvs(TwoTriangles(), {1, 2, 3}), NotAcyclicFvsError);
}

TEST(LrOrder, FromAcyclicFvsRoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph g = RandomDigraph(rng, rng.Between(2, 7), rng.Between(1, 4));
    const brute::Best best = brute::Fvs(g, true);
    if (!best.feasible || best.witness.empty()) continue;
    const LROrder o = LrOrderFromAcyclicFvs(g, best.witness);
    EXPECT_TRUE(VerifyLrOrder(g, o));
    EXPECT_TRUE(o.IsStandard());
    EXPECT_EQ(o.RightSet(), best.witness);
  }
}

TEST(LrOrder, FromNaeExamples) {
  const Formula f(3, {P(1, 2, 3)});
  const Assignment a = Assignment::FromValues({true, false, false});
  const Digraph gamma = GammaGraph(RepresentativeGraph(f), a);
  EXPECT_EQ(gamma.arcs(), (std::vector<Arc>{{1, 2}, {1, 3}, {3, 2}}));
  const LROrder o = LrOrderFromNae(f, a);
  EXPECT_EQ(o.order, (std::vector<Vertex>{1, 3, 2}));
  EXPECT_EQ(o.RightSet(), (VertexSet{1}));

  const LROrder two = LrOrderFromNae(f, Assignment::FromValues({true, true, false}));
  EXPECT_EQ(two.RightSet(), (VertexSet{1, 2}));
  EXPECT_TRUE(VerifyLrOrder(RepresentativeGraph(f), two));

  EXPECT_THROW(LrOrderFromNae(f, Assignment::FromValues({true, true, true})), PreconditionError);
  EXPECT_THROW(LrOrderFromNae(Formula(3, {{Literal::Pos(1), Literal::Neg(2), Literal::Pos(3)}}),
                              Assignment::FromValues({true, false, false})),
               NotMonotoneError);
}

TEST(LrOrder, GammaCycleOutsideCoveredForm) {
  // Opposite arcs 1->2 and 2->1 both keep their direction when 1 and 2 are
  // true.
  const Formula f(4, {P(1, 2, 3), P(2, 1, 4)});
  ASSERT_FALSE(IsStronglyThreeCoveredForm(f, 100));
  const Assignment a = Assignment::FromValues({true, true, false, false});
  ASSERT_TRUE(Evaluate(f, a, SatMode::kNae).satisfied);
  EXPECT_THROW(LrOrderFromNae(f, a), GammaCyclicError);
}

TEST(Oracles, GraphExamples) {
  const OptResult tri = BruteMfvs(Cycle(3));
  EXPECT_EQ(tri.value, 1);
  EXPECT_EQ(tri.witness, (std::vector<int>{1}));
  EXPECT_EQ(BruteMfvs(TwoTriangles()).value, 2);
  EXPECT_EQ(BruteAmfvs(Cycle(3)).value, 1);
  EXPECT_EQ(BruteAmfvs(Cycle(4)).value, 1);
  const MnaeInstance inst = ToMnae(Formula(3, {{Literal::Pos(1), Literal::Neg(2), Literal::Pos(3)}}));
  EXPECT_EQ(BruteMfvs(RepresentativeGraph(inst.formula)).value, 8);
  EXPECT_EQ(BruteAmfvs(RepresentativeGraph(inst.formula)).value, 8);
}

TEST(Oracles, NoAcyclicFvs) {
  const Digraph k3 = Make(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}});
  for (SearchStrategy s : {SearchStrategy::kExhaustive, SearchStrategy::kBranching}) {
    const OptResult r = BruteAmfvs(k3, {.strategy = s});
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.value, 4);
    EXPECT_TRUE(r.witness.empty());
    EXPECT_EQ(BruteMfvs(k3, {.strategy = s}).value, 2);
  }
}

TEST(Oracles, FormulaExamples) {
  const Formula f(3, {P(1, 2, 3)});
  EXPECT_EQ(BruteMinOnes(f, SatMode::kStandard).value, 1);
  EXPECT_EQ(BruteMinOnes(f, SatMode::kNae).value, 1);
  const MnaeInstance inst = ToMnae(f);
  for (SatMode mode : {SatMode::kStandard, SatMode::kNae}) {
    EXPECT_EQ(BruteMinOnes(inst.formula, mode, {.strategy = SearchStrategy::kBranching}).value, 8);
  }
  const Formula unsat(3, {P(1, 2, 3)});
  std::vector<Clause3> all;
  for (int mask = 0; mask < 8; ++mask) {
    Clause3 c = P(1, 2, 3);
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)].positive = (mask >> i & 1) != 0;
    all.push_back(c);
  }
  for (SearchStrategy s : {SearchStrategy::kExhaustive, SearchStrategy::kBranching}) {
    const OptResult r = BruteMinOnes(Formula(3, all), SatMode::kStandard, {.strategy = s});
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.value, 4);
  }
}

TEST(Oracles, Guard) {
  EXPECT_THROW(BruteMfvs(Cycle(10), {.guard = 9}), SizeGuardError);
  EXPECT_THROW(BruteMinOnes(Formula(5, {}), SatMode::kNae, {.guard = 4}), SizeGuardError);
  EXPECT_EQ(BruteMfvs(Cycle(10), {.guard = 10}).value, 1);
  const OptResult big = BruteMfvs(Cycle(40));
  EXPECT_EQ(big.used, SearchStrategy::kBranching);
  EXPECT_EQ(big.value, 1);
  EXPECT_EQ(BruteMfvs(Cycle(5)).used, SearchStrategy::kExhaustive);
}

TEST(Oracles, GraphStrategiesMatchFullScan) {
  Rng rng(12);
  for (int trial = 0; trial < 250; ++trial) {
    const Digraph g = RandomDigraph(rng, rng.Between(1, 9), rng.Between(1, 5));
    for (bool acyclic : {false, true}) {
      const brute::Best want = brute::Fvs(g, acyclic);
      for (SearchStrategy s : {SearchStrategy::kExhaustive, SearchStrategy::kBranching}) {
        const OptResult got = acyclic ? BruteAmfvs(g, {.strategy = s}) : BruteMfvs(g, {.strategy = s});
        EXPECT_EQ(got.value, want.value);
        EXPECT_EQ(got.feasible, want.feasible);
        EXPECT_EQ(got.witness, want.witness);
        EXPECT_TRUE(got.exhausted);
      }
    }
  }
}

TEST(Oracles, FormulaStrategiesMatchFullScan) {
  Rng rng(13);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.Between(3, 12);
    const Formula f = RandomThreeSat(rng, n, rng.Between(0, 3 * n));
    for (SatMode mode : {SatMode::kStandard, SatMode::kNae}) {
      const brute::Best want = brute::MinOnes(f, mode);
      for (SearchStrategy s : {SearchStrategy::kExhaustive, SearchStrategy::kBranching}) {
        const OptResult got = BruteMinOnes(f, mode, {.strategy = s});
        EXPECT_EQ(got.value, want.value);
        EXPECT_EQ(got.feasible, want.feasible);
        EXPECT_EQ(got.witness, want.witness);
      }
    }
  }
}

// Ones-sets of standard / NAE assignments are exactly the FVS / acyclic FVS
// of the representative graph, for monotone formulas whose every cycle
// contains a whole clause.
TEST(Oracles, OnesSetsAreFeedbackSets) {
  Rng rng(14);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const int n = rng.Between(3, 7);
    const Formula f = RandomMonotone(rng, n, rng.Between(1, 4));
    if (!IsStronglyThreeCoveredForm(f, 100000)) continue;
    ++checked;
    const Digraph g = RepresentativeGraph(f);
    for (brute::Mask s = 0; s <= brute::AllOf(n); ++s) {
      const VertexSet ids = brute::ToIds(s);
      const bool full = s == brute::AllOf(n);
      const bool std_sat = brute::Satisfies(f, s, SatMode::kStandard);
      const bool nae = brute::Satisfies(f, s, SatMode::kNae);
      EXPECT_EQ(std_sat, full || IsFvs(g, ids));
      if (full) {
        EXPECT_EQ(nae, f.clause_count() == 0);
      } else {
        EXPECT_EQ(nae, IsAcyclicFvs(g, ids));
      }
      if (nae && !ids.empty()) {
        const LROrder o = LrOrderFromNae(f, Assignment::FromOnes(n, ids));
        EXPECT_TRUE(VerifyLrOrder(g, o));
        EXPECT_EQ(o.RightSet(), ids);
      }
    }
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
}  // namespace fvskit
