#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "brute.hpp"
#include "fvskit/oracles.hpp"
#include "fvskit/random.hpp"
#include "fvskit/reduction.hpp"

namespace fvskit {
namespace {

Literal L(int x) { return x > 0 ? Literal::Pos(x) : Literal::Neg(-x); }
Clause3 C(int a, int b, int c) { return {L(a), L(b), L(c)}; }

bool StandardSatisfiable(const Formula& f) {
  return brute::MinOnes(f, SatMode::kStandard).feasible;
}

TEST(Normalize, Examples) {
  const Formula plain(3, {C(1, -2, 3)});
  EXPECT_EQ(NormalizeClauses(plain), plain);

  const Formula dup = NormalizeClauses(Formula::AllowingRepeats(2, {C(1, 1, 2)}));
  EXPECT_EQ(dup, Formula(3, {C(1, 2, 3), C(1, 2, -3)}));

  const Formula taut = NormalizeClauses(Formula::AllowingRepeats(2, {C(1, -1, 2)}));
  EXPECT_EQ(taut.clause_count(), 0u);
  EXPECT_EQ(taut.var_count(), 2);

  const Formula triple = NormalizeClauses(Formula::AllowingRepeats(1, {C(-1, -1, -1)}));
  EXPECT_EQ(triple.clause_count(), 4u);
  EXPECT_FALSE(triple.has_repeated_variables());
}

TEST(Normalize, FreshNamesFollowInputNames) {
  Formula f = Formula::AllowingRepeats(2, {C(2, 1, 2)});
  f.set_var_names({"p", "q"});
  const Formula out = NormalizeClauses(f);
  EXPECT_EQ(out.var_names(), (std::vector<std::string>{"p", "q", "u3"}));
}

// Every clause over two variables with repeats, in pairs: satisfiability is
// preserved and the output never repeats a variable.
TEST(Normalize, PreservesSatisfiability) {
  std::vector<Clause3> all;
  for (int a : {1, -1, 2, -2}) {
    for (int b : {1, -1, 2, -2}) {
      for (int c : {1, -1, 2, -2}) all.push_back(C(a, b, c));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      for (std::size_t k = j; k < all.size(); k += 7) {
        const Formula in = Formula::AllowingRepeats(2, {all[i], all[j], all[k]});
        const Formula out = NormalizeClauses(in);
        ASSERT_FALSE(out.has_repeated_variables());
        EXPECT_EQ(StandardSatisfiable(in), StandardSatisfiable(out));
      }
    }
  }
}

TEST(ToMnae, SingleClauseLayout) {
  const MnaeInstance inst = ToMnae(Formula(3, {C(1, -2, 3)}));
  const Formula& f = inst.formula;
  const VarMap& m = inst.map;
  EXPECT_EQ(f.var_count(), 21);
  EXPECT_EQ(f.clause_count(), 18u);
  EXPECT_TRUE(IsMonotone(f));
  const auto& cl = f.clauses();
  EXPECT_EQ(cl[0], C(m.y[0].alpha, m.y[1].beta, m.w[0].alpha));
  EXPECT_EQ(cl[1], C(m.w[0].beta, m.y[2].alpha, m.z));
  EXPECT_EQ(m.z, 21);
  EXPECT_EQ(m.roles[0].role, ClauseRole::kBasic);
  EXPECT_EQ(m.roles[1].role, ClauseRole::kBasicPrime);
  EXPECT_EQ(m.roles[2].role, ClauseRole::kConsistency1);
  EXPECT_EQ(m.roles[2].index, 1);
  EXPECT_EQ(m.roles[17].role, ClauseRole::kConsistency4);
  EXPECT_EQ(m.roles[17].index, 4);
  const GadgetVars& g = m.y[1];
  EXPECT_EQ(cl[6], C(g.alpha, g.beta, g.a));
  EXPECT_EQ(cl[9], C(g.a, g.b, g.c));
}

TEST(ToMnae, SortsLiteralsByVariable) {
  const MnaeInstance sorted = ToMnae(Formula(3, {C(1, -2, 3)}));
  const MnaeInstance shuffled = ToMnae(Formula(3, {C(3, 1, -2)}));
  EXPECT_EQ(sorted.formula, shuffled.formula);
  EXPECT_EQ(shuffled.map.sorted_from[0], (std::array<int, 3>{1, 2, 0}));
}

TEST(ToMnae, Sizes) {
  const MnaeInstance empty = ToMnae(Formula(1, {}));
  EXPECT_EQ(empty.formula.var_count(), 6);
  EXPECT_EQ(empty.formula.clause_count(), 4u);
  const MnaeInstance two = ToMnae(Formula(3, {C(1, 2, 3), C(1, 2, -3)}));
  EXPECT_EQ(two.formula.var_count(), 26);
  EXPECT_EQ(two.formula.clause_count(), 24u);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.Between(3, 9);
    const int m = rng.Between(0, 9);
    const MnaeInstance inst = ToMnae(RandomThreeSat(rng, n, m));
    EXPECT_EQ(inst.formula.var_count(), 5 * (n + m) + 1);
    EXPECT_EQ(inst.formula.clause_count(), static_cast<std::size_t>(2 * m + 4 * (n + m)));
  }
  EXPECT_THROW(ToMnae(Formula::AllowingRepeats(2, {C(1, 1, 2)})), PreconditionError);
}

TEST(ToMnae, RepresentativeGraphIsOrientedAndCovered) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const MnaeInstance inst = ToMnae(RandomThreeSat(rng, rng.Between(3, 4), rng.Between(1, 3)));
    const Digraph g = RepresentativeGraph(inst.formula);
    for (const Arc& a : g.arcs()) EXPECT_FALSE(g.has_arc(a.to, a.from));
    EXPECT_TRUE(IsStronglyThreeCoveredForm(inst.formula, 1'000'000));
    EXPECT_TRUE(IsThreeCycleDigraph(g, 1'000'000));
  }
}

TEST(TwoChoice, DValues) {
  EXPECT_EQ(MakeTwoChoiceInstance(Formula(3, {C(1, 2, 3)})).d, 8);
  EXPECT_EQ(MakeTwoChoiceInstance(Formula(1, {})).d, 2);
  const Formula une(3, {C(1, 2, 3), C(1, 2, -3), C(1, -2, 3), C(1, -2, -3)});
  const TwoChoiceInstance t = MakeTwoChoiceInstance(une);
  EXPECT_EQ(t.formula.var_count(), 36);
  EXPECT_EQ(t.d, 14);
}

TEST(Lift, SingleClauseWitness) {
  const Formula c(3, {C(1, 2, 3)});
  const MnaeInstance inst = ToMnae(c);
  const Assignment a = Assignment::FromValues({true, false, false});
  const Assignment lifted = LiftAssignment(c, inst.map, a, false);
  EXPECT_TRUE(Evaluate(inst.formula, lifted, SatMode::kNae).satisfied);
  EXPECT_EQ(lifted.OnesCount(), 8);
  EXPECT_EQ(ProjectAssignment(inst.map, lifted), a);
}

TEST(Lift, EmptyFormula) {
  const Formula c(1, {});
  const MnaeInstance inst = ToMnae(c);
  for (bool x : {false, true}) {
    const Assignment lifted = LiftAssignment(c, inst.map, Assignment::FromValues({x}), false);
    EXPECT_TRUE(Evaluate(inst.formula, lifted, SatMode::kNae).satisfied);
    EXPECT_EQ(lifted[inst.map.y[0].alpha], x);
    EXPECT_NE(lifted[inst.map.y[0].beta], x);
    EXPECT_TRUE(lifted[inst.map.y[0].a]);
  }
}

// Every assignment of every 2-clause formula over 3 variables: the lift
// succeeds exactly for standard witnesses (for either z), yields D or D+1
// ones, and projects back to the input.
TEST(Lift, ExactlyStandardWitnesses) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Formula c = RandomThreeSat(rng, 3, rng.Between(1, 2));
    const TwoChoiceInstance t = MakeTwoChoiceInstance(c);
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      const Assignment a = Assignment::FromOnes(3, brute::ToIds(mask));
      const bool witness = Evaluate(c, a, SatMode::kStandard).satisfied;
      for (bool z : {false, true}) {
        if (!witness) {
          EXPECT_THROW(LiftAssignment(c, t.map, a, z), LiftFailed);
          continue;
        }
        const Assignment lifted = LiftAssignment(c, t.map, a, z);
        EXPECT_TRUE(Evaluate(t.formula, lifted, SatMode::kNae).satisfied);
        EXPECT_EQ(lifted.OnesCount(), t.d + (z ? 1 : 0));
        EXPECT_EQ(ProjectAssignment(t.map, lifted), a);
      }
    }
  }
}

TEST(Project, AnyNaeWitnessSatisfiesSource) {
  const Formula c(3, {C(1, 2, 3)});
  const MnaeInstance inst = ToMnae(c);
  const OptResult best = BruteMinOnes(inst.formula, SatMode::kNae,
                                      {.strategy = SearchStrategy::kBranching});
  ASSERT_TRUE(best.feasible);
  EXPECT_EQ(best.value, 8);
  const Assignment af = Assignment::FromOnes(inst.formula.var_count(), best.witness);
  EXPECT_FALSE(af[inst.map.z]);
  const Assignment x = ProjectAssignment(inst.map, af);
  EXPECT_TRUE(Evaluate(c, x, SatMode::kStandard).satisfied);
  for (Var u = 1; u <= 3; ++u) EXPECT_EQ(x[u], af[inst.map.y[static_cast<std::size_t>(u) - 1].alpha]);
  // Complementing every variable keeps an NAE witness; z flips with it.
  Assignment flipped(af.var_count());
  for (Var v = 1; v <= af.var_count(); ++v) flipped.Set(v, !af[v]);
  EXPECT_TRUE(Evaluate(inst.formula, flipped, SatMode::kNae).satisfied);
  EXPECT_EQ(ProjectAssignment(inst.map, flipped), x);
}

TEST(Project, MinimumWitnessStructure) {
  const Formula c(3, {C(1, -2, 3)});
  const MnaeInstance inst = ToMnae(c);
  const OptResult best = BruteMinOnes(inst.formula, SatMode::kNae,
                                      {.strategy = SearchStrategy::kBranching});
  const Assignment af = Assignment::FromOnes(inst.formula.var_count(), best.witness);
  auto check = [&](const GadgetVars& g) {
    EXPECT_NE(af[g.alpha], af[g.beta]);
    EXPECT_EQ(int{af[g.a]} + int{af[g.b]} + int{af[g.c]}, 1);
  };
  for (const GadgetVars& g : inst.map.y) check(g);
  for (const GadgetVars& g : inst.map.w) check(g);
  EXPECT_FALSE(af[inst.map.z]);
}

TEST(VarMap, SidecarText) {
  const MnaeInstance inst = ToMnae(Formula(3, {C(1, -2, 3)}));
  std::ostringstream out;
  WriteVarMap(out, inst.map);
  EXPECT_EQ(out.str(),
            "var 1 alpha 1 beta 2 a 3 b 4 c 5\n"
            "var 2 alpha 6 beta 7 a 8 b 9 c 10\n"
            "var 3 alpha 11 beta 12 a 13 b 14 c 15\n"
            "w 1 alpha 16 beta 17 a 18 b 19 c 20\n"
            "clause 1 F 1 F' 2\n"
            "z 21\n");
  EXPECT_STREQ(ToString(ClauseRole::kBasicPrime), "F'");
}

}  // namespace
}  // namespace fvskit
