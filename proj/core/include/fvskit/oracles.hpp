#pragma once

// Exact optimum oracles:
//   mfvs(G)   minimum |S|, S a proper subset with G[V \ S] acyclic
//   amfvs(G)  same, additionally G[S] acyclic
//   t_s(F)    fewest true variables over standard-satisfying assignments
//   t_NAE(F)  same over NAE-satisfying assignments
// Infeasible instances report value = |V| + 1 (resp. var_count + 1) and
// feasible = false. Witnesses are the lexicographically smallest optimal
// sets (compared as sorted id sequences).
//
// Two exact strategies: full enumeration by increasing cardinality, and a
// branching search with iterative deepening on the bound. kAuto picks
// enumeration up to `exhaustive_max` elements.

#include <vector>

#include "fvskit/digraph.hpp"
#include "fvskit/sat.hpp"

namespace fvskit {

enum class SearchStrategy { kAuto, kExhaustive, kBranching };

const char* ToString(SearchStrategy s);

struct SearchOptions {
  // Instances with more vertices/variables than this throw SizeGuardError.
  // Capped at 64.
  int guard = 64;
  // kAuto uses enumeration up to this many vertices/variables.
  int exhaustive_max = 26;
  SearchStrategy strategy = SearchStrategy::kAuto;
};

struct OptResult {
  int value = 0;
  std::vector<int> witness;  // sorted ids; empty when infeasible
  bool feasible = false;
  bool exhausted = true;  // the search space was fully decided
  SearchStrategy used = SearchStrategy::kExhaustive;
};

OptResult BruteMfvs(const Digraph& g, const SearchOptions& options = {});
OptResult BruteAmfvs(const Digraph& g, const SearchOptions& options = {});
OptResult BruteMinOnes(const Formula& f, SatMode mode, const SearchOptions& options = {});

}  // namespace fvskit
