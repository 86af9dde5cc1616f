#include "fvskit/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fvskit {

std::uint64_t Rng::Uniform(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound not exceeding 2^64, minus one.
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x > limit);
  return x % bound;
}

int Rng::Between(int lo, int hi) {
  if (hi < lo) throw PreconditionError("empty range");
  return lo + static_cast<int>(Uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

Formula RandomThreeSat(Rng& rng, int n, int m) {
  if (n < 3) throw PreconditionError("need at least three variables");
  std::vector<Clause3> clauses;
  for (int r = 0; r < m; ++r) {
    Clause3 c;
    for (int t = 0; t < 3; ++t) {
      Var v;
      do {
        v = rng.Between(1, n);
      } while ((t > 0 && c[0].var == v) || (t > 1 && c[1].var == v));
      c[t] = {v, rng.Coin()};
    }
    clauses.push_back(c);
  }
  return Formula(n, std::move(clauses));
}

Digraph RandomFlowGraph(Rng& rng, int n, int extra_arcs) {
  if (n < 1) throw PreconditionError("need at least one vertex");
  std::vector<Vertex> perm(static_cast<std::size_t>(n) - 1);
  std::iota(perm.begin(), perm.end(), 2);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.Uniform(i)]);
  }
  perm.insert(perm.begin(), 1);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < perm.size(); ++i) {
    arcs.push_back({perm[rng.Uniform(i)], perm[i]});
  }
  if (n > 1) {
    for (int e = 0; e < extra_arcs; ++e) {
      const Vertex u = rng.Between(1, n);
      const Vertex v = rng.Between(1, n);
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::FromArcsDedup(n, arcs);
}

}  // namespace fvskit
