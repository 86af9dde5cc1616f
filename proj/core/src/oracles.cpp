#include "fvskit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace fvskit {

const char* ToString(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::kAuto: return "auto";
    case SearchStrategy::kExhaustive: return "exhaustive";
    case SearchStrategy::kBranching: return "branching";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(int i) { return Mask{1} << i; }
constexpr Mask Low(int n) { return n >= 64 ? ~Mask{0} : Bit(n) - 1; }

int Lowest(Mask m) { return std::countr_zero(m); }
int Count(Mask m) { return std::popcount(m); }

std::vector<int> ToIds(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(Lowest(m) + 1);
  return out;
}

SearchStrategy Resolve(int size, const SearchOptions& options, const char* what) {
  const int guard = std::min(options.guard, 64);
  if (size > guard) {
    throw SizeGuardError(std::string(what) + " has " + std::to_string(size) +
                         " elements, guard is " + std::to_string(guard));
  }
  if (options.strategy != SearchStrategy::kAuto) return options.strategy;
  return size <= options.exhaustive_max ? SearchStrategy::kExhaustive
                                        : SearchStrategy::kBranching;
}

// Calls pred on every k-subset of {0..n-1} in lexicographic order of the
// sorted index sequence; stops at the first accepted mask.
template <class Pred>
bool FirstSubset(int n, int k, Pred&& pred, Mask& found) {
  if (k > n) return false;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : c) m |= Bit(i);
    if (pred(m)) {
      found = m;
      return true;
    }
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Graph searches.

class GraphSearch {
 public:
  GraphSearch(const Digraph& g, bool acyclic_side)
      : n_(g.vertex_count()), acyclic_side_(acyclic_side), succ_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 1; v <= n_; ++v) {
      for (Vertex w : g.successors(v)) succ_[v - 1] |= Bit(w - 1);
    }
    // Cycles of length 2 and 3 are cheap filters for the enumeration.
    for (Vertex v = 1; v <= n_; ++v) {
      for (Vertex w : g.successors(v)) {
        if (w > v && g.has_arc(w, v)) short_cycles_.push_back(Bit(v - 1) | Bit(w - 1));
        for (Vertex x : g.successors(w)) {
          if (v < w && v < x && g.has_arc(x, v)) {
            short_cycles_.push_back(Bit(v - 1) | Bit(w - 1) | Bit(x - 1));
          }
        }
      }
    }
  }

  OptResult Run(SearchStrategy strategy) {
    OptResult r;
    r.used = strategy;
    for (int k = 0; k < n_; ++k) {
      Mask found = 0;
      bool ok = false;
      if (strategy == SearchStrategy::kExhaustive) {
        ok = FirstSubset(n_, k, [&](Mask s) { return Accepts(s); }, found);
      } else if (Feasible(k, 0, 0)) {
        found = LexSmallest(k);
        ok = true;
      }
      if (ok) {
        r.value = k;
        r.witness = ToIds(found);
        r.feasible = true;
        return r;
      }
    }
    r.value = n_ + 1;
    r.feasible = false;
    return r;
  }

 private:
  bool Acyclic(Mask r) const {
    bool changed = true;
    while (r && changed) {
      changed = false;
      for (Mask x = r; x; x &= x - 1) {
        const int v = Lowest(x);
        if (!(succ_[v] & r)) {
          r &= ~Bit(v);
          changed = true;
        }
      }
    }
    return r == 0;
  }

  bool Accepts(Mask s) const {
    const Mask rest = Low(n_) & ~s;
    for (Mask c : short_cycles_) {
      if (!(c & s)) return false;
      if (acyclic_side_ && !(c & rest)) return false;
    }
    return Acyclic(rest) && (!acyclic_side_ || Acyclic(s));
  }

  // A shortest cycle of G[r], as a vertex list; empty when acyclic.
  std::vector<int> ShortestCycle(Mask r) const {
    std::vector<int> best;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::vector<int> queue;
    for (Mask x = r; x; x &= x - 1) {
      const int s = Lowest(x);
      Mask seen = Bit(s);
      queue.assign(1, s);
      int close = -1;
      for (std::size_t head = 0; head < queue.size() && close < 0; ++head) {
        const int u = queue[head];
        if (succ_[u] & Bit(s)) {
          close = u;
          break;
        }
        for (Mask y = succ_[u] & r & ~seen; y; y &= y - 1) {
          const int w = Lowest(y);
          seen |= Bit(w);
          parent[w] = u;
          queue.push_back(w);
        }
      }
      if (close < 0) continue;
      std::vector<int> cycle;
      for (int u = close; u != s; u = parent[u]) cycle.push_back(u);
      cycle.push_back(s);
      if (best.empty() || cycle.size() < best.size()) {
        best = std::move(cycle);
        if (best.size() == 2) break;
      }
    }
    return best;
  }

  // Vertex-disjoint cycles found greedily; each needs its own vertex in S.
  int PackingBound(Mask r) const {
    int count = 0;
    while (true) {
      const std::vector<int> c = ShortestCycle(r);
      if (c.empty()) return count;
      ++count;
      for (int v : c) r &= ~Bit(v);
    }
  }

  // Is there S with in <= S, S & out = 0, |S| <= k satisfying the target?
  bool Feasible(int k, Mask in, Mask out) const {
    if (Count(in) > k) return false;
    if (!Acyclic(out)) return false;
    if (acyclic_side_ && !Acyclic(in)) return false;
    const Mask rest = Low(n_) & ~in;
    const std::vector<int> cycle = ShortestCycle(rest);
    if (cycle.empty()) return true;
    if (Count(in) == k) return false;
    if (Count(in) + PackingBound(rest) > k) return false;
    Mask tried = 0;
    std::vector<int> order = cycle;
    std::sort(order.begin(), order.end());
    for (int v : order) {
      if (out & Bit(v)) continue;
      if (Feasible(k, in | Bit(v), out | tried)) return true;
      tried |= Bit(v);
    }
    return false;
  }

  Mask LexSmallest(int k) const {
    Mask in = 0, out = 0;
    for (int v = 0; v < n_; ++v) {
      if (Feasible(k, in | Bit(v), out)) {
        in |= Bit(v);
      } else {
        out |= Bit(v);
      }
    }
    return in;
  }

  int n_;
  bool acyclic_side_;
  std::vector<Mask> succ_;
  std::vector<Mask> short_cycles_;
};

OptResult GraphOracle(const Digraph& g, bool acyclic_side, const SearchOptions& options) {
  const SearchStrategy strategy = Resolve(g.vertex_count(), options, "graph");
  return GraphSearch(g, acyclic_side).Run(strategy);
}

// ---------------------------------------------------------------------------
// Minimum-ones searches.

struct ClauseMask {
  Mask pos = 0;
  Mask neg = 0;
};

class OnesSearch {
 public:
  OnesSearch(const Formula& f, SatMode mode) : n_(f.var_count()), nae_(mode == SatMode::kNae) {
    for (const Clause3& c : f.clauses()) {
      ClauseMask m;
      for (const Literal& l : c) (l.positive ? m.pos : m.neg) |= Bit(l.var - 1);
      clauses_.push_back(m);
    }
  }

  OptResult Run(SearchStrategy strategy) {
    OptResult r;
    r.used = strategy;
    for (int k = 0; k <= n_; ++k) {
      Mask found = 0;
      bool ok = false;
      if (strategy == SearchStrategy::kExhaustive) {
        ok = FirstSubset(n_, k, [&](Mask s) { return Satisfies(s); }, found);
      } else if (Feasible(k, 0, 0)) {
        found = LexSmallest(k);
        ok = true;
      }
      if (ok) {
        r.value = k;
        r.witness = ToIds(found);
        r.feasible = true;
        return r;
      }
      if (strategy == SearchStrategy::kBranching && k == 0 && !Feasible(n_, 0, 0)) break;
    }
    r.value = n_ + 1;
    r.feasible = false;
    return r;
  }

 private:
  bool Satisfies(Mask s) const {
    for (const ClauseMask& c : clauses_) {
      const bool has_true = (s & c.pos) || (~s & c.neg);
      if (!has_true) return false;
      if (nae_ && !((~s & c.pos) || (s & c.neg))) return false;
    }
    return true;
  }

  // Partial assignment: `set` are decided variables, `ones` those set true.
  bool Feasible(int k, Mask set, Mask ones) const {
    if (Count(ones) > k) return false;
    const Mask zeros = set & ~ones;
    const ClauseMask* open = nullptr;
    bool open_needs_true = false;
    std::vector<Mask> need_one;
    for (const ClauseMask& c : clauses_) {
      const Mask undecided = (c.pos | c.neg) & ~set;
      const bool has_true = (ones & c.pos) || (zeros & c.neg);
      const bool has_false = (zeros & c.pos) || (ones & c.neg);
      const bool done = has_true && (!nae_ || has_false);
      if (done) continue;
      if (!undecided) return false;
      if (!open) {
        open = &c;
        open_needs_true = !has_true;
      }
      // Without a true literal and no negative literal left open, the clause
      // forces one more variable to true.
      if (!has_true && !(undecided & c.neg)) need_one.push_back(undecided & c.pos);
    }
    if (!open) return true;
    if (Count(ones) + PackingBound(need_one) > k) return false;

    // Branch on which undecided literal is the first one taking the missing
    // value; literals before it take the other value.
    const Mask undecided = (open->pos | open->neg) & ~set;
    Mask before_set = 0, before_ones = 0;
    for (Mask x = undecided; x; x &= x - 1) {
      const Mask b = Bit(Lowest(x));
      const bool positive = open->pos & b;
      // Value making this literal true (or false when a false one is missing).
      const bool value = open_needs_true ? positive : !positive;
      if (Feasible(k, set | before_set | b, ones | before_ones | (value ? b : 0))) return true;
      before_set |= b;
      if (!value) before_ones |= b;
    }
    return false;
  }

  static int PackingBound(std::vector<Mask>& need) {
    std::sort(need.begin(), need.end(),
              [](Mask a, Mask b) { return Count(a) < Count(b); });
    Mask used = 0;
    int count = 0;
    for (Mask m : need) {
      if (m & used) continue;
      used |= m;
      ++count;
    }
    return count;
  }

  Mask LexSmallest(int k) const {
    Mask set = 0, ones = 0;
    for (int v = 0; v < n_; ++v) {
      if (Feasible(k, set | Bit(v), ones | Bit(v))) {
        ones |= Bit(v);
      }
      set |= Bit(v);
    }
    return ones;
  }

  int n_;
  bool nae_;
  std::vector<ClauseMask> clauses_;
};

}  // namespace

OptResult BruteMfvs(const Digraph& g, const SearchOptions& options) {
  return GraphOracle(g, false, options);
}

OptResult BruteAmfvs(const Digraph& g, const SearchOptions& options) {
  return GraphOracle(g, true, options);
}

OptResult BruteMinOnes(const Formula& f, SatMode mode, const SearchOptions& options) {
  const SearchStrategy strategy = Resolve(f.var_count(), options, "formula");
  return OnesSearch(f, mode).Run(strategy);
}

}  // namespace fvskit
