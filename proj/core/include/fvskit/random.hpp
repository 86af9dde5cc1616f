#pragma once

// Seeded generators. All randomness comes from std::mt19937_64 seeded with
// the 64-bit seed as given; bounded integers use rejection sampling on the raw
// 64-bit outputs (draw x, accept when x < 2^64 - (2^64 mod b), return x mod b)
// so sequences are reproducible across standard libraries.

#include <cstdint>
#include <random>

#include "fvskit/digraph.hpp"
#include "fvskit/sat.hpp"

namespace fvskit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  // Uniform on [lo, hi].
  int Between(int lo, int hi);
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// m clauses over n >= 3 variables, three distinct variables per clause in
// draw order, independent fair polarities.
Formula RandomThreeSat(Rng& rng, int n, int m);

// A random spanning arborescence rooted at 1 (each vertex v > 1 gets a parent
// among earlier vertices of a random permutation) plus up to `extra_arcs`
// further random arcs. Always a flow graph with source 1.
Digraph RandomFlowGraph(Rng& rng, int n, int extra_arcs);

}  // namespace fvskit
