#pragma once

// Consecutive-ones property for rows, and the digraphs whose adjacency
// matrices have it (interval-point digraphs).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fvskit/digraph.hpp"
#include "fvskit/fvs.hpp"

namespace fvskit {

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool at(int r, int c) const { return cells_.at(Index(r, c)) != 0; }
  void set(int r, int c, bool value) { cells_.at(Index(r, c)) = value ? 1 : 0; }
  // Columns holding a one in row r, ascending.
  std::vector<int> RowOnes(int r) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

// `<rows> <cols>` then one 0/1 string per row. Throws FormatError.
BinaryMatrix ReadMatrix(std::istream& in);
BinaryMatrix ParseMatrix(const std::string& text);
void WriteMatrix(std::ostream& out, const BinaryMatrix& m);

// Row v-1 / column w-1 is one iff v->w.
BinaryMatrix AdjacencyMatrix(const Digraph& g);

// Every row's ones are contiguous when columns are read in `column_order`
// (a permutation of 0..cols-1).
bool IsConsecutiveUnder(const BinaryMatrix& m, const std::vector<int>& column_order);

// A column permutation making every row consecutive. Rows are grouped into
// overlap components (rows that intersect without nesting); each component's
// column order is forced up to reversal and is built by refining an ordered
// partition one row at a time; components are then nested by containment.
// The result is re-verified before it is returned. Throws NotC1PError with a
// minimal set of rows that is not C1P by itself.
std::vector<int> C1pGoodOrder(const BinaryMatrix& m);

// Applies the good order of the adjacency matrix to the vertices; a vertex
// is Right when its successors follow it and Left otherwise (including no
// successors). Throws NotC1PError.
LROrder LrOrderFromC1p(const Digraph& g);

// Exact rational number with positive denominator, kept reduced.
// Components must stay below 2^31 in magnitude.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Of(std::int64_t num, std::int64_t den = 1);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

std::string ToString(const Rational& r);

struct IntervalPoint {
  Rational lo;  // source interval [lo, hi]
  Rational hi;
  Rational point;
};

using IntervalPointFamily = std::vector<IntervalPoint>;  // entry v-1 for vertex v

// Arc v->w iff point of w lies in the interval of v. Throws LoopError when a
// vertex's point lies in its own interval, PreconditionError when lo > hi.
Digraph IntervalPointDigraph(const IntervalPointFamily& family);

// n vertices; endpoints and points are multiples of 1/2 in [0, 2n], interval
// lengths at most n, points redrawn until they leave their own interval.
IntervalPointFamily RandomIntervalPointFamily(std::uint64_t seed, int n);

}  // namespace fvskit
