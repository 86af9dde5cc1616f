#include "fvskit/c1p.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fvskit/random.hpp"

namespace fvskit {

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

std::vector<int> BinaryMatrix::RowOnes(int r) const {
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c) {
    if (at(r, c)) out.push_back(c);
  }
  return out;
}

BinaryMatrix ReadMatrix(std::istream& in) {
  int rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw FormatError("expected '<rows> <cols>' header");
  }
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw FormatError("missing row " + std::to_string(r + 1));
    if (static_cast<int>(line.size()) != cols) {
      throw FormatError("row " + std::to_string(r + 1) + " has " + std::to_string(line.size()) +
                        " entries, expected " + std::to_string(cols));
    }
    for (int c = 0; c < cols; ++c) {
      if (line[c] != '0' && line[c] != '1') {
        throw FormatError("row " + std::to_string(r + 1) + " contains '" + line[c] + "'");
      }
      m.set(r, c, line[c] == '1');
    }
  }
  std::string extra;
  if (in >> extra) throw FormatError("trailing data after the last row");
  return m;
}

BinaryMatrix ParseMatrix(const std::string& text) {
  std::istringstream in(text);
  return ReadMatrix(in);
}

void WriteMatrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (m.at(r, c) ? '1' : '0');
    out << '\n';
  }
}

BinaryMatrix AdjacencyMatrix(const Digraph& g) {
  BinaryMatrix m(g.vertex_count(), g.vertex_count());
  for (const Arc& a : g.arcs()) m.set(a.from - 1, a.to - 1, true);
  return m;
}

bool IsConsecutiveUnder(const BinaryMatrix& m, const std::vector<int>& column_order) {
  if (static_cast<int>(column_order.size()) != m.cols()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m.cols()), false);
  for (int c : column_order) {
    if (c < 0 || c >= m.cols() || seen[c]) return false;
    seen[c] = true;
  }
  for (int r = 0; r < m.rows(); ++r) {
    int state = 0;  // 0 before the block, 1 inside, 2 after
    for (int c : column_order) {
      const bool one = m.at(r, c);
      if (one && state == 2) return false;
      if (one) state = 1;
      if (!one && state == 1) state = 2;
    }
  }
  return true;
}

namespace {

using Cols = std::vector<int>;  // sorted column indices

bool Intersects(const Cols& a, const Cols& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

bool Subset(const Cols& a, const Cols& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool Overlap(const Cols& a, const Cols& b) {
  return Intersects(a, b) && !Subset(a, b) && !Subset(b, a);
}

// Ordered partition of the columns covered by one overlap component.
class Arrangement {
 public:
  Arrangement(int cols, const Cols& first) : class_of_(static_cast<std::size_t>(cols), -1) {
    classes_.push_back(first);
    Reindex();
  }

  // Adds a row overlapping some row already placed. False when no
  // consecutive arrangement exists.
  bool Insert(const Cols& x) {
    const int k = static_cast<int>(classes_.size());
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    Cols fresh;
    for (int c : x) {
      if (class_of_[c] < 0) {
        fresh.push_back(c);
      } else {
        ++count[class_of_[c]];
      }
    }
    int lo = -1, hi = -1;
    for (int i = 0; i < k; ++i) {
      if (count[i] > 0) {
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    if (lo < 0) throw std::logic_error("row does not meet the arrangement");
    auto full = [&](int i) { return count[i] == static_cast<int>(classes_[i].size()); };
    for (int i = lo + 1; i < hi; ++i) {
      if (!full(i)) return false;
    }

    if (fresh.empty()) {
      if (lo == hi) throw std::logic_error("row nested in a single class");
      if (!full(hi)) SplitAt(hi, x, /*inside_first=*/true);
      if (!full(lo)) SplitAt(lo, x, /*inside_first=*/false);
    } else {
      const bool right = hi == k - 1 && (lo == hi || full(hi));
      const bool left = lo == 0 && (lo == hi || full(lo));
      if (right) {
        if (!full(lo)) SplitAt(lo, x, false);
        classes_.push_back(fresh);
      } else if (left) {
        if (!full(hi)) SplitAt(hi, x, true);
        classes_.insert(classes_.begin(), fresh);
      } else {
        return false;
      }
    }
    Reindex();
    return true;
  }

  const std::vector<Cols>& classes() const { return classes_; }
  int ClassOf(int c) const { return class_of_[c]; }

 private:
  void SplitAt(int i, const Cols& x, bool inside_first) {
    Cols in, out;
    for (int c : classes_[i]) (std::binary_search(x.begin(), x.end(), c) ? in : out).push_back(c);
    classes_[i] = inside_first ? in : out;
    classes_.insert(classes_.begin() + i + 1, inside_first ? out : in);
  }

  void Reindex() {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      for (int c : classes_[i]) class_of_[c] = static_cast<int>(i);
    }
  }

  std::vector<Cols> classes_;
  std::vector<int> class_of_;
};

struct Component {
  std::vector<Cols> classes;
  std::vector<int> class_of;  // by column, -1 outside
  Cols cover;
  bool single_row = false;
  int parent = -1;
  int parent_class = -1;
  std::vector<std::vector<int>> children;  // per class
};

struct Attempt {
  std::vector<int> order;
  std::vector<int> failing_rows;  // indices into the input list when no order
  bool ok = false;
};

// rows[i] lists the columns holding a one in row i.
Attempt Recognize(int cols, const std::vector<Cols>& rows) {
  Attempt result;
  // Rows with fewer than two ones never constrain; identical rows count once.
  std::vector<int> keep;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() < 2) continue;
    bool dup = false;
    for (int j : keep) {
      if (rows[j] == rows[i]) dup = true;
    }
    if (!dup) keep.push_back(static_cast<int>(i));
  }

  std::vector<Component> comps;
  std::vector<bool> placed(rows.size(), false);
  for (int start : keep) {
    if (placed[start]) continue;
    placed[start] = true;
    Arrangement arr(cols, rows[start]);
    std::vector<int> members{start};
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (int j : keep) {
        if (placed[j] || !Overlap(rows[members[q]], rows[j])) continue;
        placed[j] = true;
        if (!arr.Insert(rows[j])) {
          members.push_back(j);
          std::sort(members.begin(), members.end());
          result.failing_rows = members;
          return result;
        }
        members.push_back(j);
      }
    }
    Component comp;
    comp.classes = arr.classes();
    comp.single_row = members.size() == 1;
    comp.class_of.assign(static_cast<std::size_t>(cols), -1);
    for (std::size_t i = 0; i < comp.classes.size(); ++i) {
      for (int c : comp.classes[i]) {
        comp.class_of[c] = static_cast<int>(i);
        comp.cover.push_back(c);
      }
    }
    std::sort(comp.cover.begin(), comp.cover.end());
    comp.children.resize(comp.classes.size());
    comps.push_back(std::move(comp));
  }

  // Parent of B: the component with the smallest class containing B's cover;
  // on equal size the single-row component is the inner one.
  for (std::size_t b = 0; b < comps.size(); ++b) {
    std::size_t best_size = 0;
    for (std::size_t a = 0; a < comps.size(); ++a) {
      if (a == b) continue;
      const int cls = comps[a].class_of[comps[b].cover.front()];
      if (cls < 0) continue;
      bool inside = true;
      for (int c : comps[b].cover) {
        if (comps[a].class_of[c] != cls) inside = false;
      }
      if (!inside) continue;
      const std::size_t size = comps[a].classes[cls].size();
      const bool better =
          comps[b].parent < 0 || size < best_size ||
          (size == best_size && comps[a].single_row && !comps[comps[b].parent].single_row);
      if (better) {
        comps[b].parent = static_cast<int>(a);
        comps[b].parent_class = cls;
        best_size = size;
      }
    }
  }
  std::vector<int> roots;
  for (std::size_t b = 0; b < comps.size(); ++b) {
    if (comps[b].parent < 0) {
      roots.push_back(static_cast<int>(b));
    } else {
      comps[comps[b].parent].children[comps[b].parent_class].push_back(static_cast<int>(b));
    }
  }
  auto by_first = [&](int x, int y) { return comps[x].cover.front() < comps[y].cover.front(); };

  std::vector<bool> emitted(static_cast<std::size_t>(cols), false);
  auto expand = [&](auto&& self, int id) -> void {
    Component& comp = comps[id];
    for (std::size_t i = 0; i < comp.classes.size(); ++i) {
      std::sort(comp.children[i].begin(), comp.children[i].end(), by_first);
      for (int child : comp.children[i]) self(self, child);
      for (int c : comp.classes[i]) {
        if (!emitted[c]) {
          emitted[c] = true;
          result.order.push_back(c);
        }
      }
    }
  };
  std::sort(roots.begin(), roots.end(), by_first);
  for (int r : roots) expand(expand, r);
  for (int c = 0; c < cols; ++c) {
    if (!emitted[c]) result.order.push_back(c);
  }
  result.ok = true;
  return result;
}

}  // namespace

std::vector<int> C1pGoodOrder(const BinaryMatrix& m) {
  std::vector<Cols> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.RowOnes(r));
  Attempt attempt = Recognize(m.cols(), rows);
  if (attempt.ok) {
    if (!IsConsecutiveUnder(m, attempt.order)) {
      throw std::logic_error("consecutive-ones certificate failed verification");
    }
    return attempt.order;
  }
  // Shrink the failing rows to a minimal non-C1P subset.
  std::vector<int> witness = attempt.failing_rows;
  for (std::size_t i = 0; i < witness.size();) {
    std::vector<Cols> subset;
    for (std::size_t j = 0; j < witness.size(); ++j) {
      if (j != i) subset.push_back(rows[witness[j]]);
    }
    if (!Recognize(m.cols(), subset).ok) {
      witness.erase(witness.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::ostringstream what;
  what << "no consecutive-ones order; rows";
  for (int r : witness) what << ' ' << r + 1;
  what << " conflict";
  throw NotC1PError(what.str(), witness);
}

LROrder LrOrderFromC1p(const Digraph& g) {
  const std::vector<int> cols = C1pGoodOrder(AdjacencyMatrix(g));
  const int n = g.vertex_count();
  LROrder o;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    o.order.push_back(cols[i] + 1);
    pos[cols[i] + 1] = static_cast<int>(i);
  }
  o.side.assign(static_cast<std::size_t>(n) + 1, Side::kLeft);
  for (Vertex v = 1; v <= n; ++v) {
    const auto& succ = g.successors(v);
    if (!succ.empty() && pos[succ.front()] > pos[v]) o.side[v] = Side::kRight;
  }
  return o;
}

Rational Rational::Of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  constexpr std::int64_t kBound = std::int64_t{1} << 31;
  if (num <= -kBound || num >= kBound || den <= -kBound || den >= kBound) {
    throw PreconditionError("rational component out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Components are bounded by 2^31, so the cross products fit.
  return a.num * b.den <=> b.num * a.den;
}

std::string ToString(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Digraph IntervalPointDigraph(const IntervalPointFamily& family) {
  const int n = static_cast<int>(family.size());
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) {
    const IntervalPoint& f = family[v - 1];
    if (f.hi < f.lo) throw PreconditionError("interval of vertex " + std::to_string(v) + " is empty");
    for (int w = 1; w <= n; ++w) {
      const Rational t = family[w - 1].point;
      if (f.lo <= t && t <= f.hi) {
        if (v == w) {
          throw LoopError("point of vertex " + std::to_string(v) + " lies in its own interval");
        }
        arcs.push_back({v, w});
      }
    }
  }
  return Digraph(n, arcs);
}

IntervalPointFamily RandomIntervalPointFamily(std::uint64_t seed, int n) {
  if (n < 0) throw PreconditionError("negative size");
  Rng rng(seed);
  const int top = 4 * n;  // grid of halves on [0, 2n]
  IntervalPointFamily family;
  for (int v = 0; v < n; ++v) {
    const int lo = rng.Between(0, top);
    const int hi = std::min(top, lo + rng.Between(0, 2 * n));
    int t;
    do {
      t = rng.Between(0, top);
    } while (lo <= t && t <= hi);
    family.push_back({Rational::Of(lo, 2), Rational::Of(hi, 2), Rational::Of(t, 2)});
  }
  return family;
}

}  // namespace fvskit
