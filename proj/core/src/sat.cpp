#include "fvskit/sat.hpp"

#include <algorithm>

namespace fvskit {

namespace {

void CheckRange(int var_count, const std::vector<Clause3>& clauses) {
  if (var_count < 0) throw PreconditionError("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (const Literal& l : clauses[i]) {
      if (l.var < 1 || l.var > var_count) {
        throw PreconditionError("clause " + std::to_string(i) + " references variable " +
                                std::to_string(l.var) + " outside 1.." +
                                std::to_string(var_count));
      }
    }
  }
}

bool RepeatsVariable(const Clause3& c) {
  return c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var;
}

}  // namespace

Formula::Formula(int var_count, std::vector<Clause3> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  CheckRange(var_count_, clauses_);
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (RepeatsVariable(clauses_[i])) {
      throw RepeatedVariableError("clause " + std::to_string(i) + " repeats a variable");
    }
  }
}

Formula Formula::AllowingRepeats(int var_count, std::vector<Clause3> clauses) {
  CheckRange(var_count, clauses);
  Formula f;
  f.var_count_ = var_count;
  f.clauses_ = std::move(clauses);
  return f;
}

bool Formula::has_repeated_variables() const {
  return std::any_of(clauses_.begin(), clauses_.end(), RepeatsVariable);
}

void Formula::set_var_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(var_count_)) {
    throw PreconditionError("name table size does not match variable count");
  }
  names_ = std::move(names);
}

std::string Formula::VarName(Var v) const {
  if (!names_.empty()) return names_.at(static_cast<std::size_t>(v) - 1);
  return "x" + std::to_string(v);
}

Assignment Assignment::FromOnes(int var_count, const std::vector<Var>& ones) {
  Assignment a(var_count);
  for (Var v : ones) {
    if (v < 1 || v > var_count) throw PreconditionError("variable out of range");
    a.Set(v, true);
  }
  return a;
}

Assignment Assignment::FromValues(const std::vector<bool>& values) {
  Assignment a(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) a.Set(static_cast<Var>(i) + 1, values[i]);
  return a;
}

std::vector<Var> Assignment::Ones() const {
  std::vector<Var> out;
  for (Var v = 1; v <= var_count(); ++v) {
    if (values_[v]) out.push_back(v);
  }
  return out;
}

int Assignment::OnesCount() const {
  return static_cast<int>(std::count(values_.begin() + 1, values_.end(), true));
}

const char* ToString(SatMode mode) {
  return mode == SatMode::kStandard ? "standard" : "nae";
}

EvalResult Evaluate(const Formula& f, const Assignment& a, SatMode mode) {
  if (a.var_count() < f.var_count()) {
    throw PreconditionError("assignment does not cover every variable");
  }
  EvalResult result;
  for (std::size_t i = 0; i < f.clauses().size(); ++i) {
    int trues = 0;
    for (const Literal& l : f.clauses()[i]) trues += a.Holds(l) ? 1 : 0;
    const bool ok = mode == SatMode::kStandard ? trues > 0 : (trues > 0 && trues < 3);
    if (!ok) result.failing_clauses.push_back(i);
  }
  result.satisfied = result.failing_clauses.empty();
  return result;
}

bool IsMonotone(const Formula& f) {
  return std::all_of(f.clauses().begin(), f.clauses().end(), [](const Clause3& c) {
    return c[0].positive && c[1].positive && c[2].positive;
  });
}

Digraph RepresentativeGraph(const Formula& f) {
  if (!IsMonotone(f)) throw NotMonotoneError("representative graph needs a monotone formula");
  std::vector<Arc> arcs;
  arcs.reserve(3 * f.clause_count());
  for (const Clause3& c : f.clauses()) {
    arcs.push_back({c[0].var, c[1].var});
    arcs.push_back({c[1].var, c[2].var});
    arcs.push_back({c[2].var, c[0].var});
  }
  return Digraph::FromArcsDedup(f.var_count(), arcs);
}

namespace {

// `by_vertex` indexes each triple under its first vertex.
bool CycleContainsTriple(std::span<const Vertex> cycle, std::vector<bool>& mark,
                         const std::vector<std::vector<std::array<Vertex, 3>>>& by_vertex) {
  for (Vertex v : cycle) mark[v] = true;
  bool found = false;
  for (Vertex v : cycle) {
    for (const auto& t : by_vertex[v]) {
      if (mark[t[0]] && mark[t[1]] && mark[t[2]]) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  for (Vertex v : cycle) mark[v] = false;
  return found;
}

bool EveryCycleContainsTriple(const Digraph& g,
                              const std::vector<std::array<Vertex, 3>>& triples,
                              std::size_t cycle_limit) {
  std::vector<std::vector<std::array<Vertex, 3>>> by_vertex(
      static_cast<std::size_t>(g.vertex_count()) + 1);
  for (const auto& t : triples) by_vertex[t[0]].push_back(t);
  std::vector<bool> mark(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  bool all = true;
  std::size_t seen = 0;
  bool over_limit = false;
  ForEachCycle(g, [&](std::span<const Vertex> cycle) {
    if (++seen > cycle_limit) {
      over_limit = true;
      return false;
    }
    if (!CycleContainsTriple(cycle, mark, by_vertex)) {
      all = false;
      return false;
    }
    return true;
  });
  if (over_limit) {
    throw LimitExceeded("more than " + std::to_string(cycle_limit) + " elementary cycles");
  }
  return all;
}

}  // namespace

bool IsStronglyThreeCoveredForm(const Formula& f, std::size_t cycle_limit) {
  const Digraph g = RepresentativeGraph(f);
  std::vector<std::array<Vertex, 3>> triples;
  for (const Clause3& c : f.clauses()) {
    triples.push_back({c[0].var, c[1].var, c[2].var});
  }
  return EveryCycleContainsTriple(g, triples, cycle_limit);
}

bool IsThreeCycleDigraph(const Digraph& g, std::size_t cycle_limit) {
  std::vector<std::array<Vertex, 3>> triangles;
  for (const Arc& a : g.arcs()) {
    for (Vertex c : g.successors(a.to)) {
      // Report each directed triangle once, from its smallest vertex.
      if (c != a.from && a.from < a.to && a.from < c && g.has_arc(c, a.from)) {
        triangles.push_back({a.from, a.to, c});
      }
    }
  }
  return EveryCycleContainsTriple(g, triangles, cycle_limit);
}

}  // namespace fvskit
