#pragma once

// Ordered 3-literal clause sets. Literal order inside a clause is part of the
// data: it defines the cyclic "precedes" relation a->b->c->a from which the
// representative graph of a monotone formula is built.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fvskit/digraph.hpp"

namespace fvskit {

using Var = int;

struct Literal {
  Var var = 0;
  bool positive = true;

  static constexpr Literal Pos(Var v) { return {v, true}; }
  static constexpr Literal Neg(Var v) { return {v, false}; }
  constexpr Literal operator!() const { return {var, !positive}; }
  constexpr int ToDimacs() const { return positive ? var : -var; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause3 = std::array<Literal, 3>;

class Formula {
 public:
  Formula() = default;

  // Every literal must reference 1..var_count and the three variables of each
  // clause must be distinct (RepeatedVariableError otherwise).
  Formula(int var_count, std::vector<Clause3> clauses);

  // Range-checked only; clauses may repeat a variable. Input for
  // NormalizeClauses.
  static Formula AllowingRepeats(int var_count, std::vector<Clause3> clauses);

  int var_count() const noexcept { return var_count_; }
  const std::vector<Clause3>& clauses() const noexcept { return clauses_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }

  bool has_repeated_variables() const;

  // Optional human-readable names; empty when unnamed.
  const std::vector<std::string>& var_names() const noexcept { return names_; }
  void set_var_names(std::vector<std::string> names);
  std::string VarName(Var v) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.var_count_ == b.var_count_ && a.clauses_ == b.clauses_;
  }

 private:
  int var_count_ = 0;
  std::vector<Clause3> clauses_;
  std::vector<std::string> names_;
};

// Total truth assignment over variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int var_count) : values_(static_cast<std::size_t>(var_count) + 1, false) {}

  static Assignment FromOnes(int var_count, const std::vector<Var>& ones);
  // values[i] is the value of variable i+1.
  static Assignment FromValues(const std::vector<bool>& values);

  int var_count() const noexcept { return static_cast<int>(values_.size()) - 1; }
  bool operator[](Var v) const { return values_.at(static_cast<std::size_t>(v)); }
  void Set(Var v, bool value) { values_.at(static_cast<std::size_t>(v)) = value; }
  bool Holds(Literal l) const { return (*this)[l.var] == l.positive; }

  // Sorted list of variables set to true.
  std::vector<Var> Ones() const;
  int OnesCount() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_{false};
};

enum class SatMode { kStandard, kNae };

const char* ToString(SatMode mode);

struct EvalResult {
  bool satisfied = false;
  std::vector<std::size_t> failing_clauses;  // 0-based clause indices
};

// Standard: each clause has a true literal. NAE: each clause has a true and a
// false literal.
EvalResult Evaluate(const Formula& f, const Assignment& a, SatMode mode);

bool IsMonotone(const Formula& f);

// One vertex per variable; arcs a->b, b->c, c->a per clause (a, b, c),
// duplicates collapsed. Throws NotMonotoneError.
Digraph RepresentativeGraph(const Formula& f);

// Every elementary cycle of the representative graph contains the three
// variables of some clause. Exponential; meant for test-scale formulas.
// Throws NotMonotoneError, LimitExceeded.
bool IsStronglyThreeCoveredForm(const Formula& f, std::size_t cycle_limit);

// Every elementary cycle contains three vertices inducing a directed
// 3-cycle. Throws LimitExceeded.
bool IsThreeCycleDigraph(const Digraph& g, std::size_t cycle_limit);

}  // namespace fvskit
