#pragma once

// 3-SAT -> NAE 4-SAT -> NAE 3-SAT -> monotone NAE 3-SAT.
//
// For an input with n variables and m clauses (i < j < k inside each clause
// after sorting by variable id) the output has N = 5(n+m)+1 variables:
//
//   per g in U2 = (y_1..y_n, w_1..w_m):  alpha_g beta_g a_g b_g c_g
//   and a single z (the last id).
//
// Clauses are emitted as
//
//   F_1, F'_1, F_2, F'_2, ..., F_m, F'_m,            (basic, 2m)
//   then per g in U2 order: F1g F2g F3g F4g           (consistency, 4(n+m))
//
// with F_r  = (gamma_i, gamma_j, alpha_{w_r}),  F'_r = (beta_{w_r}, gamma_k, z),
//      F1g  = (alpha_g, beta_g, a_g)  ...  F4g = (a_g, b_g, c_g),
// where gamma_u is alpha_{y_u} for a positive literal and beta_{y_u} for a
// negative one.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fvskit/sat.hpp"

namespace fvskit {

// The five output variables standing for one g in U2.
struct GadgetVars {
  Var alpha = 0;
  Var beta = 0;
  Var a = 0;
  Var b = 0;
  Var c = 0;
};

enum class ClauseRole { kBasic, kBasicPrime, kConsistency1, kConsistency2, kConsistency3, kConsistency4 };

const char* ToString(ClauseRole role);

struct ClauseTag {
  ClauseRole role = ClauseRole::kBasic;
  // 1-based: the input clause r for basic clauses, the position of g in
  // (y_1..y_n, w_1..w_m) for consistency clauses.
  int index = 0;
};

struct VarMap {
  int source_vars = 0;     // n
  int source_clauses = 0;  // m
  std::vector<GadgetVars> y;  // y[u-1]
  std::vector<GadgetVars> w;  // w[r-1]
  Var z = 0;
  std::vector<ClauseTag> roles;  // one per output clause
  // For input clause r: sorted_from[r-1][t] is the position in the original
  // clause of the literal that became t-th after sorting by variable id.
  std::vector<std::array<int, 3>> sorted_from;

  int total_vars() const { return 5 * (source_vars + source_clauses) + 1; }
  // 0-based indices of F_r and F'_r in the output formula.
  std::size_t basic_index(int r) const { return 2 * static_cast<std::size_t>(r - 1); }
  std::size_t basic_prime_index(int r) const { return basic_index(r) + 1; }
};

struct MnaeInstance {
  Formula formula;
  VarMap map;
};

struct TwoChoiceInstance {
  Formula formula;
  VarMap map;
  int d = 0;  // 2(N-1)/5
};

// Removes clauses containing a variable in both polarities; replaces a clause
// with a repeated literal (l, l, l') by (l, l', u), (l, l', -u) with u fresh,
// applying the rule twice for (l, l, l). Fresh variables are appended after
// the existing ids. Standard satisfiability is preserved.
Formula NormalizeClauses(const Formula& c);

// Precondition: no clause repeats a variable (PreconditionError otherwise).
MnaeInstance ToMnae(const Formula& c);

// Builds an assignment of the M-NAE version from an assignment of `c`:
// y_u = x_u xor z, alpha_g = g, beta_g = !g, a_g = true, b_g = c_g = false,
// and w_r chosen (false first) so both halves of clause r are NAE-satisfied.
// Throws LiftFailed when no w_r works, i.e. `a` is not a witness for this z.
Assignment LiftAssignment(const Formula& c, const VarMap& map, const Assignment& a,
                          bool z_value);

// x_u = (alpha_{y_u} != z).
Assignment ProjectAssignment(const VarMap& map, const Assignment& af);

TwoChoiceInstance MakeTwoChoiceInstance(const Formula& c);

// Sidecar text, one record per line:
//   var <u> alpha <id> beta <id> a <id> b <id> c <id>
//   w <r> alpha <id> beta <id> a <id> b <id> c <id>
//   clause <r> F <idx> F' <idx>        (1-based output clause numbers)
//   z <id>
void WriteVarMap(std::ostream& out, const VarMap& map);

}  // namespace fvskit
