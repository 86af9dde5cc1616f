#include "fvskit/reduction.hpp"

#include <algorithm>
#include <ostream>

#include "fvskit/errors.hpp"

namespace fvskit {

const char* ToString(ClauseRole role) {
  switch (role) {
    case ClauseRole::kBasic: return "F";
    case ClauseRole::kBasicPrime: return "F'";
    case ClauseRole::kConsistency1: return "F1";
    case ClauseRole::kConsistency2: return "F2";
    case ClauseRole::kConsistency3: return "F3";
    case ClauseRole::kConsistency4: return "F4";
  }
  return "?";
}

namespace {

class FreshVars {
 public:
  explicit FreshVars(int next) : next_(next) {}
  Var Take() { return ++next_; }
  int last() const { return next_; }

 private:
  int next_;
};

// (l, l, l') -> (l, l', u), (l, l', -u).
void Split(Literal l, Literal other, FreshVars& fresh, std::vector<Clause3>& out) {
  const Var u = fresh.Take();
  out.push_back({l, other, Literal::Pos(u)});
  out.push_back({l, other, Literal::Neg(u)});
}

}  // namespace

Formula NormalizeClauses(const Formula& c) {
  FreshVars fresh(c.var_count());
  std::vector<Clause3> out;
  for (const Clause3& cl : c.clauses()) {
    bool tautology = false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (cl[i].var == cl[j].var && cl[i].positive != cl[j].positive) tautology = true;
      }
    }
    if (tautology) continue;
    if (cl[0] == cl[1] && cl[1] == cl[2]) {
      // (l, l, l) -> (l, l, u), (l, l, -u), each split once more.
      const Literal l = cl[0];
      const Var u = fresh.Take();
      Split(l, Literal::Pos(u), fresh, out);
      Split(l, Literal::Neg(u), fresh, out);
    } else if (cl[0] == cl[1]) {
      Split(cl[0], cl[2], fresh, out);
    } else if (cl[0] == cl[2] || cl[1] == cl[2]) {
      Split(cl[2], cl[0] == cl[2] ? cl[1] : cl[0], fresh, out);
    } else {
      out.push_back(cl);
    }
  }
  Formula result(fresh.last(), std::move(out));
  if (!c.var_names().empty()) {
    std::vector<std::string> names = c.var_names();
    for (int v = c.var_count() + 1; v <= fresh.last(); ++v) names.push_back("u" + std::to_string(v));
    result.set_var_names(std::move(names));
  }
  return result;
}

MnaeInstance ToMnae(const Formula& c) {
  if (c.has_repeated_variables()) {
    throw PreconditionError("clauses must not repeat a variable; normalize first");
  }
  const int n = c.var_count();
  const int m = static_cast<int>(c.clause_count());
  VarMap map;
  map.source_vars = n;
  map.source_clauses = m;

  std::vector<std::string> names;
  auto gadget = [&](int t, const std::string& label) {
    const Var base = 5 * (t - 1);
    for (const char* role : {"alpha_", "beta_", "a_", "b_", "c_"}) names.push_back(role + label);
    return GadgetVars{base + 1, base + 2, base + 3, base + 4, base + 5};
  };
  for (int u = 1; u <= n; ++u) map.y.push_back(gadget(u, "y" + std::to_string(u)));
  for (int r = 1; r <= m; ++r) map.w.push_back(gadget(n + r, "w" + std::to_string(r)));
  map.z = 5 * (n + m) + 1;
  names.push_back("z");

  auto gamma = [&](Literal l) {
    const GadgetVars& g = map.y[static_cast<std::size_t>(l.var) - 1];
    return Literal::Pos(l.positive ? g.alpha : g.beta);
  };

  std::vector<Clause3> out;
  out.reserve(static_cast<std::size_t>(2 * m + 4 * (n + m)));
  for (int r = 1; r <= m; ++r) {
    const Clause3& cl = c.clauses()[static_cast<std::size_t>(r) - 1];
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return cl[a].var < cl[b].var; });
    map.sorted_from.push_back(perm);
    const GadgetVars& w = map.w[static_cast<std::size_t>(r) - 1];
    out.push_back({gamma(cl[perm[0]]), gamma(cl[perm[1]]), Literal::Pos(w.alpha)});
    map.roles.push_back({ClauseRole::kBasic, r});
    out.push_back({Literal::Pos(w.beta), gamma(cl[perm[2]]), Literal::Pos(map.z)});
    map.roles.push_back({ClauseRole::kBasicPrime, r});
  }
  auto consistency = [&](const GadgetVars& g, int t) {
    const auto P = Literal::Pos;
    out.push_back({P(g.alpha), P(g.beta), P(g.a)});
    map.roles.push_back({ClauseRole::kConsistency1, t});
    out.push_back({P(g.alpha), P(g.beta), P(g.b)});
    map.roles.push_back({ClauseRole::kConsistency2, t});
    out.push_back({P(g.alpha), P(g.beta), P(g.c)});
    map.roles.push_back({ClauseRole::kConsistency3, t});
    out.push_back({P(g.a), P(g.b), P(g.c)});
    map.roles.push_back({ClauseRole::kConsistency4, t});
  };
  int t = 0;
  for (const GadgetVars& g : map.y) consistency(g, ++t);
  for (const GadgetVars& g : map.w) consistency(g, ++t);

  MnaeInstance result{Formula(map.total_vars(), std::move(out)), std::move(map)};
  result.formula.set_var_names(std::move(names));
  return result;
}

namespace {

void SetGadget(Assignment& out, const GadgetVars& g, bool value) {
  out.Set(g.alpha, value);
  out.Set(g.beta, !value);
  out.Set(g.a, true);
  out.Set(g.b, false);
  out.Set(g.c, false);
}

bool NotAllEqual(bool x, bool y, bool z) { return !(x == y && y == z); }

}  // namespace

Assignment LiftAssignment(const Formula& c, const VarMap& map, const Assignment& a,
                          bool z_value) {
  if (c.var_count() != map.source_vars || static_cast<int>(c.clause_count()) != map.source_clauses) {
    throw PreconditionError("variable map does not belong to this formula");
  }
  if (a.var_count() < c.var_count()) throw PreconditionError("assignment does not cover C");
  Assignment out(map.total_vars());
  out.Set(map.z, z_value);
  for (int u = 1; u <= map.source_vars; ++u) {
    SetGadget(out, map.y[static_cast<std::size_t>(u) - 1], a[u] != z_value);
  }
  for (int r = 1; r <= map.source_clauses; ++r) {
    const Clause3& cl = c.clauses()[static_cast<std::size_t>(r) - 1];
    const auto& perm = map.sorted_from[static_cast<std::size_t>(r) - 1];
    // h_u = y_u for a positive literal, its negation otherwise.
    bool h[3];
    for (int t = 0; t < 3; ++t) {
      const Literal l = cl[perm[t]];
      h[t] = (a[l.var] != z_value) == l.positive;
    }
    bool chosen = false;
    for (bool w : {false, true}) {
      if (NotAllEqual(h[0], h[1], w) && NotAllEqual(!w, h[2], z_value)) {
        SetGadget(out, map.w[static_cast<std::size_t>(r) - 1], w);
        chosen = true;
        break;
      }
    }
    if (!chosen) {
      throw LiftFailed("clause " + std::to_string(r) + " admits no value of w_" +
                       std::to_string(r));
    }
  }
  return out;
}

Assignment ProjectAssignment(const VarMap& map, const Assignment& af) {
  if (af.var_count() < map.total_vars()) throw PreconditionError("assignment does not cover F");
  Assignment out(map.source_vars);
  for (int u = 1; u <= map.source_vars; ++u) {
    out.Set(u, af[map.y[static_cast<std::size_t>(u) - 1].alpha] != af[map.z]);
  }
  return out;
}

TwoChoiceInstance MakeTwoChoiceInstance(const Formula& c) {
  MnaeInstance inst = ToMnae(c);
  const int d = 2 * (inst.map.total_vars() - 1) / 5;
  return {std::move(inst.formula), std::move(inst.map), d};
}

void WriteVarMap(std::ostream& out, const VarMap& map) {
  auto gadget = [&](const char* kind, int index, const GadgetVars& g) {
    out << kind << ' ' << index << " alpha " << g.alpha << " beta " << g.beta << " a " << g.a
        << " b " << g.b << " c " << g.c << '\n';
  };
  for (int u = 1; u <= map.source_vars; ++u) gadget("var", u, map.y[static_cast<std::size_t>(u) - 1]);
  for (int r = 1; r <= map.source_clauses; ++r) gadget("w", r, map.w[static_cast<std::size_t>(r) - 1]);
  for (int r = 1; r <= map.source_clauses; ++r) {
    out << "clause " << r << " F " << map.basic_index(r) + 1 << " F' "
        << map.basic_prime_index(r) + 1 << '\n';
  }
  out << "z " << map.z << '\n';
}

}  // namespace fvskit
