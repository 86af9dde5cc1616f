#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fvskit/c1p.hpp"
#include "fvskit/dimacs.hpp"
#include "fvskit/flowgraph.hpp"
#include "fvskit/fvs.hpp"
#include "fvskit/graph_io.hpp"
#include "fvskit/oracles.hpp"
#include "fvskit/random.hpp"
#include "fvskit/reduction.hpp"
#include "fvskit/sat.hpp"

namespace fvskit::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string ReadAll(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void PrintIds(std::ostream& out, std::string_view key, const std::vector<int>& ids) {
  out << key;
  for (int id : ids) out << ' ' << id;
  out << '\n';
}

void PrintLrOrder(std::ostream& out, const LROrder& o) {
  PrintIds(out, "order", o.order);
  VertexSet left;
  for (std::size_t v = 1; v < o.side.size(); ++v) {
    if (o.side[v] == Side::kLeft) left.push_back(static_cast<Vertex>(v));
  }
  PrintIds(out, "right", o.RightSet());
  PrintIds(out, "left", left);
}

// Reads `order ...` and `right ...` lines; other vertices are Left.
LROrder ParseLrOrder(const std::string& text, int n) {
  LROrder o;
  o.side.assign(static_cast<std::size_t>(n) + 1, Side::kLeft);
  std::istringstream in(text);
  std::string line;
  bool have_order = false;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::vector<int> ids;
    int id;
    while (fields >> id) ids.push_back(id);
    if (!fields.eof()) throw FormatError("bad vertex list on '" + key + "' line");
    for (int v : ids) {
      if (v < 1 || v > n) throw FormatError("vertex " + std::to_string(v) + " out of range");
    }
    if (key == "order") {
      o.order = ids;
      have_order = true;
    } else if (key == "right") {
      for (int v : ids) o.side[v] = Side::kRight;
    } else if (key != "left") {
      throw FormatError("unknown key '" + key + "' in order file");
    }
  }
  if (!have_order) throw FormatError("order file has no 'order' line");
  return o;
}

bool LooksLikeEdgeList(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (text[first] == 'p' || text[first] == 'c');
}

Digraph ReadGraphOrAdjacency(const std::string& text) {
  if (LooksLikeEdgeList(text)) return ParseEdgeList(text);
  const BinaryMatrix m = ParseMatrix(text);
  if (m.rows() != m.cols()) throw FormatError("adjacency matrix must be square");
  std::vector<Arc> arcs;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c : m.RowOnes(r)) arcs.push_back({r + 1, c + 1});
  }
  return Digraph(m.rows(), arcs);
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string in = "-";
  std::string out_path;
  std::string map_path;
  std::string order_path;
  std::string dot_path;
  std::string mode = "standard";
  std::string strategy = "auto";
  std::string format = "auto";
  bool dot = false;
  int guard = 64;
  int exhaustive_max = 26;
  int source = 1;
  std::size_t limit = 1000000;
  std::uint64_t seed = 1;
  int vars = 3;
  int clauses = 1;
  int vertices = 8;
  int extra = 0;
};

SearchOptions ToSearch(const Options& o) {
  SearchOptions s;
  s.guard = o.guard;
  s.exhaustive_max = o.exhaustive_max;
  if (o.strategy == "exhaustive") {
    s.strategy = SearchStrategy::kExhaustive;
  } else if (o.strategy == "branching") {
    s.strategy = SearchStrategy::kBranching;
  }
  return s;
}

int ReportOpt(std::ostream& out, const OptResult& r) {
  out << "value " << r.value << '\n';
  out << "feasible " << YesNo(r.feasible) << '\n';
  PrintIds(out, "witness", r.witness);
  out << "strategy " << ToString(r.used) << '\n';
  return r.feasible ? kOk : kNegative;
}

int DoReduce(const Options& o, std::ostream& out) {
  DimacsOptions dopt;
  dopt.allow_repeated_variables = true;
  const Formula c = NormalizeClauses(ParseDimacs(ReadAll(o.in), dopt));
  const TwoChoiceInstance tc = MakeTwoChoiceInstance(c);
  const std::string cnf = FormatDimacs(tc.formula);
  if (o.out_path.empty()) {
    out << cnf;
  } else {
    WriteFile(o.out_path, cnf);
  }
  if (!o.map_path.empty()) {
    std::ostringstream map;
    WriteVarMap(map, tc.map);
    WriteFile(o.map_path, map.str());
  }
  out << "D=" << tc.d << '\n';
  return kOk;
}

int DoRepgraph(const Options& o, std::ostream& out) {
  const Digraph g = RepresentativeGraph(ParseDimacs(ReadAll(o.in)));
  if (o.dot) {
    WriteDot(out, g);
  } else {
    WriteEdgeList(out, g);
  }
  return kOk;
}

int DoCheckFlow(const Options& o, std::ostream& out) {
  const FlowAnalysis fa = AnalyzeReducibility(ParseEdgeList(ReadAll(o.in)), o.source);
  out << "result " << YesNo(fa.reducible) << '\n';
  if (fa.failure) {
    out << "failure head " << fa.failure->head << " vertex " << fa.failure->vertex << '\n';
  }
  return fa.reducible ? kOk : kNegative;
}

int DoFlowAnalyze(const Options& o, std::ostream& out) {
  const Digraph g = ParseEdgeList(ReadAll(o.in));
  const FlowAnalysis fa = AnalyzeReducibility(g, o.source);
  out << "reducible " << YesNo(fa.reducible) << '\n';
  PrintIds(out, "heads", fa.heads);
  for (const PSet& p : fa.pstar) {
    out << "pstar " << p.owner;
    for (Vertex v : p.members) out << ' ' << v;
    out << '\n';
  }
  if (fa.failure) {
    out << "failure head " << fa.failure->head << " vertex " << fa.failure->vertex << '\n';
  }
  out << "vertex\tpo\tsn\thn\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    out << v << '\t' << fa.dfst.po[v] << '\t';
    if (fa.reducible) {
      out << fa.sn[v];
    } else {
      out << '-';
    }
    out << '\t' << fa.hn[v] << '\n';
  }
  if (fa.reducible) PrintIds(out, "alpha", ReductionOrder(fa));
  if (!o.dot_path.empty()) {
    std::ostringstream dot;
    WriteDot(dot, g, &fa.dfst);
    WriteFile(o.dot_path, dot.str());
  }
  return fa.reducible ? kOk : kNegative;
}

int DoFlowLrOrder(const Options& o, std::ostream& out) {
  const Digraph g = ParseEdgeList(ReadAll(o.in));
  const FlowAnalysis fa = AnalyzeReducibility(g, o.source);
  if (!fa.reducible) {
    out << "result no\n";
    out << "failure head " << fa.failure->head << " vertex " << fa.failure->vertex << '\n';
    return kNegative;
  }
  PrintLrOrder(out, LrOrderOfReducible(g, o.source));
  return kOk;
}

int ReportNotC1P(std::ostream& out, const NotC1PError& e) {
  out << "result no\n";
  std::vector<int> rows;
  for (int r : e.witness_rows()) rows.push_back(r + 1);
  PrintIds(out, "witness rows", rows);
  return kNegative;
}

BinaryMatrix ReadMatrixInput(const Options& o) {
  const std::string text = ReadAll(o.in);
  const bool edges = o.format == "edges" || (o.format == "auto" && LooksLikeEdgeList(text));
  return edges ? AdjacencyMatrix(ParseEdgeList(text)) : ParseMatrix(text);
}

int DoC1pOrder(const Options& o, std::ostream& out) {
  const BinaryMatrix m = ReadMatrixInput(o);
  try {
    std::vector<int> order = C1pGoodOrder(m);
    for (int& c : order) ++c;
    out << "result yes\n";
    PrintIds(out, "order", order);
    return kOk;
  } catch (const NotC1PError& e) {
    return ReportNotC1P(out, e);
  }
}

int DoC1pLrOrder(const Options& o, std::ostream& out) {
  const Digraph g = ReadGraphOrAdjacency(ReadAll(o.in));
  try {
    const LROrder lr = LrOrderFromC1p(g);
    PrintLrOrder(out, lr);
    return kOk;
  } catch (const NotC1PError& e) {
    return ReportNotC1P(out, e);
  }
}

int DoCheckC1p(const Options& o, std::ostream& out) {
  const BinaryMatrix m = ReadMatrixInput(o);
  try {
    C1pGoodOrder(m);
    out << "result yes\n";
    return kOk;
  } catch (const NotC1PError& e) {
    return ReportNotC1P(out, e);
  }
}

int DoCheckLr(const Options& o, std::ostream& out) {
  const Digraph g = ParseEdgeList(ReadAll(o.in));
  const LROrder lr = ParseLrOrder(ReadAll(o.order_path), g.vertex_count());
  const bool ok = VerifyLrOrder(g, lr);
  out << "result " << YesNo(ok) << '\n';
  return ok ? kOk : kNegative;
}

int DoGenIpd(const Options& o, std::ostream& out) {
  const IntervalPointFamily fam = RandomIntervalPointFamily(o.seed, o.vertices);
  for (std::size_t v = 0; v < fam.size(); ++v) {
    out << "c interval " << v + 1 << ' ' << ToString(fam[v].lo) << ' ' << ToString(fam[v].hi)
        << " point " << ToString(fam[v].point) << '\n';
  }
  WriteEdgeList(out, IntervalPointDigraph(fam));
  return kOk;
}

int Yes(std::ostream& out, bool b) {
  out << "result " << YesNo(b) << '\n';
  return b ? kOk : kNegative;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feedback vertex sets, monotone NAE 3-SAT reductions and LR-orders.\n"
               "Graphs use the edge-list format ('p dg <n> <m>' then '<u> <v>' lines),\n"
               "formulas DIMACS CNF with exactly three literals per clause (order kept),\n"
               "matrices '<rows> <cols>' then one 0/1 string per row.\n"
               "Exit codes: 0 yes/success, 1 no, 2 usage or format error, 3 guard exceeded."};
  app.name("fvskit");
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, std::function<int()>>> leaves;

  auto input = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--in", o.in, std::string(what) + " ('-' = stdin)");
  };
  auto search = [&](CLI::App* cmd) {
    cmd->add_option("--guard", o.guard, "refuse instances with more elements (max 64)");
    cmd->add_option("--exhaustive-max", o.exhaustive_max,
                    "auto strategy enumerates up to this size");
    cmd->add_option("--strategy", o.strategy, "auto|exhaustive|branching")
        ->check(CLI::IsMember({"auto", "exhaustive", "branching"}));
  };
  auto leaf = [&](CLI::App* cmd, std::function<int()> fn) { leaves.emplace_back(cmd, std::move(fn)); };

  auto* reduce = app.add_subcommand("reduce", "normalize, reduce to monotone NAE 3-SAT, print D");
  input(reduce, "DIMACS input");
  reduce->add_option("--out", o.out_path, "write the formula to this file instead of stdout");
  reduce->add_option("--map", o.map_path, "write the variable map to this file");
  leaf(reduce, [&] { return DoReduce(o, out); });

  auto* repgraph = app.add_subcommand("repgraph", "representative graph of a monotone formula");
  input(repgraph, "DIMACS input");
  repgraph->add_flag("--dot", o.dot, "emit Graphviz instead of an edge list");
  leaf(repgraph, [&] { return DoRepgraph(o, out); });

  auto* solve = app.add_subcommand("solve", "exact optimum oracles");
  solve->require_subcommand(1);
  auto* mfvs = solve->add_subcommand("mfvs", "minimum feedback vertex set");
  auto* amfvs = solve->add_subcommand("amfvs", "minimum acyclic feedback vertex set");
  auto* ones = solve->add_subcommand("min-ones", "fewest true variables");
  for (auto* cmd : {mfvs, amfvs}) {
    input(cmd, "edge list");
    search(cmd);
  }
  input(ones, "DIMACS input");
  search(ones);
  ones->add_option("--mode", o.mode, "standard|nae")->check(CLI::IsMember({"standard", "nae"}));
  leaf(mfvs, [&] { return ReportOpt(out, BruteMfvs(ParseEdgeList(ReadAll(o.in)), ToSearch(o))); });
  leaf(amfvs, [&] { return ReportOpt(out, BruteAmfvs(ParseEdgeList(ReadAll(o.in)), ToSearch(o))); });
  leaf(ones, [&] {
    const SatMode mode = o.mode == "nae" ? SatMode::kNae : SatMode::kStandard;
    return ReportOpt(out, BruteMinOnes(ParseDimacs(ReadAll(o.in)), mode, ToSearch(o)));
  });

  auto* check = app.add_subcommand("check", "structural predicates");
  check->require_subcommand(1);
  auto* c3 = check->add_subcommand("3c", "every cycle contains a 3-cycle's vertices");
  auto* s3c = check->add_subcommand("s3c", "strongly 3-covered form");
  auto* clr = check->add_subcommand("lr", "verify an LR-order");
  auto* cflow = check->add_subcommand("flow-reducible", "reducible flow graph test");
  auto* cc1p = check->add_subcommand("c1p", "consecutive-ones property");
  input(c3, "edge list");
  input(s3c, "DIMACS input");
  input(clr, "edge list");
  input(cflow, "edge list");
  input(cc1p, "matrix or edge list");
  for (auto* cmd : {c3, s3c}) cmd->add_option("--limit", o.limit, "maximum cycles to enumerate");
  clr->add_option("--order", o.order_path, "file with 'order' and 'right' lines")->required();
  cflow->add_option("--source", o.source, "source vertex");
  cc1p->add_option("--format", o.format, "auto|matrix|edges")
      ->check(CLI::IsMember({"auto", "matrix", "edges"}));
  leaf(c3, [&] { return Yes(out, IsThreeCycleDigraph(ParseEdgeList(ReadAll(o.in)), o.limit)); });
  leaf(s3c, [&] {
    return Yes(out, IsStronglyThreeCoveredForm(ParseDimacs(ReadAll(o.in)), o.limit));
  });
  leaf(clr, [&] { return DoCheckLr(o, out); });
  leaf(cflow, [&] { return DoCheckFlow(o, out); });
  leaf(cc1p, [&] { return DoCheckC1p(o, out); });

  auto* flow = app.add_subcommand("flow", "flow graph analysis");
  flow->require_subcommand(1);
  auto* fanalyze = flow->add_subcommand("analyze", "po/sn/hn table, heads, P* sets, reduction order");
  auto* fcheck = flow->add_subcommand("check", "reducible flow graph test");
  auto* flr = flow->add_subcommand("lr-order", "LR-order of a reducible flow graph");
  for (auto* cmd : {fanalyze, fcheck, flr}) {
    input(cmd, "edge list");
    cmd->add_option("--source", o.source, "source vertex");
  }
  fanalyze->add_option("--dot", o.dot_path, "also write Graphviz with arc classes to this file");
  leaf(fanalyze, [&] { return DoFlowAnalyze(o, out); });
  leaf(fcheck, [&] { return DoCheckFlow(o, out); });
  leaf(flr, [&] { return DoFlowLrOrder(o, out); });

  auto* c1p = app.add_subcommand("c1p", "consecutive-ones good order (default) or LR-order");
  c1p->require_subcommand(0, 1);
  auto* corder = c1p->add_subcommand("order", "column order making every row consecutive");
  auto* clrorder = c1p->add_subcommand("lr-order", "LR-order of a digraph with C1P adjacency");
  for (auto* cmd : {c1p, corder, clrorder}) input(cmd, "matrix or edge list");
  for (auto* cmd : {c1p, corder}) {
    cmd->add_option("--format", o.format, "auto|matrix|edges")
        ->check(CLI::IsMember({"auto", "matrix", "edges"}));
  }
  leaf(corder, [&] { return DoC1pOrder(o, out); });
  leaf(clrorder, [&] { return DoC1pLrOrder(o, out); });
  leaf(c1p, [&] { return DoC1pOrder(o, out); });

  auto* gen = app.add_subcommand("gen", "seeded generators");
  gen->require_subcommand(1);
  auto* g3 = gen->add_subcommand("3sat", "random 3-SAT (DIMACS)");
  auto* gred = gen->add_subcommand("reducible", "random reducible flow graph, source 1");
  auto* gipd = gen->add_subcommand("ipd", "random interval-point digraph");
  for (auto* cmd : {g3, gred, gipd}) cmd->add_option("--seed", o.seed, "64-bit seed");
  g3->add_option("--vars", o.vars, "variables (>= 3)");
  g3->add_option("--clauses", o.clauses, "clauses");
  for (auto* cmd : {gred, gipd}) cmd->add_option("--vertices", o.vertices, "vertex count");
  gred->add_option("--extra", o.extra, "extra arc attempts");
  leaf(g3, [&] {
    Rng rng(o.seed);
    WriteDimacs(out, RandomThreeSat(rng, o.vars, o.clauses));
    return kOk;
  });
  leaf(gred, [&] {
    WriteEdgeList(out, GenReducible(o.seed, o.vertices, o.extra));
    return kOk;
  });
  leaf(gipd, [&] { return DoGenIpd(o, out); });

  std::vector<const char*> argv{"fvskit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [cmd, fn] : leaves) {
      if (!cmd->parsed()) continue;
      // A parent with a parsed child defers to the child.
      bool child = false;
      for (auto* sub : cmd->get_subcommands()) child = child || sub->parsed();
      if (!child) return fn();
    }
    err << "error: no command\n";
    return kUsage;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fvskit::cli
