#include "fvskit/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace fvskit {

Formula ReadDimacs(std::istream& in, DimacsOptions options) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Clause3> clauses;
  std::vector<Literal> pending;
  std::vector<std::string> names;
  bool any_name = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream fields(line.substr(first));
    if (line[first] == 'c') {
      std::string c, tag, name;
      long long id = 0;
      if ((fields >> c >> tag >> id >> name) && c == "c" && tag == "name") {
        if (n < 0 || id < 1 || id > n) {
          throw FormatError("line " + std::to_string(line_no) + ": name for unknown variable");
        }
        names[static_cast<std::size_t>(id) - 1] = name;
        any_name = true;
      }
      continue;
    }
    if (line[first] == 'p') {
      std::string p, kind;
      if (n >= 0) throw FormatError("line " + std::to_string(line_no) + ": second header");
      if (!(fields >> p >> kind >> n >> m) || p != "p" || kind != "cnf" || n < 0 || m < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'p cnf <n> <m>'");
      }
      names.assign(static_cast<std::size_t>(n), std::string());
      continue;
    }
    if (n < 0) throw FormatError("line " + std::to_string(line_no) + ": clause before header");
    long long lit;
    while (fields >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw FormatError("line " + std::to_string(line_no) + ": clause has " +
                            std::to_string(pending.size()) + " literals, expected 3");
        }
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > n) {
        throw FormatError("line " + std::to_string(line_no) + ": variable " +
                          std::to_string(var) + " exceeds header count");
      }
      pending.push_back({static_cast<Var>(var), lit > 0});
    }
    if (!fields.eof()) {
      throw FormatError("line " + std::to_string(line_no) + ": non-integer token");
    }
  }
  if (n < 0) throw FormatError("missing 'p cnf' header");
  if (!pending.empty()) throw FormatError("last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != m) {
    throw FormatError("header announces " + std::to_string(m) + " clauses, found " +
                      std::to_string(clauses.size()));
  }

  Formula f = options.allow_repeated_variables
                  ? Formula::AllowingRepeats(static_cast<int>(n), std::move(clauses))
                  : Formula(static_cast<int>(n), std::move(clauses));
  if (any_name) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) names[i] = "x" + std::to_string(i + 1);
    }
    f.set_var_names(std::move(names));
  }
  return f;
}

Formula ParseDimacs(std::string_view text, DimacsOptions options) {
  std::istringstream in{std::string(text)};
  return ReadDimacs(in, options);
}

void WriteDimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
  const auto& names = f.var_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "c name " << i + 1 << ' ' << names[i] << '\n';
  }
  for (const Clause3& c : f.clauses()) {
    out << c[0].ToDimacs() << ' ' << c[1].ToDimacs() << ' ' << c[2].ToDimacs() << " 0\n";
  }
}

std::string FormatDimacs(const Formula& f) {
  std::ostringstream out;
  WriteDimacs(out, f);
  return out.str();
}

}  // namespace fvskit
