#pragma once

// DIMACS CNF restricted to 3-literal clauses. Literal order on each clause
// line is preserved exactly; it is significant for the representative graph.
//
// Variable names travel in comment lines of the form `c name <id> <name>`.

#include <iosfwd>
#include <string>
#include <string_view>

#include "fvskit/sat.hpp"

namespace fvskit {

struct DimacsOptions {
  // Accept clauses that mention a variable twice (needed before
  // normalization). Otherwise RepeatedVariableError.
  bool allow_repeated_variables = false;
};

// Throws FormatError (bad syntax, clause width != 3, count mismatch) or
// RepeatedVariableError.
Formula ReadDimacs(std::istream& in, DimacsOptions options = {});
Formula ParseDimacs(std::string_view text, DimacsOptions options = {});

void WriteDimacs(std::ostream& out, const Formula& f);
std::string FormatDimacs(const Formula& f);

}  // namespace fvskit
