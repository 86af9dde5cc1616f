#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fvskit {

// Root of every exception thrown by the library. Each failure mode named in
// the public contracts gets its own type so callers (and the CLI's exit-code
// table) can dispatch on it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, DIMACS, matrix files, order files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A graph that violates the simple-digraph invariants (loops, duplicate arcs,
// ids out of range).
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class CyclicError : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotFlowGraphError : public Error {
 public:
  using Error::Error;
};

class NotReducibleError : public Error {
 public:
  using Error::Error;
};

class NotMonotoneError : public Error {
 public:
  using Error::Error;
};

// A clause mentions the same variable more than once.
class RepeatedVariableError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A vertex set equal to V was passed where a proper subset is required.
class ProperSubsetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotAcyclicFvsError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The precedence graph built from a NAE assignment has a cycle. Never raised
// when the formula is in strongly 3-covered form.
class GammaCyclicError : public Error {
 public:
  using Error::Error;
};

class LiftFailed : public Error {
 public:
  using Error::Error;
};

// An exact search was asked to handle more variables/vertices than allowed.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class LoopError : public Error {
 public:
  using Error::Error;
};

class NotC1PError : public Error {
 public:
  NotC1PError(std::string what, std::vector<int> witness_rows)
      : Error(std::move(what)), witness_rows_(std::move(witness_rows)) {}

  // 0-based row indices of a minimal row subset that has no consecutive
  // arrangement on its own.
  const std::vector<int>& witness_rows() const noexcept { return witness_rows_; }

 private:
  std::vector<int> witness_rows_;
};

}  // namespace fvskit
