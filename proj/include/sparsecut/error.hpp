#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparsecut {

enum class ErrorCode {
  LoopEdge,
  BadVertex,
  BadOrder,
  EmptyGraph,
  SetsOverlap,
  NotConnected,
  NoCutExists,
  BadCut,
  Infeasible,
  PreconditionFailed,
  NoWitness,
  AlgorithmBug,
  ClaimFailed,
  ParseError,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by disjoint_paths when fewer than the requested number of paths exist.
class InfeasibleError : public Error {
 public:
  InfeasibleError(int requested, int achievable);

  int requested() const noexcept { return requested_; }
  int achievable() const noexcept { return achievable_; }

 private:
  int requested_;
  int achievable_;
};

// Raised while reading graph6 / edge-list input; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace sparsecut
