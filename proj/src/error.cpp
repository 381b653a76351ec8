#include "sparsecut/error.hpp"

namespace sparsecut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SetsOverlap: return "SetsOverlap";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoCutExists: return "NoCutExists";
    case ErrorCode::BadCut: return "BadCut";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::AlgorithmBug: return "AlgorithmBug";
    case ErrorCode::ClaimFailed: return "ClaimFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

InfeasibleError::InfeasibleError(int requested, int achievable)
    : Error(ErrorCode::Infeasible, "requested " + std::to_string(requested) +
                                       " disjoint paths, at most " +
                                       std::to_string(achievable) + " exist"),
      requested_(requested),
      achievable_(achievable) {}

ParseError::ParseError(std::size_t line, const std::string& detail)
    : Error(ErrorCode::ParseError,
            line == 0 ? detail : "line " + std::to_string(line) + ": " + detail),
      line_(line) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sparsecut
