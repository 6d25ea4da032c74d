#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ktori {

enum class ErrorCode {
  NonManifoldEdge,
  BadVertexLink,
  DuplicateFace,
  NotGenusOne,
  NotACycle,
  SeparatingMark,
  MarkNotShortest,
  InvalidType,
  InvalidK,
  OutOfRange,
  ParseError,
  DegenerateKnot,
  EpsilonTooLarge,
  EnclosureFailure,
  FaceNotInPolytope,
  IoError,
  NonGenericDirection,
  IntersectingCurves,
  MissingProvenance,
  SeparatingCycle,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` identifies the failure and
// the message carries the witness (edge, vertex, face, line number, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ktori
