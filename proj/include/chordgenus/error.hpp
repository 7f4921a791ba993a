#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordgenus {

enum class ErrorKind {
  InvalidOrder,
  DotOutOfRange,
  DuplicateDot,
  TooManyChords,
  IncompleteDiagram,
  SyntaxError,
  EdgeNotOfThisDiagram,
  ProcedureComplete,
  PointerInLoop,
  TooLarge,
  NotVacant,
  PreconditionViolated,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error. The message names the violated invariant.
class ChordError : public std::runtime_error {
 public:
  ChordError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chordgenus
