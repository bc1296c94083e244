#ifndef INK_ERROR_HPP
#define INK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ink {

enum class Errc {
  MalformedRecord,
  AlignmentMismatch,
  NonfiniteCoordinate,
  DuplicateSampleId,
  ModeMismatch,
  EmptyCharacter,
  AlreadyAbsolute,
  DeltaInput,
  DegenerateFit,
  TooFewPoints,
  ZeroHeight,
  MissingNextPenMove,
  LengthMismatch,
  EmptyBoundarySet,
  ComponentUndefined,
  UnpairedSample,
  TextMismatch,
  EmptySequence,
  InvalidArgument,
  IoError,
  ConfigError,
};

const char* errc_name(Errc code);

/// Domain error carrying a machine-checkable code and, for file input
/// problems, the 1-based line number.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0
                               ? std::string(errc_name(code)) + ": " + message
                               : std::string(errc_name(code)) + " (line " +
                                     std::to_string(line) + "): " + message),
        code_(code),
        line_(line) {}

  Errc code() const { return code_; }
  std::size_t line() const { return line_; }

private:
  Errc code_;
  std::size_t line_;
};

}  // namespace ink

#endif
