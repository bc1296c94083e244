#include "ink/error.hpp"

namespace ink {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedRecord: return "MALFORMED_RECORD";
    case Errc::AlignmentMismatch: return "ALIGNMENT_MISMATCH";
    case Errc::NonfiniteCoordinate: return "NONFINITE_COORDINATE";
    case Errc::DuplicateSampleId: return "DUPLICATE_SAMPLE_ID";
    case Errc::ModeMismatch: return "MODE_MISMATCH";
    case Errc::EmptyCharacter: return "EMPTY_CHARACTER";
    case Errc::AlreadyAbsolute: return "ALREADY_ABSOLUTE";
    case Errc::DeltaInput: return "DELTA_INPUT";
    case Errc::DegenerateFit: return "DEGENERATE_FIT";
    case Errc::TooFewPoints: return "TOO_FEW_POINTS";
    case Errc::ZeroHeight: return "ZERO_HEIGHT";
    case Errc::MissingNextPenMove: return "MISSING_NEXT_PEN_MOVE";
    case Errc::LengthMismatch: return "LENGTH_MISMATCH";
    case Errc::EmptyBoundarySet: return "EMPTY_BOUNDARY_SET";
    case Errc::ComponentUndefined: return "COMPONENT_UNDEFINED";
    case Errc::UnpairedSample: return "UNPAIRED_SAMPLE";
    case Errc::TextMismatch: return "TEXT_MISMATCH";
    case Errc::EmptySequence: return "EMPTY_SEQUENCE";
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::IoError: return "IO_ERROR";
    case Errc::ConfigError: return "CONFIG_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace ink
