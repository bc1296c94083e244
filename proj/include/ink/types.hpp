#ifndef INK_TYPES_HPP
#define INK_TYPES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ink/error.hpp"

namespace ink {

/// Per-point pen state. The integer encoding is part of the wire format.
enum class PenState : int {
  PenMove = 0,    // pen down, within a stroke
  PenUp = 1,      // pen lifts at this point
  CursiveEoc = 2, // end of character with the pen still down (cursive join)
  EndOfChar = 3,  // end of character, pen up
};

constexpr int kPenStateCount = 4;

const char* pen_state_name(PenState s);
PenState pen_state_from_int(int v);  // throws MalformedRecord outside 0..3

struct TrajectoryPoint {
  double x = 0.0;
  double y = 0.0;
  PenState pen = PenState::PenMove;

  bool operator==(const TrajectoryPoint&) const = default;
};

/// Ordered point run for one character. Space glyphs may carry a short
/// pseudo-segment of points or be empty; emptiness is kept as-is.
struct CharacterTrajectory {
  char32_t glyph = U' ';
  std::vector<TrajectoryPoint> points;

  bool is_space() const { return glyph == U' '; }
  bool operator==(const CharacterTrajectory&) const = default;
};

enum class CoordinateMode { Absolute, Delta };

const char* coordinate_mode_name(CoordinateMode m);

/// One (writer, sentence) pair: the character string plus one trajectory per
/// character, aligned one-to-one with the text codepoints.
struct SentenceSample {
  std::string writer_id;
  std::string sentence_id;
  std::u32string text;
  CoordinateMode mode = CoordinateMode::Absolute;
  std::vector<CharacterTrajectory> characters;

  std::size_t total_points() const;
  bool operator==(const SentenceSample&) const = default;
};

struct Dataset {
  std::vector<SentenceSample> samples;

  /// Indices grouped by writer_id, writers and sentences in lexicographic
  /// order. The ordering is the canonical report row order.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> by_writer() const;
};

/// Pen state of a character's final point; this is the character's boundary
/// label. Throws EmptyCharacter on an empty point run.
PenState boundary_label(const CharacterTrajectory& c);

/// All points of the sentence in sequence order (spaces included).
std::vector<TrajectoryPoint> flatten_points(const SentenceSample& s);

/// Throws DeltaInput unless the sample is in absolute coordinates. Metric
/// operations call this up front.
void require_absolute(const SentenceSample& s);

}  // namespace ink

#endif
