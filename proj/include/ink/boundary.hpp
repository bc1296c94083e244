#ifndef INK_BOUNDARY_HPP
#define INK_BOUNDARY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ink/types.hpp"

namespace ink {

struct CharBounds {
  double left = 0.0;   // min x over the character's points
  double right = 0.0;  // max x
};

/// One adjacent non-space boundary with its cursive indicators and kerning
/// gaps on the ground-truth and predicted side. Indices are 1-based.
struct AdjacentBoundary {
  std::size_t index = 0;  // boundary between characters index and index+1
  int gt_cursive = 0;
  int pred_cursive = 0;
  double gt_gap = 0.0;
  double pred_gap = 0.0;
};

/// One maximal interior space run, flanked by non-space characters at
/// 1-based positions u < v; widths measure left(v) - right(u).
struct WordGapBoundary {
  std::size_t u = 0;
  std::size_t v = 0;
  double gt_width = 0.0;
  double pred_width = 0.0;
};

CharBounds char_bounds(const CharacterTrajectory& c);  // throws EmptyCharacter

/// Indices s with 1 <= s <= len-1 where neither text[s] nor text[s+1] is a
/// space (1-based).
std::vector<std::size_t> adjacent_boundaries(const std::u32string& text);

/// One (u, v) pair per maximal interior space run; runs touching either end
/// of the sentence produce no pair.
std::vector<std::pair<std::size_t, std::size_t>> word_gap_boundaries(
    const std::u32string& text);

/// 1 iff the character's boundary label is CURSIVE_EOC.
int cursive_indicator(const CharacterTrajectory& c);

/// Distance-based relabeling for predictions without explicit cursive
/// labels: an END_OF_CHAR boundary becomes CURSIVE_EOC when the last point
/// of the character sits strictly closer than tau to the first PEN_MOVE
/// point of its successor. Geometry is never altered.
SentenceSample convert_eoc_to_cursive(const SentenceSample& s, double tau);

/// Fraction of adjacent boundaries labelled cursive, with the epsilon
/// denominator so boundary-free sentences yield a rate near zero.
double cursive_rate(const SentenceSample& s, double epsilon);

struct SentenceBoundaries {
  std::vector<AdjacentBoundary> adjacent;
  std::vector<WordGapBoundary> word_gaps;
};

/// Gap measurements for one paired sentence; both samples must be in
/// absolute coordinates and share the same text.
SentenceBoundaries collect_boundaries(const SentenceSample& gt,
                                      const SentenceSample& pred);

}  // namespace ink

#endif
