#include "ink/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace ink {

namespace {

constexpr char32_t kSpace = U' ';

}  // namespace

CharBounds char_bounds(const CharacterTrajectory& c) {
  if (c.points.empty())
    throw Error(Errc::EmptyCharacter, "bounds of an empty character");
  CharBounds b{c.points[0].x, c.points[0].x};
  for (const TrajectoryPoint& p : c.points) {
    b.left = std::min(b.left, p.x);
    b.right = std::max(b.right, p.x);
  }
  return b;
}

std::vector<std::size_t> adjacent_boundaries(const std::u32string& text) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < text.size(); ++s)
    if (text[s - 1] != kSpace && text[s] != kSpace) out.push_back(s);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> word_gap_boundaries(
    const std::u32string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != kSpace) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    while (i < text.size() && text[i] == kSpace) ++i;
    if (run_begin > 0 && i < text.size()) out.emplace_back(run_begin, i + 1);
  }
  return out;
}

int cursive_indicator(const CharacterTrajectory& c) {
  return boundary_label(c) == PenState::CursiveEoc ? 1 : 0;
}

SentenceSample convert_eoc_to_cursive(const SentenceSample& s, double tau) {
  require_absolute(s);
  SentenceSample out = s;
  for (std::size_t b : adjacent_boundaries(out.text)) {
    CharacterTrajectory& cur = out.characters[b - 1];
    const CharacterTrajectory& next = out.characters[b];
    if (boundary_label(cur) != PenState::EndOfChar) continue;
    auto it = std::find_if(next.points.begin(), next.points.end(),
                           [](const TrajectoryPoint& p) {
                             return p.pen == PenState::PenMove;
                           });
    if (it == next.points.end())
      throw Error(Errc::MissingNextPenMove,
                  "character " + std::to_string(b + 1) + " of " + s.writer_id + "/" +
                      s.sentence_id + " has no PEN_MOVE point");
    const TrajectoryPoint& last = cur.points.back();
    const double d = std::hypot(last.x - it->x, last.y - it->y);
    if (d < tau) cur.points.back().pen = PenState::CursiveEoc;
  }
  return out;
}

double cursive_rate(const SentenceSample& s, double epsilon) {
  require_absolute(s);
  const auto bounds = adjacent_boundaries(s.text);
  double positives = 0.0;
  for (std::size_t b : bounds)
    positives += cursive_indicator(s.characters[b - 1]);
  return positives / (static_cast<double>(bounds.size()) + epsilon);
}

SentenceBoundaries collect_boundaries(const SentenceSample& gt,
                                      const SentenceSample& pred) {
  require_absolute(gt);
  require_absolute(pred);
  if (gt.text != pred.text)
    throw Error(Errc::TextMismatch,
                "paired samples " + gt.writer_id + "/" + gt.sentence_id +
                    " disagree on text");

  SentenceBoundaries out;
  for (std::size_t s : adjacent_boundaries(gt.text)) {
    AdjacentBoundary b;
    b.index = s;
    b.gt_cursive = cursive_indicator(gt.characters[s - 1]);
    b.pred_cursive = cursive_indicator(pred.characters[s - 1]);
    b.gt_gap = char_bounds(gt.characters[s]).left - char_bounds(gt.characters[s - 1]).right;
    b.pred_gap =
        char_bounds(pred.characters[s]).left - char_bounds(pred.characters[s - 1]).right;
    out.adjacent.push_back(b);
  }
  for (auto [u, v] : word_gap_boundaries(gt.text)) {
    WordGapBoundary g;
    g.u = u;
    g.v = v;
    g.gt_width =
        char_bounds(gt.characters[v - 1]).left - char_bounds(gt.characters[u - 1]).right;
    g.pred_width = char_bounds(pred.characters[v - 1]).left -
                   char_bounds(pred.characters[u - 1]).right;
    out.word_gaps.push_back(g);
  }
  return out;
}

}  // namespace ink
