#ifndef INK_TEST_HELPERS_HPP
#define INK_TEST_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "ink/types.hpp"
#include "ink/utf8.hpp"

namespace ink::test {

struct Pt {
  double x;
  double y;
  PenState pen = PenState::PenMove;
};

inline CharacterTrajectory make_char(char32_t glyph, std::initializer_list<Pt> pts) {
  CharacterTrajectory c;
  c.glyph = glyph;
  for (const Pt& p : pts) c.points.push_back({p.x, p.y, p.pen});
  return c;
}

inline SentenceSample make_sample(std::string writer, std::string sentence,
                                  const std::string& text_utf8,
                                  std::vector<CharacterTrajectory> chars,
                                  CoordinateMode mode = CoordinateMode::Absolute) {
  SentenceSample s;
  s.writer_id = std::move(writer);
  s.sentence_id = std::move(sentence);
  s.text = utf8::decode(text_utf8);
  s.characters = std::move(chars);
  s.mode = mode;
  return s;
}

/// A boxy glyph spanning [x0, x0+width] x [y0, y0+height], last point
/// carrying the boundary label.
inline CharacterTrajectory box_char(char32_t glyph, double x0, double width,
                                    PenState last, double y0 = 0.0,
                                    double height = 1.0) {
  return make_char(glyph, {{x0, y0},
                           {x0 + width, y0 + height * 0.5},
                           {x0 + width * 0.5, y0 + height},
                           {x0 + width, y0, last}});
}

}  // namespace ink::test

#endif
