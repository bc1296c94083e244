#ifndef INK_SVG_RENDER_HPP
#define INK_SVG_RENDER_HPP

#include <string>

#include "ink/types.hpp"

namespace ink {

struct RenderOptions {
  double height_px = 160.0;  // every sentence renders at the same height
  double margin_px = 8.0;
  double stroke_width = 2.0;
  bool mark_cursive = false;  // dot on CURSIVE_EOC boundary points
};

/// Renders pen-down polylines; PEN_UP and END_OF_CHAR break the path,
/// CURSIVE_EOC continues it into the next character. Output is
/// byte-deterministic for fixed input and options.
std::string render_svg(const SentenceSample& s, const RenderOptions& options);

}  // namespace ink

#endif
