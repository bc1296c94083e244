#include "ink/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ink {

namespace {

struct StrokeRange {
  std::size_t begin;
  std::size_t end;  // one past the last point
};

// A stroke ends at any point that is not PEN_MOVE; the marked point belongs
// to the stroke it terminates.
std::vector<StrokeRange> split_strokes(const std::vector<TrajectoryPoint>& pts) {
  std::vector<StrokeRange> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].pen != PenState::PenMove) {
      out.push_back({begin, i + 1});
      begin = i + 1;
    }
  }
  if (begin < pts.size()) out.push_back({begin, pts.size()});
  return out;
}

double point_distance(const TrajectoryPoint& a, const TrajectoryPoint& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

double perpendicular_distance(const TrajectoryPoint& p, const TrajectoryPoint& a,
                              const TrajectoryPoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return point_distance(p, a);
  return std::abs(dy * (p.x - a.x) - dx * (p.y - a.y)) / len;
}

}  // namespace

void PreprocessConfig::validate() const {
  if (!(deskew_min_angle >= 0.0) || !(deskew_min_angle < deskew_max_angle))
    throw Error(Errc::InvalidArgument,
                "deskew angles must satisfy 0 <= min < max");
  if (resample_max_points < 2)
    throw Error(Errc::InvalidArgument, "resample_max_points must be >= 2");
  if (!(target_height > 0.0))
    throw Error(Errc::InvalidArgument, "target_height must be positive");
  if (rdp_epsilon < 0.0)
    throw Error(Errc::InvalidArgument, "rdp_epsilon must be non-negative");
}

const char* deskew_skip_name(DeskewSkip s) {
  switch (s) {
    case DeskewSkip::None: return "NONE";
    case DeskewSkip::TooSmall: return "TOO_SMALL";
    case DeskewSkip::TooLarge: return "TOO_LARGE";
  }
  return "?";
}

SentenceSample delta_to_absolute(const SentenceSample& s) {
  if (s.mode == CoordinateMode::Absolute)
    throw Error(Errc::AlreadyAbsolute,
                "sample " + s.writer_id + "/" + s.sentence_id +
                    " already has absolute coordinates");
  SentenceSample out = s;
  out.mode = CoordinateMode::Absolute;
  double x = 0.0;
  double y = 0.0;
  for (CharacterTrajectory& c : out.characters) {
    for (TrajectoryPoint& p : c.points) {
      x += p.x;
      y += p.y;
      p.x = x;
      p.y = y;
    }
  }
  return out;
}

std::pair<SentenceSample, DeskewResult> deskew_sentence(const SentenceSample& s,
                                                        const PreprocessConfig& config) {
  require_absolute(s);
  double sx = 0.0, sy = 0.0;
  std::size_t n = 0;
  for (const auto& c : s.characters) {
    for (const auto& p : c.points) {
      sx += p.x;
      sy += p.y;
      ++n;
    }
  }
  if (n < 2)
    throw Error(Errc::DegenerateFit, "need at least 2 points for a line fit");
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& c : s.characters) {
    for (const auto& p : c.points) {
      sxx += (p.x - mx) * (p.x - mx);
      sxy += (p.x - mx) * (p.y - my);
    }
  }
  if (sxx == 0.0)
    throw Error(Errc::DegenerateFit, "all x coordinates are equal");

  DeskewResult result;
  result.angle_radians = std::atan(sxy / sxx);
  const double mag = std::abs(result.angle_radians);
  if (mag < config.deskew_min_angle) {
    result.skip_reason = DeskewSkip::TooSmall;
    return {s, result};
  }
  if (mag > config.deskew_max_angle) {
    result.skip_reason = DeskewSkip::TooLarge;
    return {s, result};
  }
  result.applied = true;

  const double cos_t = std::cos(-result.angle_radians);
  const double sin_t = std::sin(-result.angle_radians);
  SentenceSample out = s;
  for (CharacterTrajectory& c : out.characters) {
    for (TrajectoryPoint& p : c.points) {
      const double dx = p.x - mx;
      const double dy = p.y - my;
      p.x = mx + cos_t * dx - sin_t * dy;
      p.y = my + sin_t * dx + cos_t * dy;
    }
  }
  return {out, result};
}

namespace {

// Exact target count, equidistant along the polyline; first and last input
// points are copied verbatim so pen-state events cannot move.
std::vector<TrajectoryPoint> resample_stroke(const std::vector<TrajectoryPoint>& pts,
                                             std::size_t begin, std::size_t end,
                                             std::size_t target) {
  const std::size_t n = end - begin;
  std::vector<TrajectoryPoint> out;
  out.reserve(target);
  std::vector<double> cum(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    cum[i] = cum[i - 1] + point_distance(pts[begin + i - 1], pts[begin + i]);
  const double total = cum[n - 1];

  out.push_back(pts[begin]);
  for (std::size_t k = 1; k + 1 < target; ++k) {
    TrajectoryPoint p;
    p.pen = PenState::PenMove;
    if (total == 0.0) {
      p.x = pts[begin].x;
      p.y = pts[begin].y;
    } else {
      const double target_s =
          total * static_cast<double>(k) / static_cast<double>(target - 1);
      auto it = std::lower_bound(cum.begin(), cum.end(), target_s);
      std::size_t j = static_cast<std::size_t>(it - cum.begin());
      if (j == 0) j = 1;
      const double seg = cum[j] - cum[j - 1];
      const double t = seg == 0.0 ? 0.0 : (target_s - cum[j - 1]) / seg;
      const TrajectoryPoint& a = pts[begin + j - 1];
      const TrajectoryPoint& b = pts[begin + j];
      p.x = a.x + t * (b.x - a.x);
      p.y = a.y + t * (b.y - a.y);
    }
    out.push_back(p);
  }
  if (target >= 2) out.push_back(pts[end - 1]);
  return out;
}

}  // namespace

CharacterTrajectory resample_arclength(const CharacterTrajectory& c,
                                       std::size_t target_points) {
  if (target_points < 2)
    throw Error(Errc::InvalidArgument, "resample target must be >= 2");
  if (c.points.size() < 2)
    throw Error(Errc::TooFewPoints, "cannot resample fewer than 2 points");

  const auto strokes = split_strokes(c.points);
  for (const StrokeRange& st : strokes)
    if (st.end - st.begin < 2)
      throw Error(Errc::TooFewPoints, "stroke with a single point");
  if (target_points < 2 * strokes.size())
    throw Error(Errc::InvalidArgument,
                "target " + std::to_string(target_points) + " cannot cover " +
                    std::to_string(strokes.size()) + " strokes at 2 points each");

  // Proportional allocation by arc length, largest remainder, 2-point floor.
  std::vector<double> lengths(strokes.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    for (std::size_t k = strokes[i].begin + 1; k < strokes[i].end; ++k)
      lengths[i] += point_distance(c.points[k - 1], c.points[k]);
    total += lengths[i];
  }
  std::vector<std::size_t> alloc(strokes.size(), 2);
  std::size_t extra = target_points - 2 * strokes.size();
  if (extra > 0) {
    std::vector<double> frac(strokes.size(), 0.0);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < strokes.size(); ++i) {
      const double share =
          total == 0.0 ? static_cast<double>(extra) / static_cast<double>(strokes.size())
                       : static_cast<double>(extra) * lengths[i] / total;
      const auto base = static_cast<std::size_t>(std::floor(share));
      alloc[i] += base;
      assigned += base;
      frac[i] = share - std::floor(share);
    }
    std::vector<std::size_t> order(strokes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&frac](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t r = 0; r < extra - assigned; ++r) ++alloc[order[r]];
  }

  CharacterTrajectory out;
  out.glyph = c.glyph;
  out.points.reserve(target_points);
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    auto pts = resample_stroke(c.points, strokes[i].begin, strokes[i].end, alloc[i]);
    out.points.insert(out.points.end(), pts.begin(), pts.end());
  }
  return out;
}

namespace {

void rdp_mark(const std::vector<TrajectoryPoint>& pts, std::size_t first,
              std::size_t last, double epsilon, std::vector<char>& keep) {
  if (last <= first + 1) return;
  double max_dist = 0.0;
  std::size_t split = first;
  for (std::size_t i = first + 1; i < last; ++i) {
    const double d = perpendicular_distance(pts[i], pts[first], pts[last]);
    if (d > max_dist) {
      max_dist = d;
      split = i;
    }
  }
  if (max_dist > epsilon) {
    keep[split] = 1;
    rdp_mark(pts, first, split, epsilon, keep);
    rdp_mark(pts, split, last, epsilon, keep);
  }
}

}  // namespace

CharacterTrajectory rdp_simplify(const CharacterTrajectory& c, double epsilon) {
  if (epsilon < 0.0)
    throw Error(Errc::InvalidArgument, "rdp epsilon must be non-negative");
  if (epsilon == 0.0 || c.points.size() < 3) return c;

  std::vector<char> keep(c.points.size(), 0);
  for (const StrokeRange& st : split_strokes(c.points)) {
    keep[st.begin] = 1;
    keep[st.end - 1] = 1;
    if (st.end - st.begin >= 3) rdp_mark(c.points, st.begin, st.end - 1, epsilon, keep);
  }
  CharacterTrajectory out;
  out.glyph = c.glyph;
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (keep[i]) out.points.push_back(c.points[i]);
  return out;
}

SentenceSample normalize_height(const SentenceSample& s, double target_height) {
  require_absolute(s);
  if (!(target_height > 0.0))
    throw Error(Errc::InvalidArgument, "target height must be positive");
  double xmin = 0.0, ymin = 0.0, ymax = 0.0;
  bool any = false;
  for (const auto& c : s.characters) {
    for (const auto& p : c.points) {
      if (!any) {
        xmin = p.x;
        ymin = ymax = p.y;
        any = true;
      } else {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
    }
  }
  const double extent = ymax - ymin;
  if (!any || extent <= 0.0)
    throw Error(Errc::ZeroHeight, "sentence y-extent is zero");

  // Exact fixpoint: re-normalizing a normalized sample must not perturb
  // coordinates, so rerunning a pipeline reproduces its own output.
  if (xmin == 0.0 && ymin == 0.0 &&
      std::abs(extent - target_height) <= 1e-12 * target_height)
    return s;

  const double scale = target_height / extent;
  SentenceSample out = s;
  for (CharacterTrajectory& c : out.characters) {
    for (TrajectoryPoint& p : c.points) {
      p.x = (p.x - xmin) * scale;
      p.y = (p.y - ymin) * scale;
    }
  }
  return out;
}

std::string SegmentationVerdict::describe() const {
  switch (status) {
    case Status::Accept: return "ACCEPT";
    case Status::DurationMismatch: return "REJECT(duration mismatch)";
    case Status::BoundaryMisalignment:
      return "REJECT(boundary misalignment at point " +
             std::to_string(failing_boundary) + ")";
  }
  return "?";
}

SegmentationVerdict validate_segmentation(const SentenceSample& s,
                                          std::size_t raw_point_total,
                                          std::size_t tolerance) {
  require_absolute(s);
  SegmentationVerdict v;
  if (s.total_points() != raw_point_total) {
    v.status = SegmentationVerdict::Status::DurationMismatch;
    return v;
  }
  // 1-based global indices of stroke-end markers.
  std::vector<std::size_t> markers;
  std::size_t index = 0;
  for (const auto& c : s.characters) {
    for (const auto& p : c.points) {
      ++index;
      if (p.pen != PenState::PenMove) markers.push_back(index);
    }
  }
  std::size_t boundary = 0;
  for (const auto& c : s.characters) {
    if (c.points.empty()) continue;
    boundary += c.points.size();
    auto it = std::lower_bound(markers.begin(), markers.end(), boundary);
    bool ok = false;
    if (it != markers.end() && *it - boundary <= tolerance) ok = true;
    if (!ok && it != markers.begin() && boundary - *(it - 1) <= tolerance) ok = true;
    if (!ok) {
      v.status = SegmentationVerdict::Status::BoundaryMisalignment;
      v.failing_boundary = boundary;
      return v;
    }
  }
  return v;
}

CharacterTrajectory enforce_point_budget(const CharacterTrajectory& c,
                                         std::size_t max_points) {
  if (max_points < 2)
    throw Error(Errc::InvalidArgument, "point budget must be >= 2");
  if (c.points.size() <= max_points) return c;
  return resample_arclength(c, max_points);
}

PipelineOutcome run_pipeline(const SentenceSample& input, const PreprocessConfig& config) {
  config.validate();
  PipelineOutcome out;
  try {
    const std::size_t raw_total = input.total_points();
    SentenceSample s =
        input.mode == CoordinateMode::Delta ? delta_to_absolute(input) : input;

    out.verdict = validate_segmentation(s, raw_total, config.segmentation_tolerance);
    if (!out.verdict.accepted()) {
      out.reject_reason = out.verdict.describe();
      return out;
    }
    if (config.deskew_enabled) {
      auto [deskewed, result] = deskew_sentence(s, config);
      s = std::move(deskewed);
      out.deskew = result;
    }
    s = normalize_height(s, config.target_height);
    bool points_changed = false;
    for (CharacterTrajectory& c : s.characters) {
      if (c.points.size() < 2) continue;
      const std::size_t before = c.points.size();
      c = enforce_point_budget(c, config.resample_max_points);
      if (config.rdp_epsilon > 0.0) c = rdp_simplify(c, config.rdp_epsilon);
      points_changed = points_changed || c.points.size() != before;
    }
    // Resampling and RDP move or drop bounding-box extremes, so the height
    // guarantee is re-established afterwards.
    if (points_changed) s = normalize_height(s, config.target_height);
    out.sample = std::move(s);
    out.kept = true;
  } catch (const Error& e) {
    out.kept = false;
    out.reject_reason = e.what();
  }
  return out;
}

}  // namespace ink
