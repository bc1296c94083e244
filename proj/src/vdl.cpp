#include "ink/vdl.hpp"

#include <algorithm>
#include <cmath>

#include "ink/boundary.hpp"

namespace ink {

VerticalStats vertical_stats(const CharacterTrajectory& c, double band_fraction) {
  if (c.points.empty())
    throw Error(Errc::EmptyCharacter, "vertical stats of an empty character");
  if (!(band_fraction > 0.0) || band_fraction > 0.5)
    throw Error(Errc::InvalidArgument, "band fraction must lie in (0, 0.5]");

  std::vector<double> ys;
  ys.reserve(c.points.size());
  double sum = 0.0;
  for (const TrajectoryPoint& p : c.points) {
    ys.push_back(p.y);
    sum += p.y;
  }
  std::sort(ys.begin(), ys.end());

  const std::size_t n = ys.size();
  const auto band = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(band_fraction * static_cast<double>(n) +
                                             1e-12)));
  VerticalStats stats;
  stats.centroid = sum / static_cast<double>(n);
  double top = 0.0, bottom = 0.0;
  for (std::size_t i = 0; i < band; ++i) {
    bottom += ys[i];
    top += ys[n - 1 - i];
  }
  stats.top = top / static_cast<double>(band);
  stats.bottom = bottom / static_cast<double>(band);
  return stats;
}

BoundaryOffsets boundary_offsets(const VerticalStats& prev, const VerticalStats& curr) {
  return {curr.centroid - prev.centroid, curr.top - prev.top,
          curr.bottom - prev.bottom};
}

namespace {

double boundary_mismatch(const BoundaryOffsets& gt, const BoundaryOffsets& pred,
                         const VdlWeights& w) {
  const double dc = pred.d_cen - gt.d_cen;
  const double dt = pred.d_top - gt.d_top;
  const double db = pred.d_bot - gt.d_bot;
  return w.w_cen * dc * dc + w.w_top * dt * dt + w.w_bot * db * db;
}

}  // namespace

double vdl_loss(std::span<const BoundaryOffsets> gt_offsets,
                std::span<const BoundaryOffsets> pred_offsets,
                const VdlWeights& weights) {
  if (gt_offsets.size() != pred_offsets.size())
    throw Error(Errc::LengthMismatch,
                "offset lists differ in length: " + std::to_string(gt_offsets.size()) +
                    " vs " + std::to_string(pred_offsets.size()));
  if (gt_offsets.empty())
    throw Error(Errc::EmptyBoundarySet, "VDL needs at least one boundary");
  double sum = 0.0;
  for (std::size_t i = 0; i < gt_offsets.size(); ++i)
    sum += boundary_mismatch(gt_offsets[i], pred_offsets[i], weights);
  return sum / static_cast<double>(gt_offsets.size());
}

SentenceVdl vdl_for_pair(const SentenceSample& gt, const SentenceSample& pred,
                         double band_fraction, const VdlWeights& weights) {
  require_absolute(gt);
  require_absolute(pred);
  if (gt.text != pred.text)
    throw Error(Errc::TextMismatch, "paired samples disagree on text");

  const auto bounds = adjacent_boundaries(gt.text);
  if (bounds.empty())
    throw Error(Errc::EmptyBoundarySet,
                "sentence " + gt.writer_id + "/" + gt.sentence_id +
                    " has no adjacent non-space boundary");

  SentenceVdl out;
  double sum = 0.0;
  for (std::size_t s : bounds) {
    VdlBoundaryRow row;
    row.index = s;
    row.gt = boundary_offsets(vertical_stats(gt.characters[s - 1], band_fraction),
                              vertical_stats(gt.characters[s], band_fraction));
    row.pred = boundary_offsets(vertical_stats(pred.characters[s - 1], band_fraction),
                                vertical_stats(pred.characters[s], band_fraction));
    row.contribution = boundary_mismatch(row.gt, row.pred, weights);
    sum += row.contribution;
    out.rows.push_back(row);
  }
  out.loss = sum / static_cast<double>(out.rows.size());
  return out;
}

}  // namespace ink
