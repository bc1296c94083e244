#include "ink/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ink/preprocess.hpp"

namespace ink {

SentenceSample normalize_for_dtw(const SentenceSample& s) {
  return normalize_height(s, 1.0);
}

DtwResult dtw_distance(std::span<const TrajectoryPoint> gt,
                       std::span<const TrajectoryPoint> pred) {
  if (gt.empty() || pred.empty())
    throw Error(Errc::EmptySequence, "DTW needs non-empty sequences");

  // Roll two rows over the shorter sequence.
  std::span<const TrajectoryPoint> rows = gt;
  std::span<const TrajectoryPoint> cols = pred;
  if (cols.size() < rows.size()) std::swap(rows, cols);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(rows.size() + 1, kInf);
  std::vector<double> cur(rows.size() + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= cols.size(); ++i) {
    cur[0] = kInf;
    for (std::size_t j = 1; j <= rows.size(); ++j) {
      const double d = std::hypot(cols[i - 1].x - rows[j - 1].x,
                                  cols[i - 1].y - rows[j - 1].y);
      cur[j] = d + std::min({prev[j], cur[j - 1], prev[j - 1]});
    }
    std::swap(prev, cur);
    prev[0] = kInf;  // (i, 0) is unreachable for i >= 1
  }

  DtwResult r;
  r.raw = prev[rows.size()];
  r.gt_point_count = gt.size();
  r.normalized = r.raw / static_cast<double>(gt.size());
  return r;
}

DtwMacro dtw_writer_stats(
    std::span<const std::pair<std::string, std::vector<DtwResult>>> per_writer) {
  if (per_writer.empty())
    throw Error(Errc::InvalidArgument, "DTW stats need at least one writer");
  DtwMacro macro;
  for (const auto& [writer, results] : per_writer) {
    if (results.empty())
      throw Error(Errc::InvalidArgument,
                  "writer " + writer + " has no DTW results");
    DtwWriterRow row;
    row.writer_id = writer;
    row.sentence_count = results.size();
    for (const DtwResult& r : results) {
      row.mean_norm += r.normalized;
      row.mean_raw += r.raw;
    }
    const auto n = static_cast<double>(results.size());
    row.mean_norm /= n;
    row.mean_raw /= n;
    double var = 0.0;
    for (const DtwResult& r : results) {
      const double d = r.normalized - row.mean_norm;
      var += d * d;
    }
    row.std_norm = std::sqrt(var / n);
    macro.norm += row.mean_norm;
    macro.raw += row.mean_raw;
    macro.std_norm += row.std_norm;
    macro.per_writer.push_back(std::move(row));
  }
  const auto w = static_cast<double>(per_writer.size());
  macro.norm /= w;
  macro.raw /= w;
  macro.std_norm /= w;
  return macro;
}

}  // namespace ink
