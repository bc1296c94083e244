#ifndef INK_DTW_HPP
#define INK_DTW_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ink/types.hpp"

namespace ink {

struct DtwResult {
  double raw = 0.0;         // accumulated Euclidean cost on the optimal path
  double normalized = 0.0;  // raw / gt_point_count
  std::size_t gt_point_count = 0;
};

/// Translation to the bounding-box origin plus uniform scaling so the
/// y-extent equals 1.0; no rotation. Applied independently per sample.
SentenceSample normalize_for_dtw(const SentenceSample& s);

/// Classic boundary-anchored dynamic program with steps (1,0), (0,1), (1,1)
/// and Euclidean pointwise cost. Pen states are ignored. O(min(m,n)) memory.
DtwResult dtw_distance(std::span<const TrajectoryPoint> gt,
                       std::span<const TrajectoryPoint> pred);

struct DtwWriterRow {
  std::string writer_id;
  double mean_norm = 0.0;
  double mean_raw = 0.0;
  double std_norm = 0.0;  // population standard deviation of normalized cost
  std::size_t sentence_count = 0;
};

struct DtwMacro {
  double norm = 0.0;
  double raw = 0.0;
  double std_norm = 0.0;
  std::vector<DtwWriterRow> per_writer;
};

/// Per-writer means and population Std of the normalized cost, then an
/// equal-weight macro average across writers.
DtwMacro dtw_writer_stats(
    std::span<const std::pair<std::string, std::vector<DtwResult>>> per_writer);

}  // namespace ink

#endif
