#ifndef INK_PREPROCESS_HPP
#define INK_PREPROCESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "ink/types.hpp"

namespace ink {

constexpr double kPi = 3.14159265358979323846;

struct PreprocessConfig {
  double deskew_min_angle = 0.5 * kPi / 180.0;  // radians
  double deskew_max_angle = 30.0 * kPi / 180.0;
  bool deskew_enabled = true;
  std::size_t resample_max_points = 160;
  double rdp_epsilon = 0.002;  // normalized units; 0 disables
  double target_height = 1.0;
  std::size_t segmentation_tolerance = 3;

  void validate() const;  // throws InvalidArgument on a bad combination
};

enum class DeskewSkip { None, TooSmall, TooLarge };

struct DeskewResult {
  double angle_radians = 0.0;
  bool applied = false;
  DeskewSkip skip_reason = DeskewSkip::None;
};

const char* deskew_skip_name(DeskewSkip s);

/// Cumulative summation of deltas in sequence order, continuing across
/// character boundaries; point k becomes the sum of deltas 1..k.
SentenceSample delta_to_absolute(const SentenceSample& s);

/// Least-squares line fit over all sentence points; rotates by -theta about
/// the sentence centroid when min <= |theta| <= max, otherwise returns the
/// sample unchanged with the matching skip reason.
std::pair<SentenceSample, DeskewResult> deskew_sentence(const SentenceSample& s,
                                                        const PreprocessConfig& config);

/// Equidistant arc-length resampling. The target is split across pen-down
/// strokes proportionally to stroke arc length (minimum 2 points each);
/// stroke endpoints are reproduced exactly, pen states included.
CharacterTrajectory resample_arclength(const CharacterTrajectory& c,
                                       std::size_t target_points);

/// Ramer-Douglas-Peucker per stroke. Output points are a subset of the
/// input; stroke endpoints always survive. epsilon == 0 returns the input.
CharacterTrajectory rdp_simplify(const CharacterTrajectory& c, double epsilon);

/// Uniform scale so the sentence y-extent equals target_height, bounding-box
/// minimum translated to the origin. Exactly idempotent.
SentenceSample normalize_height(const SentenceSample& s, double target_height);

struct SegmentationVerdict {
  enum class Status { Accept, DurationMismatch, BoundaryMisalignment };
  Status status = Status::Accept;
  std::size_t failing_boundary = 0;  // 1-based point index, misalignment only

  bool accepted() const { return status == Status::Accept; }
  std::string describe() const;
};

/// Checks that per-character durations sum to the raw point total and that
/// every implied character boundary lies within +/-tolerance points of a
/// stroke-end marker (PEN_UP, CURSIVE_EOC, or END_OF_CHAR).
SegmentationVerdict validate_segmentation(const SentenceSample& s,
                                          std::size_t raw_point_total,
                                          std::size_t tolerance);

/// Identity when the character fits the budget, arc-length resampling down
/// to max_points otherwise.
CharacterTrajectory enforce_point_budget(const CharacterTrajectory& c,
                                         std::size_t max_points);

struct PipelineOutcome {
  bool kept = false;
  std::string reject_reason;  // empty when kept
  SentenceSample sample;      // processed sample when kept
  std::optional<DeskewResult> deskew;  // unset when deskewing is disabled
  SegmentationVerdict verdict;
};

/// Fixed-order pipeline: delta-to-absolute, segmentation validation,
/// deskew, height normalization, per-character point budget, weak RDP.
/// Never throws for per-sample data problems; those become rejections.
PipelineOutcome run_pipeline(const SentenceSample& s, const PreprocessConfig& config);

}  // namespace ink

#endif
