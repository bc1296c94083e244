#ifndef INK_VDL_HPP
#define INK_VDL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ink/types.hpp"

namespace ink {

/// Vertical summary of one character: mean y, plus band means over the top
/// and bottom quantiles of the y values.
struct VerticalStats {
  double centroid = 0.0;
  double top = 0.0;
  double bottom = 0.0;
};

/// Previous-to-current vertical offsets at one character boundary.
struct BoundaryOffsets {
  double d_cen = 0.0;
  double d_top = 0.0;
  double d_bot = 0.0;
};

struct VdlWeights {
  double w_cen = 2.0;
  double w_top = 1.0;
  double w_bot = 1.0;
};

constexpr double kDefaultBandFraction = 0.1;

VerticalStats vertical_stats(const CharacterTrajectory& c, double band_fraction);

BoundaryOffsets boundary_offsets(const VerticalStats& prev, const VerticalStats& curr);

/// Mean over boundaries of the weighted squared offset mismatch,
/// predicted minus ground truth per component.
double vdl_loss(std::span<const BoundaryOffsets> gt_offsets,
                std::span<const BoundaryOffsets> pred_offsets,
                const VdlWeights& weights);

struct VdlBoundaryRow {
  std::size_t index = 0;  // boundary s between characters s and s+1
  BoundaryOffsets gt;
  BoundaryOffsets pred;
  double contribution = 0.0;  // this boundary's weighted squared mismatch
};

struct SentenceVdl {
  double loss = 0.0;
  std::vector<VdlBoundaryRow> rows;
};

/// Offsets over all adjacent non-space boundaries of a paired sentence.
/// Throws EmptyBoundarySet when the sentence has none.
SentenceVdl vdl_for_pair(const SentenceSample& gt, const SentenceSample& pred,
                         double band_fraction, const VdlWeights& weights);

}  // namespace ink

#endif
