#ifndef INK_CSM_HPP
#define INK_CSM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ink/boundary.hpp"

namespace ink {

// Shared numerical defaults: the stability epsilon and the overlap penalty.
constexpr double kDefaultEpsilon = 1e-6;
constexpr double kDefaultOverlapPenalty = 0.5;

struct CursiveCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  void add(int gt_positive, int pred_positive);
};

/// Per-sentence cursive rates, ground truth and predicted.
struct RatePair {
  double gt = 0.0;
  double pred = 0.0;
};

struct WriterScores {
  std::string writer_id;
  std::optional<double> f1_cursive;
  std::optional<double> cre;
  std::optional<double> kgs;
  std::optional<double> sss;
  CursiveCounts counts;
  std::size_t gt_positive_total = 0;
  std::size_t pred_positive_total = 0;
  std::size_t boundary_count = 0;  // sum of |B_i| over the writer's sentences
  std::size_t word_gap_count = 0;  // sum of |P_i|
  std::size_t sentence_count = 0;
};

struct MacroEntry {
  std::optional<double> mean;   // over writers with a defined value
  std::size_t writer_count = 0;  // writers contributing to the mean
};

struct MacroReport {
  MacroEntry f1_cursive;
  MacroEntry cre;
  MacroEntry kgs;
  MacroEntry sss;
  double epsilon = kDefaultEpsilon;
  double rho = kDefaultOverlapPenalty;
};

/// Writer-level F1 from pooled counts. Returns exactly 1 when neither side
/// has a positive boundary.
double f1_cursive_writer(const CursiveCounts& counts, std::size_t gt_positive_total,
                         std::size_t pred_positive_total, double epsilon);

/// 1 minus the mean absolute per-sentence cursive-rate error, clipped to
/// [0, 1].
double cre_writer(std::span<const RatePair> sentence_rates);

/// Overlap-penalized symmetric log-ratio similarity, shared by KGS and SSS.
double gap_similarity(double gt_gap, double pred_gap, double rho, double epsilon);

std::optional<double> kgs_writer(std::span<const AdjacentBoundary> boundaries,
                                 double rho, double epsilon);
std::optional<double> sss_writer(std::span<const WordGapBoundary> gaps, double rho,
                                 double epsilon);

MacroReport macro_aggregate(std::span<const WriterScores> per_writer);

/// Four defined CSM values; the operand of mean_csm_difference.
struct CsmQuad {
  std::optional<double> f1_cursive;
  std::optional<double> cre;
  std::optional<double> kgs;
  std::optional<double> sss;
};

CsmQuad quad_of(const WriterScores& w);
CsmQuad quad_of(const MacroReport& m);

/// (dF1 + dCRE + dKGS + dSSS) / 4 with d = a - b componentwise. Throws
/// ComponentUndefined when any side is missing a component.
double mean_csm_difference(const CsmQuad& a, const CsmQuad& b);

/// Fraction of items whose metric difference sign matches the human
/// majority direction (+1/-1); zero differences count as disagreement.
double rank_sign_agreement(std::span<const std::pair<double, int>> items);

/// Assembles one writer's scores from accumulated sentence evidence.
WriterScores score_writer(const std::string& writer_id,
                          std::span<const AdjacentBoundary> boundaries,
                          std::span<const WordGapBoundary> word_gaps,
                          std::span<const RatePair> rates, double rho, double epsilon);

}  // namespace ink

#endif
