#include "ink/csm.hpp"

#include <algorithm>
#include <cmath>

namespace ink {

void CursiveCounts::add(int gt_positive, int pred_positive) {
  if (pred_positive && gt_positive)
    ++tp;
  else if (pred_positive && !gt_positive)
    ++fp;
  else if (!pred_positive && gt_positive)
    ++fn;
}

double f1_cursive_writer(const CursiveCounts& counts, std::size_t gt_positive_total,
                         std::size_t pred_positive_total, double epsilon) {
  if (gt_positive_total == 0 && pred_positive_total == 0) return 1.0;
  const auto tp = static_cast<double>(counts.tp);
  const double prec = tp / (tp + static_cast<double>(counts.fp) + epsilon);
  const double rec = tp / (tp + static_cast<double>(counts.fn) + epsilon);
  return 2.0 * prec * rec / (prec + rec + epsilon);
}

double cre_writer(std::span<const RatePair> sentence_rates) {
  if (sentence_rates.empty())
    throw Error(Errc::InvalidArgument, "CRE needs at least one sentence");
  double mae = 0.0;
  for (const RatePair& r : sentence_rates) mae += std::abs(r.pred - r.gt);
  mae /= static_cast<double>(sentence_rates.size());
  return std::clamp(1.0 - mae, 0.0, 1.0);
}

double gap_similarity(double gt_gap, double pred_gap, double rho, double epsilon) {
  if (!std::isfinite(gt_gap) || !std::isfinite(pred_gap))
    throw Error(Errc::NonfiniteCoordinate, "gap similarity on non-finite gaps");
  const double penalty = (gt_gap < 0.0 || pred_gap < 0.0) ? rho : 1.0;
  const double ratio =
      (std::max(pred_gap, 0.0) + epsilon) / (std::max(gt_gap, 0.0) + epsilon);
  return penalty * std::exp(-std::abs(std::log(ratio)));
}

std::optional<double> kgs_writer(std::span<const AdjacentBoundary> boundaries,
                                 double rho, double epsilon) {
  if (boundaries.empty()) return std::nullopt;
  double sum = 0.0;
  for (const AdjacentBoundary& b : boundaries)
    sum += gap_similarity(b.gt_gap, b.pred_gap, rho, epsilon);
  return sum / (static_cast<double>(boundaries.size()) + epsilon);
}

std::optional<double> sss_writer(std::span<const WordGapBoundary> gaps, double rho,
                                 double epsilon) {
  if (gaps.empty()) return std::nullopt;
  double sum = 0.0;
  for (const WordGapBoundary& g : gaps)
    sum += gap_similarity(g.gt_width, g.pred_width, rho, epsilon);
  return sum / (static_cast<double>(gaps.size()) + epsilon);
}

namespace {

MacroEntry macro_mean(std::span<const WriterScores> writers,
                      std::optional<double> WriterScores::* field) {
  MacroEntry entry;
  double sum = 0.0;
  for (const WriterScores& w : writers) {
    if (w.*field) {
      sum += *(w.*field);
      ++entry.writer_count;
    }
  }
  if (entry.writer_count > 0) entry.mean = sum / static_cast<double>(entry.writer_count);
  return entry;
}

}  // namespace

MacroReport macro_aggregate(std::span<const WriterScores> per_writer) {
  if (per_writer.empty())
    throw Error(Errc::InvalidArgument, "macro aggregation needs at least one writer");
  MacroReport report;
  report.f1_cursive = macro_mean(per_writer, &WriterScores::f1_cursive);
  report.cre = macro_mean(per_writer, &WriterScores::cre);
  report.kgs = macro_mean(per_writer, &WriterScores::kgs);
  report.sss = macro_mean(per_writer, &WriterScores::sss);
  return report;
}

CsmQuad quad_of(const WriterScores& w) {
  return {w.f1_cursive, w.cre, w.kgs, w.sss};
}

CsmQuad quad_of(const MacroReport& m) {
  return {m.f1_cursive.mean, m.cre.mean, m.kgs.mean, m.sss.mean};
}

double mean_csm_difference(const CsmQuad& a, const CsmQuad& b) {
  const std::pair<std::optional<double>, std::optional<double>> pairs[4] = {
      {a.f1_cursive, b.f1_cursive}, {a.cre, b.cre}, {a.kgs, b.kgs}, {a.sss, b.sss}};
  double sum = 0.0;
  for (const auto& [lhs, rhs] : pairs) {
    if (!lhs || !rhs)
      throw Error(Errc::ComponentUndefined,
                  "mean CSM difference needs all four components on both sides");
    sum += *lhs - *rhs;
  }
  return sum / 4.0;
}

double rank_sign_agreement(std::span<const std::pair<double, int>> items) {
  if (items.empty())
    throw Error(Errc::InvalidArgument, "rank-sign agreement needs at least one item");
  std::size_t agree = 0;
  for (const auto& [diff, direction] : items) {
    if (direction != 1 && direction != -1)
      throw Error(Errc::InvalidArgument, "human direction must be +1 or -1");
    const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
    if (sign == direction) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(items.size());
}

WriterScores score_writer(const std::string& writer_id,
                          std::span<const AdjacentBoundary> boundaries,
                          std::span<const WordGapBoundary> word_gaps,
                          std::span<const RatePair> rates, double rho, double epsilon) {
  WriterScores w;
  w.writer_id = writer_id;
  w.sentence_count = rates.size();
  w.boundary_count = boundaries.size();
  w.word_gap_count = word_gaps.size();
  for (const AdjacentBoundary& b : boundaries) {
    w.counts.add(b.gt_cursive, b.pred_cursive);
    w.gt_positive_total += static_cast<std::size_t>(b.gt_cursive);
    w.pred_positive_total += static_cast<std::size_t>(b.pred_cursive);
  }
  if (w.boundary_count > 0) {
    w.f1_cursive =
        f1_cursive_writer(w.counts, w.gt_positive_total, w.pred_positive_total, epsilon);
    if (!rates.empty()) w.cre = cre_writer(rates);
  }
  w.kgs = kgs_writer(boundaries, rho, epsilon);
  w.sss = sss_writer(word_gaps, rho, epsilon);
  return w;
}

}  // namespace ink
