#ifndef INK_REPORT_HPP
#define INK_REPORT_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ink/config.hpp"
#include "ink/csm.hpp"
#include "ink/dtw.hpp"
#include "ink/types.hpp"
#include "ink/vdl.hpp"

namespace ink {

/// Writes a double with 6 significant digits (CSV precision).
std::string format_csv_number(double v);
std::string format_csv_value(const std::optional<double>& v);  // "--" if unset

using SampleKey = std::pair<std::string, std::string>;  // (writer_id, sentence_id)

/// One (writer_id, sentence_id) key per line, comma-separated; '#' comments.
std::set<SampleKey> load_exclusion_list(const std::string& path);

/// Everything computed for one paired sentence.
struct SentenceEvidence {
  std::string writer_id;
  std::string sentence_id;
  SentenceBoundaries boundaries;
  RatePair rates;
  DtwResult dtw;
};

struct EvalReport {
  std::vector<WriterScores> writers;  // sorted by writer_id
  MacroReport macro;
  DtwMacro dtw;
  std::vector<SentenceEvidence> sentences;  // sorted by (writer, sentence)
  double epsilon = kDefaultEpsilon;
  double rho = kDefaultOverlapPenalty;
};

/// Pairs GT and prediction by (writer_id, sentence_id), applies the
/// exclusion list symmetrically, converts delta inputs, normalizes each
/// side independently, and computes CSM + DTW with writer-macro
/// aggregation. Deterministic for any thread count.
EvalReport evaluate_datasets(const Dataset& gt, const Dataset& pred,
                             const RunConfig& config,
                             const std::set<SampleKey>& exclusions, unsigned threads);

std::string report_to_csv(const EvalReport& r);
std::string report_to_json(const EvalReport& r);

/// Per-boundary audit rows (adjacent gaps and word gaps) as CSV.
std::string boundaries_to_csv(const EvalReport& r);

struct VdlSentenceRow {
  std::string writer_id;
  std::string sentence_id;
  SentenceVdl vdl;
};

struct VdlReport {
  std::vector<VdlSentenceRow> sentences;
  double macro_loss = 0.0;  // writer-macro mean of per-writer mean losses
  std::size_t skipped_no_boundaries = 0;
};

VdlReport evaluate_vdl(const Dataset& gt, const Dataset& pred, const RunConfig& config,
                       const std::set<SampleKey>& exclusions, unsigned threads);

std::string vdl_summary_csv(const VdlReport& r);
std::string vdl_detail_csv(const VdlReport& r);

}  // namespace ink

#endif
