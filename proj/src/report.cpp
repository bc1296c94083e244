#include "ink/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

#include "ink/parallel.hpp"
#include "ink/preprocess.hpp"

namespace ink {

namespace {

using nlohmann::json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

json opt_to_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string format_csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string format_csv_value(const std::optional<double>& v) {
  return v ? format_csv_number(*v) : "--";
}

std::set<SampleKey> load_exclusion_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::IoError, "cannot open exclusion list: " + path);
  std::set<SampleKey> keys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const std::size_t comma = stripped.find(',');
    if (comma == std::string::npos)
      throw Error(Errc::MalformedRecord, "expected writer_id,sentence_id", line_no);
    keys.insert({trim(stripped.substr(0, comma)), trim(stripped.substr(comma + 1))});
  }
  return keys;
}

namespace {

struct PairedSample {
  const SentenceSample* gt;
  const SentenceSample* pred;
};

std::vector<PairedSample> pair_datasets(const Dataset& gt, const Dataset& pred,
                                        const std::set<SampleKey>& exclusions) {
  std::map<SampleKey, const SentenceSample*> pred_index;
  for (const SentenceSample& s : pred.samples) {
    if (exclusions.count({s.writer_id, s.sentence_id})) continue;
    pred_index[{s.writer_id, s.sentence_id}] = &s;
  }
  std::map<SampleKey, PairedSample> paired;
  for (const SentenceSample& s : gt.samples) {
    const SampleKey key{s.writer_id, s.sentence_id};
    if (exclusions.count(key)) continue;
    auto it = pred_index.find(key);
    if (it == pred_index.end())
      throw Error(Errc::UnpairedSample,
                  "no prediction for " + s.writer_id + "/" + s.sentence_id);
    if (s.text != it->second->text)
      throw Error(Errc::TextMismatch,
                  "GT and prediction disagree on text for " + s.writer_id + "/" +
                      s.sentence_id);
    paired[key] = {&s, it->second};
    pred_index.erase(it);
  }
  if (!pred_index.empty())
    throw Error(Errc::UnpairedSample,
                "prediction " + pred_index.begin()->first.first + "/" +
                    pred_index.begin()->first.second + " has no ground truth");

  std::vector<PairedSample> out;
  out.reserve(paired.size());
  for (const auto& [key, pair] : paired) out.push_back(pair);
  return out;
}

SentenceSample prepare_sample(const SentenceSample& s) {
  SentenceSample abs = s.mode == CoordinateMode::Delta ? delta_to_absolute(s) : s;
  return normalize_for_dtw(abs);
}

}  // namespace

EvalReport evaluate_datasets(const Dataset& gt, const Dataset& pred,
                             const RunConfig& config,
                             const std::set<SampleKey>& exclusions, unsigned threads) {
  config.validate();
  const std::vector<PairedSample> pairs = pair_datasets(gt, pred, exclusions);
  if (pairs.empty())
    throw Error(Errc::InvalidArgument, "no paired samples to evaluate");

  EvalReport report;
  report.epsilon = config.epsilon;
  report.rho = config.rho;
  report.sentences.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const SentenceSample gt_s = prepare_sample(*pairs[i].gt);
    SentenceSample pred_s = prepare_sample(*pairs[i].pred);
    if (config.convert_eoc)
      pred_s = convert_eoc_to_cursive(pred_s, config.tau_conn);

    SentenceEvidence& e = report.sentences[i];
    e.writer_id = gt_s.writer_id;
    e.sentence_id = gt_s.sentence_id;
    e.boundaries = collect_boundaries(gt_s, pred_s);
    e.rates = {cursive_rate(gt_s, config.epsilon), cursive_rate(pred_s, config.epsilon)};
    e.dtw = dtw_distance(flatten_points(gt_s), flatten_points(pred_s));
  });

  // Writer grouping; evidence is already sorted by (writer, sentence).
  std::vector<std::pair<std::string, std::vector<DtwResult>>> dtw_groups;
  std::size_t i = 0;
  while (i < report.sentences.size()) {
    const std::string& writer = report.sentences[i].writer_id;
    std::vector<AdjacentBoundary> boundaries;
    std::vector<WordGapBoundary> word_gaps;
    std::vector<RatePair> rates;
    std::vector<DtwResult> dtw_results;
    for (; i < report.sentences.size() && report.sentences[i].writer_id == writer; ++i) {
      const SentenceEvidence& e = report.sentences[i];
      boundaries.insert(boundaries.end(), e.boundaries.adjacent.begin(),
                        e.boundaries.adjacent.end());
      word_gaps.insert(word_gaps.end(), e.boundaries.word_gaps.begin(),
                       e.boundaries.word_gaps.end());
      rates.push_back(e.rates);
      dtw_results.push_back(e.dtw);
    }
    report.writers.push_back(
        score_writer(writer, boundaries, word_gaps, rates, config.rho, config.epsilon));
    dtw_groups.emplace_back(writer, std::move(dtw_results));
  }

  // Cursive metrics are structurally undefined when neither side has a
  // single positive boundary anywhere (the no-cursive protocol case).
  std::size_t gt_pos = 0, pred_pos = 0;
  for (const WriterScores& w : report.writers) {
    gt_pos += w.gt_positive_total;
    pred_pos += w.pred_positive_total;
  }
  if (gt_pos == 0 && pred_pos == 0) {
    for (WriterScores& w : report.writers) {
      w.f1_cursive.reset();
      w.cre.reset();
    }
  }

  report.macro = macro_aggregate(report.writers);
  report.macro.epsilon = config.epsilon;
  report.macro.rho = config.rho;
  report.dtw = dtw_writer_stats(dtw_groups);
  return report;
}

std::string report_to_csv(const EvalReport& r) {
  std::string out =
      "writer_id,sentences,boundaries,word_gaps,f1_cursive,cre,kgs,sss,"
      "dtw_norm,dtw_raw,dtw_std\n";
  std::size_t total_sentences = 0, total_boundaries = 0, total_gaps = 0;
  for (std::size_t i = 0; i < r.writers.size(); ++i) {
    const WriterScores& w = r.writers[i];
    const DtwWriterRow& d = r.dtw.per_writer[i];
    total_sentences += w.sentence_count;
    total_boundaries += w.boundary_count;
    total_gaps += w.word_gap_count;
    out += csv_escape(w.writer_id);
    out += ',' + std::to_string(w.sentence_count);
    out += ',' + std::to_string(w.boundary_count);
    out += ',' + std::to_string(w.word_gap_count);
    out += ',' + format_csv_value(w.f1_cursive);
    out += ',' + format_csv_value(w.cre);
    out += ',' + format_csv_value(w.kgs);
    out += ',' + format_csv_value(w.sss);
    out += ',' + format_csv_number(d.mean_norm);
    out += ',' + format_csv_number(d.mean_raw);
    out += ',' + format_csv_number(d.std_norm);
    out += '\n';
  }
  out += "MACRO," + std::to_string(total_sentences) + ',' +
         std::to_string(total_boundaries) + ',' + std::to_string(total_gaps);
  out += ',' + format_csv_value(r.macro.f1_cursive.mean);
  out += ',' + format_csv_value(r.macro.cre.mean);
  out += ',' + format_csv_value(r.macro.kgs.mean);
  out += ',' + format_csv_value(r.macro.sss.mean);
  out += ',' + format_csv_number(r.dtw.norm);
  out += ',' + format_csv_number(r.dtw.raw);
  out += ',' + format_csv_number(r.dtw.std_norm);
  out += '\n';
  return out;
}

std::string report_to_json(const EvalReport& r) {
  json doc;
  doc["epsilon"] = r.epsilon;
  doc["rho"] = r.rho;
  json writers = json::array();
  for (std::size_t i = 0; i < r.writers.size(); ++i) {
    const WriterScores& w = r.writers[i];
    const DtwWriterRow& d = r.dtw.per_writer[i];
    json jw;
    jw["writer_id"] = w.writer_id;
    jw["sentences"] = w.sentence_count;
    jw["boundaries"] = w.boundary_count;
    jw["word_gaps"] = w.word_gap_count;
    jw["f1_cursive"] = opt_to_json(w.f1_cursive);
    jw["cre"] = opt_to_json(w.cre);
    jw["kgs"] = opt_to_json(w.kgs);
    jw["sss"] = opt_to_json(w.sss);
    jw["dtw_norm"] = d.mean_norm;
    jw["dtw_raw"] = d.mean_raw;
    jw["dtw_std"] = d.std_norm;
    writers.push_back(std::move(jw));
  }
  doc["writers"] = std::move(writers);
  json macro;
  macro["f1_cursive"] = {{"mean", opt_to_json(r.macro.f1_cursive.mean)},
                         {"writers", r.macro.f1_cursive.writer_count}};
  macro["cre"] = {{"mean", opt_to_json(r.macro.cre.mean)},
                  {"writers", r.macro.cre.writer_count}};
  macro["kgs"] = {{"mean", opt_to_json(r.macro.kgs.mean)},
                  {"writers", r.macro.kgs.writer_count}};
  macro["sss"] = {{"mean", opt_to_json(r.macro.sss.mean)},
                  {"writers", r.macro.sss.writer_count}};
  macro["dtw_norm"] = r.dtw.norm;
  macro["dtw_raw"] = r.dtw.raw;
  macro["dtw_std"] = r.dtw.std_norm;
  doc["macro"] = std::move(macro);
  return doc.dump(2) + "\n";
}

namespace {

std::string format_audit_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string boundaries_to_csv(const EvalReport& r) {
  std::string out =
      "writer_id,sentence_id,kind,s,u,v,gt_gap,pred_gap,gt_cursive,pred_cursive\n";
  for (const SentenceEvidence& e : r.sentences) {
    const std::string prefix = csv_escape(e.writer_id) + ',' + csv_escape(e.sentence_id);
    for (const AdjacentBoundary& b : e.boundaries.adjacent) {
      out += prefix + ",adjacent," + std::to_string(b.index) + ",,," +
             format_audit_number(b.gt_gap) + ',' + format_audit_number(b.pred_gap) +
             ',' + std::to_string(b.gt_cursive) + ',' + std::to_string(b.pred_cursive) +
             '\n';
    }
    for (const WordGapBoundary& g : e.boundaries.word_gaps) {
      out += prefix + ",word_gap,," + std::to_string(g.u) + ',' + std::to_string(g.v) +
             ',' + format_audit_number(g.gt_width) + ',' +
             format_audit_number(g.pred_width) + ",,\n";
    }
  }
  return out;
}

VdlReport evaluate_vdl(const Dataset& gt, const Dataset& pred, const RunConfig& config,
                       const std::set<SampleKey>& exclusions, unsigned threads) {
  config.validate();
  const std::vector<PairedSample> pairs = pair_datasets(gt, pred, exclusions);
  if (pairs.empty())
    throw Error(Errc::InvalidArgument, "no paired samples to evaluate");

  struct Slot {
    std::string writer_id;
    std::string sentence_id;
    std::optional<SentenceVdl> vdl;
  };
  std::vector<Slot> slots(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const SentenceSample gt_s = prepare_sample(*pairs[i].gt);
    const SentenceSample pred_s = prepare_sample(*pairs[i].pred);
    slots[i].writer_id = gt_s.writer_id;
    slots[i].sentence_id = gt_s.sentence_id;
    try {
      slots[i].vdl = vdl_for_pair(gt_s, pred_s, config.band_fraction, config.vdl_weights);
    } catch (const Error& e) {
      if (e.code() != Errc::EmptyBoundarySet) throw;
    }
  });

  VdlReport report;
  std::map<std::string, std::pair<double, std::size_t>> writer_sums;
  for (Slot& s : slots) {
    if (!s.vdl) {
      ++report.skipped_no_boundaries;
      continue;
    }
    auto& [sum, count] = writer_sums[s.writer_id];
    sum += s.vdl->loss;
    ++count;
    report.sentences.push_back({s.writer_id, s.sentence_id, std::move(*s.vdl)});
  }
  if (!writer_sums.empty()) {
    double macro = 0.0;
    for (const auto& [writer, sums] : writer_sums)
      macro += sums.first / static_cast<double>(sums.second);
    report.macro_loss = macro / static_cast<double>(writer_sums.size());
  }
  return report;
}

std::string vdl_summary_csv(const VdlReport& r) {
  std::string out = "writer_id,sentence_id,boundaries,vdl\n";
  for (const VdlSentenceRow& row : r.sentences) {
    out += csv_escape(row.writer_id) + ',' + csv_escape(row.sentence_id) + ',' +
           std::to_string(row.vdl.rows.size()) + ',' + format_csv_number(row.vdl.loss) +
           '\n';
  }
  return out;
}

std::string vdl_detail_csv(const VdlReport& r) {
  std::string out =
      "writer_id,sentence_id,boundary,gt_d_cen,gt_d_top,gt_d_bot,"
      "pred_d_cen,pred_d_top,pred_d_bot,contribution\n";
  for (const VdlSentenceRow& row : r.sentences) {
    const std::string prefix = csv_escape(row.writer_id) + ',' + csv_escape(row.sentence_id);
    for (const VdlBoundaryRow& b : row.vdl.rows) {
      out += prefix + ',' + std::to_string(b.index) + ',' +
             format_audit_number(b.gt.d_cen) + ',' + format_audit_number(b.gt.d_top) +
             ',' + format_audit_number(b.gt.d_bot) + ',' +
             format_audit_number(b.pred.d_cen) + ',' + format_audit_number(b.pred.d_top) +
             ',' + format_audit_number(b.pred.d_bot) + ',' +
             format_audit_number(b.contribution) + '\n';
    }
  }
  return out;
}

}  // namespace ink
