#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "ink/config.hpp"
#include "ink/dataset_io.hpp"
#include "ink/parallel.hpp"
#include "ink/preprocess.hpp"
#include "ink/report.hpp"
#include "ink/svg_render.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // validation or metric-domain failure
constexpr int kExitIo = 2;      // I/O or format failure

int exit_code_for(const ink::Error& e) {
  switch (e.code()) {
    case ink::Errc::IoError:
    case ink::Errc::MalformedRecord:
    case ink::Errc::AlignmentMismatch:
    case ink::Errc::NonfiniteCoordinate:
    case ink::Errc::DuplicateSampleId:
    case ink::Errc::ModeMismatch:
    case ink::Errc::ConfigError:
      return kExitIo;
    default:
      return kExitDomain;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ink::Error(ink::Errc::IoError, "cannot open output file: " + path);
  out << content;
  if (!out) throw ink::Error(ink::Errc::IoError, "write failed: " + path);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  out += '"';
  return out;
}

struct CommonOpts {
  std::string config_path;
  std::string exclude_path;
  bool quiet = false;
  unsigned threads = 1;
};

ink::RunConfig resolve_config(const CommonOpts& opts) {
  ink::RunConfig cfg;
  if (!opts.config_path.empty()) cfg = ink::load_config(opts.config_path);
  return cfg;
}

std::set<ink::SampleKey> resolve_exclusions(const ink::RunConfig& cfg,
                                            const CommonOpts& opts) {
  const std::string& path =
      !opts.exclude_path.empty() ? opts.exclude_path : cfg.exclude_path;
  if (path.empty()) return {};
  return ink::load_exclusion_list(path);
}

int cmd_validate(const std::string& dataset_path, const CommonOpts& opts) {
  const ink::RunConfig cfg = resolve_config(opts);
  std::ifstream in(dataset_path, std::ios::binary);
  if (!in)
    throw ink::Error(ink::Errc::IoError, "cannot open dataset file: " + dataset_path);

  std::cout << "line,writer_id,sentence_id,status,detail\n";
  std::set<ink::SampleKey> seen;
  std::string line;
  std::size_t line_no = 0;
  bool any_reject = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string writer, sentence, detail;
    bool ok = true;
    try {
      ink::SentenceSample s = ink::parse_record(line, line_no);
      writer = s.writer_id;
      sentence = s.sentence_id;
      if (!seen.insert({s.writer_id, s.sentence_id}).second)
        throw ink::Error(ink::Errc::DuplicateSampleId,
                         "duplicate sample id " + s.writer_id + "/" + s.sentence_id,
                         line_no);
      const std::size_t raw_total = s.total_points();
      if (s.mode == ink::CoordinateMode::Delta) s = ink::delta_to_absolute(s);
      const ink::SegmentationVerdict v = ink::validate_segmentation(
          s, raw_total, cfg.preprocess.segmentation_tolerance);
      if (!v.accepted()) {
        ok = false;
        detail = v.describe();
      }
    } catch (const ink::Error& e) {
      ok = false;
      detail = e.what();
    }
    if (!ok) {
      any_reject = true;
      std::cout << line_no << ',' << csv_escape(writer) << ',' << csv_escape(sentence)
                << ",REJECT," << csv_escape(detail) << '\n';
    } else if (!opts.quiet) {
      std::cout << line_no << ',' << csv_escape(writer) << ',' << csv_escape(sentence)
                << ",ACCEPT,\n";
    }
  }
  return any_reject ? kExitDomain : kExitOk;
}

int cmd_preprocess(const std::string& input_path, const std::string& out_path,
                   const CommonOpts& opts) {
  const ink::RunConfig cfg = resolve_config(opts);
  const ink::Dataset input = ink::load_dataset(input_path);

  std::vector<ink::PipelineOutcome> outcomes(input.samples.size());
  ink::parallel_for(input.samples.size(), opts.threads, [&](std::size_t i) {
    outcomes[i] = ink::run_pipeline(input.samples[i], cfg.preprocess);
  });

  ink::Dataset kept;
  std::string log = "writer_id,sentence_id,kept,deskew_angle,deskew_applied,skip_reason,detail\n";
  for (std::size_t i = 0; i < input.samples.size(); ++i) {
    const ink::SentenceSample& s = input.samples[i];
    const ink::PipelineOutcome& o = outcomes[i];
    log += csv_escape(s.writer_id) + ',' + csv_escape(s.sentence_id) + ',';
    log += o.kept ? "1" : "0";
    if (o.deskew) {
      log += ',' + ink::format_csv_number(o.deskew->angle_radians);
      log += o.deskew->applied ? ",1," : ",0,";
      log += ink::deskew_skip_name(o.deskew->skip_reason);
    } else {
      log += ",,,";
    }
    log += ',' + csv_escape(o.reject_reason) + '\n';
    if (o.kept) kept.samples.push_back(o.sample);
  }
  ink::save_dataset(out_path, kept);
  write_file(out_path + ".log.csv", log);
  if (!opts.quiet) {
    std::cout << "kept " << kept.samples.size() << " of " << input.samples.size()
              << " samples -> " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_eval(const std::string& gt_path, const std::string& pred_path,
             const std::string& out_stem, const std::string& audit_path,
             bool convert_eoc_flag, const CommonOpts& opts) {
  ink::RunConfig cfg = resolve_config(opts);
  if (convert_eoc_flag) cfg.convert_eoc = true;
  const std::set<ink::SampleKey> exclusions = resolve_exclusions(cfg, opts);

  const ink::Dataset gt = ink::load_dataset(gt_path);
  const ink::Dataset pred = ink::load_dataset(pred_path);
  const ink::EvalReport report =
      ink::evaluate_datasets(gt, pred, cfg, exclusions, opts.threads);

  write_file(out_stem + ".csv", ink::report_to_csv(report));
  write_file(out_stem + ".json", ink::report_to_json(report));
  if (!audit_path.empty()) write_file(audit_path, ink::boundaries_to_csv(report));

  if (!opts.quiet) {
    std::cout << "writers: " << report.writers.size()
              << "  F1_cursive: " << ink::format_csv_value(report.macro.f1_cursive.mean)
              << "  CRE: " << ink::format_csv_value(report.macro.cre.mean)
              << "  KGS: " << ink::format_csv_value(report.macro.kgs.mean)
              << "  SSS: " << ink::format_csv_value(report.macro.sss.mean)
              << "  DTW_norm: " << ink::format_csv_number(report.dtw.norm)
              << "  DTW_raw: " << ink::format_csv_number(report.dtw.raw)
              << "  Std: " << ink::format_csv_number(report.dtw.std_norm) << '\n';
  }
  return kExitOk;
}

int cmd_vdl(const std::string& gt_path, const std::string& pred_path,
            const std::string& out_stem, const CommonOpts& opts) {
  const ink::RunConfig cfg = resolve_config(opts);
  const std::set<ink::SampleKey> exclusions = resolve_exclusions(cfg, opts);
  const ink::Dataset gt = ink::load_dataset(gt_path);
  const ink::Dataset pred = ink::load_dataset(pred_path);
  const ink::VdlReport report =
      ink::evaluate_vdl(gt, pred, cfg, exclusions, opts.threads);

  write_file(out_stem + ".csv", ink::vdl_summary_csv(report));
  write_file(out_stem + "_detail.csv", ink::vdl_detail_csv(report));
  if (!opts.quiet) {
    std::cout << "sentences: " << report.sentences.size() << " (skipped "
              << report.skipped_no_boundaries << " without boundaries)  macro VDL: "
              << ink::format_csv_number(report.macro_loss) << '\n';
  }
  return kExitOk;
}

std::string sanitize_component(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_';
    out += keep ? c : '_';
  }
  return out.empty() ? "_" : out;
}

int cmd_render(const std::string& input_path, const std::string& out_dir,
               bool mark_cursive, const CommonOpts& opts) {
  ink::Dataset data = ink::load_dataset(input_path);
  fs::create_directories(out_dir);
  ink::RenderOptions options;
  options.mark_cursive = mark_cursive;

  std::set<std::string> used;
  for (const ink::SentenceSample& s : data.samples) {
    std::string base =
        sanitize_component(s.writer_id) + "__" + sanitize_component(s.sentence_id);
    std::string name = base;
    for (int n = 2; !used.insert(name).second; ++n)
      name = base + "__" + std::to_string(n);
    write_file((fs::path(out_dir) / (name + ".svg")).string(), ink::render_svg(s, options));
  }
  if (!opts.quiet)
    std::cout << "rendered " << data.samples.size() << " sentences -> " << out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory evaluation toolkit for online handwriting: "
               "preprocessing, connectivity/spacing metrics, DTW, and "
               "vertical-drift diagnostics."};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string dataset_path, gt_path, pred_path, out_path, audit_path;
  bool convert_eoc = false;
  bool mark_cursive = false;

  CLI::App* validate = app.add_subcommand("validate", "check dataset structure and segmentation");
  validate->add_option("dataset", dataset_path, "dataset file (one JSON record per line)")->required();
  validate->add_option("--config", opts.config_path, "run configuration file");
  validate->add_flag("--quiet", opts.quiet, "suppress per-item progress output");

  CLI::App* preprocess = app.add_subcommand("preprocess", "run the harmonization pipeline");
  preprocess->add_option("dataset", dataset_path, "input dataset file")->required();
  preprocess->add_option("--out", out_path, "output dataset file")->required();
  preprocess->add_option("--config", opts.config_path, "run configuration file");
  preprocess->add_option("--threads", opts.threads, "worker threads");
  preprocess->add_flag("--quiet", opts.quiet, "suppress per-item progress output");

  CLI::App* eval = app.add_subcommand("eval", "compute CSM and DTW for paired datasets");
  eval->add_option("--gt", gt_path, "ground-truth dataset")->required();
  eval->add_option("--pred", pred_path, "predicted dataset")->required();
  eval->add_option("--out", out_path, "report stem; writes <out>.csv and <out>.json")->required();
  eval->add_option("--config", opts.config_path, "run configuration file");
  eval->add_option("--exclude", opts.exclude_path, "exclusion list (writer_id,sentence_id per line)");
  eval->add_option("--audit", audit_path, "write per-boundary audit CSV");
  eval->add_flag("--convert-eoc", convert_eoc, "relabel predicted END_OF_CHAR boundaries by the distance heuristic");
  eval->add_option("--threads", opts.threads, "worker threads");
  eval->add_flag("--quiet", opts.quiet, "suppress per-item progress output");

  CLI::App* vdl = app.add_subcommand("vdl", "vertical-drift diagnostic for paired datasets");
  vdl->add_option("--gt", gt_path, "ground-truth dataset")->required();
  vdl->add_option("--pred", pred_path, "predicted dataset")->required();
  vdl->add_option("--out", out_path, "report stem; writes <out>.csv and <out>_detail.csv")->required();
  vdl->add_option("--config", opts.config_path, "run configuration file");
  vdl->add_option("--exclude", opts.exclude_path, "exclusion list");
  vdl->add_option("--threads", opts.threads, "worker threads");
  vdl->add_flag("--quiet", opts.quiet, "suppress per-item progress output");

  CLI::App* render = app.add_subcommand("render", "render one SVG per sentence");
  render->add_option("dataset", dataset_path, "input dataset file")->required();
  render->add_option("--out", out_path, "output directory")->required();
  render->add_flag("--mark-cursive", mark_cursive, "highlight cursive boundary points");
  render->add_flag("--quiet", opts.quiet, "suppress per-item progress output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(dataset_path, opts);
    if (preprocess->parsed()) return cmd_preprocess(dataset_path, out_path, opts);
    if (eval->parsed())
      return cmd_eval(gt_path, pred_path, out_path, audit_path, convert_eoc, opts);
    if (vdl->parsed()) return cmd_vdl(gt_path, pred_path, out_path, opts);
    if (render->parsed()) return cmd_render(dataset_path, out_path, mark_cursive, opts);
  } catch (const ink::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
