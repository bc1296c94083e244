#include "ink/dataset_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ink/utf8.hpp"

namespace ink {

namespace {

using nlohmann::json;

const json& require_field(const json& rec, const char* key, std::size_t line_no) {
  auto it = rec.find(key);
  if (it == rec.end())
    throw Error(Errc::MalformedRecord, std::string("missing field '") + key + "'",
                line_no);
  return *it;
}

std::string require_string(const json& rec, const char* key, std::size_t line_no) {
  const json& v = require_field(rec, key, line_no);
  if (!v.is_string())
    throw Error(Errc::MalformedRecord, std::string("field '") + key + "' must be a string",
                line_no);
  return v.get<std::string>();
}

CoordinateMode parse_mode(const std::string& s, std::size_t line_no) {
  if (s == "absolute") return CoordinateMode::Absolute;
  if (s == "delta") return CoordinateMode::Delta;
  throw Error(Errc::MalformedRecord, "coordinate_mode must be \"absolute\" or \"delta\"",
              line_no);
}

}  // namespace

SentenceSample parse_record(const std::string& json_line, std::size_t line_no) {
  json rec;
  try {
    rec = json::parse(json_line);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedRecord, e.what(), line_no);
  }
  if (!rec.is_object())
    throw Error(Errc::MalformedRecord, "record is not a JSON object", line_no);

  SentenceSample s;
  s.writer_id = require_string(rec, "writer_id", line_no);
  s.sentence_id = require_string(rec, "sentence_id", line_no);
  s.text = utf8::decode(require_string(rec, "text", line_no));
  s.mode = parse_mode(require_string(rec, "coordinate_mode", line_no), line_no);

  const json& chars = require_field(rec, "characters", line_no);
  if (!chars.is_array())
    throw Error(Errc::MalformedRecord, "'characters' must be an array", line_no);
  s.characters.reserve(chars.size());
  for (const json& c : chars) {
    if (!c.is_object())
      throw Error(Errc::MalformedRecord, "character entry is not an object", line_no);
    CharacterTrajectory ct;
    std::u32string glyph = utf8::decode(require_string(c, "glyph", line_no));
    if (glyph.size() != 1)
      throw Error(Errc::MalformedRecord, "glyph must be exactly one Unicode scalar",
                  line_no);
    ct.glyph = glyph[0];
    const json& pts = require_field(c, "points", line_no);
    if (!pts.is_array())
      throw Error(Errc::MalformedRecord, "'points' must be an array", line_no);
    ct.points.reserve(pts.size());
    for (const json& p : pts) {
      if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() ||
          !p[2].is_number_integer())
        throw Error(Errc::MalformedRecord, "point must be [x:number, y:number, pen:int]",
                    line_no);
      TrajectoryPoint tp;
      tp.x = p[0].get<double>();
      tp.y = p[1].get<double>();
      tp.pen = pen_state_from_int(p[2].get<int>());
      ct.points.push_back(tp);
    }
    s.characters.push_back(std::move(ct));
  }

  validate_sample(s, line_no);
  return s;
}

void validate_sample(const SentenceSample& s, std::size_t line_no) {
  if (s.text.size() != s.characters.size())
    throw Error(Errc::AlignmentMismatch,
                "text has " + std::to_string(s.text.size()) + " scalars but " +
                    std::to_string(s.characters.size()) + " character runs",
                line_no);
  for (std::size_t i = 0; i < s.characters.size(); ++i) {
    const CharacterTrajectory& c = s.characters[i];
    if (c.glyph != s.text[i])
      throw Error(Errc::AlignmentMismatch,
                  "glyph at position " + std::to_string(i + 1) +
                      " does not match the text scalar",
                  line_no);
    if (!c.is_space() && c.points.empty())
      throw Error(Errc::MalformedRecord,
                  "non-space character at position " + std::to_string(i + 1) +
                      " has no points",
                  line_no);
    for (const TrajectoryPoint& p : c.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw Error(Errc::NonfiniteCoordinate,
                    "non-finite coordinate in character " + std::to_string(i + 1),
                    line_no);
    }
  }
}

namespace {

Dataset load_from_stream(std::istream& in, std::optional<CoordinateMode> expected_mode) {
  Dataset d;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    SentenceSample s = parse_record(line, line_no);
    if (expected_mode && s.mode != *expected_mode)
      throw Error(Errc::ModeMismatch,
                  std::string("expected ") + coordinate_mode_name(*expected_mode) +
                      " coordinates but record is " + coordinate_mode_name(s.mode),
                  line_no);
    if (!seen.insert({s.writer_id, s.sentence_id}).second)
      throw Error(Errc::DuplicateSampleId,
                  "duplicate sample id " + s.writer_id + "/" + s.sentence_id, line_no);
    d.samples.push_back(std::move(s));
  }
  return d;
}

}  // namespace

Dataset load_dataset(const std::string& path, std::optional<CoordinateMode> expected_mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::IoError, "cannot open dataset file: " + path);
  return load_from_stream(in, expected_mode);
}

Dataset load_dataset_text(const std::string& text,
                          std::optional<CoordinateMode> expected_mode) {
  std::istringstream in(text);
  return load_from_stream(in, expected_mode);
}

std::string serialize_record(const SentenceSample& s) {
  json rec;
  rec["writer_id"] = s.writer_id;
  rec["sentence_id"] = s.sentence_id;
  rec["text"] = utf8::encode(s.text);
  rec["coordinate_mode"] = coordinate_mode_name(s.mode);
  json chars = json::array();
  for (const CharacterTrajectory& c : s.characters) {
    json jc;
    jc["glyph"] = utf8::encode(c.glyph);
    json pts = json::array();
    for (const TrajectoryPoint& p : c.points)
      pts.push_back(json::array({p.x, p.y, static_cast<int>(p.pen)}));
    jc["points"] = std::move(pts);
    chars.push_back(std::move(jc));
  }
  rec["characters"] = std::move(chars);
  return rec.dump();
}

std::string serialize_dataset(const Dataset& d) {
  std::string out;
  for (const SentenceSample& s : d.samples) {
    out += serialize_record(s);
    out += '\n';
  }
  return out;
}

void save_dataset(const std::string& path, const Dataset& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::IoError, "cannot open output file: " + path);
  out << serialize_dataset(d);
  if (!out)
    throw Error(Errc::IoError, "write failed: " + path);
}

}  // namespace ink
