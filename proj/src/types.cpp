#include "ink/types.hpp"

#include <algorithm>
#include <map>

namespace ink {

const char* pen_state_name(PenState s) {
  switch (s) {
    case PenState::PenMove: return "PEN_MOVE";
    case PenState::PenUp: return "PEN_UP";
    case PenState::CursiveEoc: return "CURSIVE_EOC";
    case PenState::EndOfChar: return "END_OF_CHAR";
  }
  return "?";
}

PenState pen_state_from_int(int v) {
  if (v < 0 || v >= kPenStateCount)
    throw Error(Errc::MalformedRecord,
                "pen state out of range: " + std::to_string(v));
  return static_cast<PenState>(v);
}

const char* coordinate_mode_name(CoordinateMode m) {
  return m == CoordinateMode::Absolute ? "absolute" : "delta";
}

std::size_t SentenceSample::total_points() const {
  std::size_t n = 0;
  for (const auto& c : characters) n += c.points.size();
  return n;
}

std::vector<std::pair<std::string, std::vector<std::size_t>>> Dataset::by_writer() const {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < samples.size(); ++i)
    groups[samples[i].writer_id].push_back(i);
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  out.reserve(groups.size());
  for (auto& [writer, idx] : groups) {
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      return samples[a].sentence_id < samples[b].sentence_id;
    });
    out.emplace_back(writer, std::move(idx));
  }
  return out;
}

PenState boundary_label(const CharacterTrajectory& c) {
  if (c.points.empty())
    throw Error(Errc::EmptyCharacter, "boundary label of an empty character");
  return c.points.back().pen;
}

std::vector<TrajectoryPoint> flatten_points(const SentenceSample& s) {
  std::vector<TrajectoryPoint> out;
  out.reserve(s.total_points());
  for (const auto& c : s.characters)
    out.insert(out.end(), c.points.begin(), c.points.end());
  return out;
}

void require_absolute(const SentenceSample& s) {
  if (s.mode != CoordinateMode::Absolute)
    throw Error(Errc::DeltaInput,
                "sample " + s.writer_id + "/" + s.sentence_id +
                    " is in delta coordinates; convert before use");
}

}  // namespace ink
