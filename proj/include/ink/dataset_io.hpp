#ifndef INK_DATASET_IO_HPP
#define INK_DATASET_IO_HPP

#include <optional>
#include <string>

#include "ink/types.hpp"

namespace ink {

// Wire format: one UTF-8 JSON record per line,
//   { "writer_id": str, "sentence_id": str, "text": str,
//     "coordinate_mode": "absolute"|"delta",
//     "characters": [ { "glyph": str(1 scalar),
//                       "points": [[x, y, pen 0..3], ...] }, ... ] }

/// Parses and validates one record. Throws Error with the given line number
/// on malformed JSON, alignment mismatch, or non-finite coordinates.
SentenceSample parse_record(const std::string& json_line, std::size_t line_no = 0);

/// Structural validation shared by parse_record and direct construction:
/// finite coordinates, text/character alignment, glyph agreement.
void validate_sample(const SentenceSample& s, std::size_t line_no = 0);

Dataset load_dataset(const std::string& path,
                     std::optional<CoordinateMode> expected_mode = std::nullopt);
Dataset load_dataset_text(const std::string& text,
                          std::optional<CoordinateMode> expected_mode = std::nullopt);

std::string serialize_record(const SentenceSample& s);
std::string serialize_dataset(const Dataset& d);
void save_dataset(const std::string& path, const Dataset& d);

}  // namespace ink

#endif
