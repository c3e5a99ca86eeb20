// Per-word analysis report and its JSON form (schema_version 1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dsq/bounds.hpp"
#include "dsq/core.hpp"

namespace dsq {

inline constexpr int schema_version = 1;
inline constexpr std::size_t max_echoed_length = 4096;

struct FsEntry {
  std::size_t start = 0;
  std::size_t u_len = 0;
  std::size_t U_len = 0;
  std::string u1;
  std::string u2;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  // Inversion intervals in host positions.
  std::size_t N1 = 0;
  std::size_t N2 = 0;
  std::size_t L1 = 0;
  std::size_t R1 = 0;
  std::size_t L2 = 0;
  std::size_t R2 = 0;

  friend bool operator==(const FsEntry&, const FsEntry&) = default;
};

struct MateEntry {
  std::size_t from_start = 0;
  std::size_t to_start = 0;
  std::string kind;

  friend bool operator==(const MateEntry&, const MateEntry&) = default;
};

struct SegmentEntry {
  std::string kind;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> member_starts;

  friend bool operator==(const SegmentEntry&, const SegmentEntry&) = default;
};

struct FamilyEntry {
  std::string kind;
  std::vector<SegmentEntry> segments;
  std::size_t size = 0;
  std::size_t size_bound = 0;

  friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

struct AnalysisReport {
  std::string word;  // the input, or "fnv1a64:<hex>" past max_echoed_length
  std::size_t length = 0;
  std::size_t delta = 0;
  std::size_t distinct_squares = 0;
  std::vector<FsEntry> fs_double_squares;
  // The first FS-double square against every later one.
  std::vector<MateEntry> mates;
  std::optional<FamilyEntry> family;
  BoundReport bounds;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

std::uint64_t fnv1a64(std::string_view data);
std::string word_label(std::string_view w);

AnalysisReport analyze(const Word& w);

nlohmann::json to_json(const AnalysisReport& r);
// Throws std::invalid_argument on a wrong schema_version or missing keys.
AnalysisReport report_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& r, bool color);

}  // namespace dsq
