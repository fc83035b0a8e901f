#pragma once

// Preparation of raw, partially diacritized corpus lines into scan-ready
// lines: cleaning, acceptance filtering, normalization heuristics, and
// diacritic statistics.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arud/script.hpp"
#include "arud/tables.hpp"

namespace arud {

enum class FilterReason : std::uint8_t {
  Ok,
  TooFewWords,
  WordUndiacritized,
  BelowLetterRatio,
  ForeignResidue,
};

std::string_view to_string(FilterReason reason) noexcept;

struct FilterDecision {
  bool accepted = false;
  FilterReason reason = FilterReason::Ok;
  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

struct DiacriticStats {
  /// Indexed by Mark.
  std::array<std::uint64_t, kMarkCount> marks{};
  /// Wasl alifs, reported beside the nine marks but not part of the total.
  std::uint64_t hamzat_wasl = 0;
  std::uint64_t total_diacritics = 0;
  std::uint64_t total_letters = 0;

  std::uint64_t count(Mark m) const noexcept { return marks[static_cast<std::size_t>(m)]; }
  void add(const ScriptLine& line);
  void merge(const DiacriticStats& other);
  std::string report() const;
  friend bool operator==(const DiacriticStats&, const DiacriticStats&) = default;
};

namespace corpus {

inline constexpr std::size_t kMinWords = 4;
inline constexpr double kMinWordRatio = 0.5;

/// Throws Error{EmptyHemistich} if either half is blank.
std::string join_hemistichs(std::string_view first, std::string_view second);

/// Removes everything but Arabic letters, the nine marks and whitespace. A
/// removed character separates words; marks left without a letter go with it.
/// Then fixes mark order. Never throws.
std::string clean_line(std::string_view raw);

FilterDecision filter_line(const ScriptLine& line);

/// Marks a bare alif as wasl when it opens a word (possibly behind up to two
/// vocalized one-letter proclitics) and the next letter is unvocalized or
/// geminated.
ScriptLine apply_wasl_heuristic(const ScriptLine& line);

/// A bare word-initial lam directly followed by another lam (li + article,
/// as in للشمس) takes kasra.
ScriptLine apply_lam_kasra(const ScriptLine& line);

/// Silence-marks letters listed in the table, if they carry no vowel.
ScriptLine mark_silent_letters(const ScriptLine& line, const SilentLetterTable& table);

/// Sukun on every letter that has no vowel-class mark, no silence mark and is
/// not a wasl alif.
ScriptLine assign_default_sukun(const ScriptLine& line);

/// Replaces words found in the table with their full vocalization unless an
/// existing mark contradicts it. A sukun the table form leaves implicit is
/// kept.
ScriptLine diacritize_known_words(const ScriptLine& line, const KnownWordTable& table);

DiacriticStats compute_stats(const std::vector<ScriptLine>& lines);

struct PipelineConfig {
  bool clean = true;
  bool known_words = true;
  bool wasl_heuristic = true;
  bool lam_kasra = true;
  bool silent_letters = true;
  bool default_sukun = true;
  bool verify_scan = true;
  /// Input lines are "first<TAB>second" hemistich pairs.
  bool hemistich_pairs = false;
  unsigned jobs = 1;
};

struct Rejection {
  std::size_t line = 0;  // 1-based input line number
  std::string reason;    // FilterReason or ErrorCode name
  std::string detail;
  std::string to_json() const;
};

struct LineOutcome {
  std::optional<ScriptLine> accepted;
  std::optional<Rejection> rejection;
};

struct PipelineResult {
  std::vector<ScriptLine> accepted;
  std::vector<std::size_t> accepted_line_numbers;
  std::vector<Rejection> rejections;
  DiacriticStats stats;
};

LineOutcome process_line(std::string_view raw, std::size_t line_number,
                         const PipelineConfig& config, const DataTables& tables);

PipelineResult run_pipeline(const std::vector<std::string>& raw_lines,
                            const PipelineConfig& config, const DataTables& tables);

/// Reads all lines from `in`. Throws Error{Io} if the stream fails.
std::vector<std::string> read_lines(std::istream& in);

}  // namespace corpus
}  // namespace arud
