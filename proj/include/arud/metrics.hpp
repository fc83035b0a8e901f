#pragma once

// Rhythm metrics over model predictions: exact pattern agreement and a
// normalized edit-distance similarity between target and generated beats.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arud/beat.hpp"
#include "arud/corpus.hpp"
#include "arud/report.hpp"
#include "arud/tables.hpp"

namespace arud {

namespace metrics {

/// Unit-cost Levenshtein distance. Bit-parallel when the shorter side fits in
/// a machine word, plain dynamic programming otherwise.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// 100 * (1 - distance / max length); 100 when both are empty.
double levenshtein_similarity(const BeatPattern& a, const BeatPattern& b);

/// Share of identical pairs, in percent. Throws Error{EmptyEvaluation}.
double exact_accuracy(const std::vector<std::pair<BeatPattern, BeatPattern>>& pairs);

}  // namespace metrics

struct PredictionRecord {
  std::size_t line = 0;
  BeatPattern target_beats;
  std::string generated_text;
  /// Scan in place between the contexts instead of alone.
  bool has_context = false;
  std::string left_context;
  std::string right_context;
  bool verse_final = false;
  /// Externally computed coherence score, passed through to the report.
  std::optional<double> coherence;

  /// Accepts masking records plus "generated_text". Throws
  /// Error{MalformedRecord}.
  static PredictionRecord from_json(const std::string& text);
};

struct ScoredPrediction {
  std::optional<BeatPattern> generated;  // nullopt if the text did not scan
  std::string failure;                   // error code name when it did not
  bool exact = false;
  double similarity = 0.0;
};

ScoredPrediction score_prediction(const PredictionRecord& record, const DataTables& tables);

struct EvalReport {
  std::size_t n = 0;
  std::size_t exact_matches = 0;
  double exact_accuracy = 0.0;
  double mean_levenshtein_similarity = 0.0;
  std::size_t scan_failure_count = 0;
  std::size_t malformed_count = 0;
  std::size_t coherence_count = 0;
  double mean_coherence = 0.0;

  KeyValueReport report() const;
};

/// Throws Error{EmptyEvaluation} when there is nothing to score.
EvalReport evaluate_predictions(const std::vector<PredictionRecord>& records,
                                const DataTables& tables, unsigned jobs = 1);

/// One JSON record per non-blank line. Malformed lines are counted in the
/// report and listed in `malformed`, never fatal.
EvalReport evaluate_prediction_lines(const std::vector<std::string>& lines,
                                     const DataTables& tables, unsigned jobs = 1,
                                     std::vector<corpus::Rejection>* malformed = nullptr);

}  // namespace arud
