#pragma once

// Substitution-task training examples: a contiguous word span is replaced by
// its beat pattern between markers, the remaining context loses most of its
// diacritics, and the fully diacritized span becomes the target.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arud/beat.hpp"
#include "arud/corpus.hpp"
#include "arud/random.hpp"
#include "arud/script.hpp"
#include "arud/tables.hpp"

namespace arud {

struct MaskConfig {
  double span_p = 0.2;
  double keep_p = 0.2;
  double sukun_drop = 0.5;
  std::array<std::string, 3> markers{"[E0]", "[E1]", "[E2]"};
  std::uint64_t seed = 0;
  bool reduce_context = true;
  /// Examples drawn from each line.
  std::size_t per_line = 1;

  /// Throws Error{InvalidConfig}.
  void validate() const;
};

struct MaskSpan {
  std::size_t start = 0;
  std::size_t length = 0;
  friend bool operator==(const MaskSpan&, const MaskSpan&) = default;
};

struct MaskedExample {
  static constexpr int kSchema = 1;

  std::size_t line = 0;     // 1-based source line, 0 if built directly
  std::size_t example = 0;  // index among the examples of that line
  std::string input;
  std::string target;
  BeatPattern beats;
  MaskSpan span;
  /// The unreduced context words, so the target can be rescanned in place.
  std::string left_context;
  std::string right_context;
  bool verse_final = false;

  std::string to_json() const;
  /// Throws Error{MalformedRecord}.
  static MaskedExample from_json(const std::string& text);
  friend bool operator==(const MaskedExample&, const MaskedExample&) = default;
};

namespace masking {

/// Length ~ Geometric(span_p) on {1, 2, ...}, clamped to words - 1; start
/// uniform over the positions where it fits. Throws Error{LineTooShort}.
MaskSpan sample_mask_span(const ScriptLine& line, const MaskConfig& cfg, RandomSource& rng);

/// Drops silence marks, writes wasl as plain alif, drops each sukun with
/// probability sukun_drop, then per word keeps k of the remaining vowel and
/// shadda marks, k ~ Geometric(keep_p) on {0, ...} conditioned on k <= count.
ScriptLine reduce_context_diacritics(const ScriptLine& context, const MaskConfig& cfg,
                                     RandomSource& rng);

/// Uses the given span instead of sampling one. Throws Error{LineTooShort}
/// if the span leaves no context word or falls outside the line.
MaskedExample build_example(const ScriptLine& line, MaskSpan span, const MaskConfig& cfg,
                            RandomSource& rng, const DataTables& tables);

MaskedExample build_training_example(const ScriptLine& line, const MaskConfig& cfg,
                                     RandomSource& rng, const DataTables& tables);

struct Dataset {
  std::vector<MaskedExample> examples;
  std::vector<corpus::Rejection> skipped;
};

/// cfg.per_line examples per line, each from its own generator seeded by
/// derive_seed(cfg.seed, line index, example index). Lines that cannot yield
/// an example are logged in `skipped`.
Dataset generate_dataset(const std::vector<ScriptLine>& lines, const MaskConfig& cfg,
                         const DataTables& tables, unsigned jobs = 1);

}  // namespace masking
}  // namespace arud
