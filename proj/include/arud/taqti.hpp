#pragma once

// Grapheme-to-beat transformation: rewrites a fully diacritized line into
// prosodic transcription, where every written letter is pronounced and bears
// exactly one of fatha/damma/kasra/sukun, then reads off the beats.

#include <optional>
#include <string>
#include <vector>

#include "arud/beat.hpp"
#include "arud/script.hpp"
#include "arud/tables.hpp"

namespace arud {

enum class Harakah : std::uint8_t { Fatha, Damma, Kasra, Sukun };

struct ScannedGrapheme {
  char32_t base = 0;
  Harakah mark = Harakah::Sukun;

  friend bool operator==(const ScannedGrapheme&, const ScannedGrapheme&) = default;
};

/// A transcribed line. Word boundaries follow the source line one-to-one; a
/// word is empty only if every one of its letters was silent.
struct ScansionLine {
  std::vector<std::vector<ScannedGrapheme>> words;

  std::size_t grapheme_count() const noexcept;
  friend bool operator==(const ScansionLine&, const ScansionLine&) = default;
};

std::string render(const ScansionLine& line);
/// Back to the general model (every grapheme carries its single mark).
ScriptLine to_script_line(const ScansionLine& line);

struct ScanResult {
  ScansionLine transcription;
  BeatPattern beats;
  /// word_offsets[w] is the first beat of word w; the last element is
  /// beats.size().
  std::vector<std::size_t> word_offsets;
  /// Non-fatal observations, e.g. two consecutive sakin letters mid-line.
  std::vector<std::string> warnings;

  /// Beats of words [first, first + count).
  BeatPattern word_beats(std::size_t first, std::size_t count) const;
};

namespace taqti {

// The individual rewriting steps, in the order scan() applies them. Each is a
// pure function of its inputs.

ScriptLine apply_special_words(const ScriptLine& line, const SpecialWordTable& table);
ScriptLine remove_silent_graphemes(const ScriptLine& line);
/// آ -> أَ + اْ
ScriptLine expand_madda(const ScriptLine& line);
/// Article assimilation before sun letters, then line-initial / post-vowel /
/// post-long-vowel / post-sukun handling of every wasl alif. Throws
/// Error{DanglingWasl}.
ScriptLine process_hamzat_wasl(const ScriptLine& line, bool sentence_initial,
                               const JunctureTable& juncture);
/// C + shadda + V -> Cْ CV. Throws Error{ShaddaWithoutVowel}.
ScriptLine expand_gemination(const ScriptLine& line);
/// Cً -> Cَ نْ (dropping the orthographic alif), likewise for damm and kasr.
ScriptLine expand_tanwin(const ScriptLine& line);
/// Mandatory long-vowel extensions: hu/hi and plural -mu between vocalized
/// letters, and a short final vowel when `verse_final`.
ScriptLine apply_isba(const ScriptLine& line, bool verse_final);

/// Validates the four-mark property and produces the transcription. A bare
/// alif or alif maqsura (not word-initial), a bare waw after damma, and a bare
/// yeh after kasra are read as sukun. Throws Error{UnderDiacritized}.
ScansionLine finalize(const ScriptLine& line);

BeatPattern to_beats(const ScansionLine& line);

/// The whole transformation. Uses line.verse_final for the final extension.
ScanResult scan(const ScriptLine& line, const SpecialWordTable& special_words,
                const JunctureTable& juncture, bool sentence_initial = true);
ScanResult scan(const ScriptLine& line, const DataTables& tables, bool sentence_initial = true);

/// Beats of words [first, first + count) of `line`, with all juncture effects
/// of the surrounding words applied.
BeatPattern scan_span(const ScriptLine& line, std::size_t first, std::size_t count,
                      const DataTables& tables, bool sentence_initial = true);

/// Long-vowel extension letter: unvocalized alif/alif maqsura after fatha,
/// waw after damma, or yeh after kasra.
bool is_long_vowel(const Word& word, std::size_t index) noexcept;

bool begins_with_wasl(const Word& word) noexcept;

/// A word ending in an unvocalized plural suffix -hum/-kum/-tum, rewritten
/// with the poetic damma on its mim. nullopt for any other word.
std::optional<Word> plural_m_variant(const Word& word);

}  // namespace taqti
}  // namespace arud
