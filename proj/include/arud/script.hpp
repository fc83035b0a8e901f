#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arud {

/// The nine structural marks. Wasla is not a mark: it is the base letter U+0671.
enum class Mark : std::uint8_t {
  Fatha,
  Damma,
  Kasra,
  Sukun,
  TanwinFath,
  TanwinDamm,
  TanwinKasr,
  Shadda,
  Silence,
};
inline constexpr std::size_t kMarkCount = 9;

/// The vowel-class slot of a grapheme: at most one of these per letter.
enum class Vowel : std::uint8_t {
  Fatha,
  Damma,
  Kasra,
  Sukun,
  TanwinFath,
  TanwinDamm,
  TanwinKasr,
};

char32_t code_point(Mark mark) noexcept;
char32_t code_point(Vowel vowel) noexcept;
std::optional<Mark> mark_from_code_point(char32_t c) noexcept;
Mark to_mark(Vowel vowel) noexcept;
std::string_view mark_name(Mark mark) noexcept;

inline bool is_short_vowel(Vowel v) noexcept {
  return v == Vowel::Fatha || v == Vowel::Damma || v == Vowel::Kasra;
}
inline bool is_tanwin(Vowel v) noexcept {
  return v == Vowel::TanwinFath || v == Vowel::TanwinDamm || v == Vowel::TanwinKasr;
}
/// Tanwin -> the short vowel it carries; identity otherwise.
Vowel short_of(Vowel v) noexcept;

struct Grapheme {
  char32_t base = 0;
  bool shadda = false;
  std::optional<Vowel> vowel;
  bool silent = false;

  bool is_wasl() const noexcept;
  /// Bears a short vowel or tanwin (pronounced with a vowel).
  bool vocalized() const noexcept { return vowel && *vowel != Vowel::Sukun; }
  bool has_vowel(Vowel v) const noexcept { return vowel && *vowel == v; }
  bool bare() const noexcept { return !vowel && !shadda && !silent; }

  friend bool operator==(const Grapheme&, const Grapheme&) = default;
};

using Word = std::vector<Grapheme>;

struct ScriptLine {
  std::vector<Word> words;
  bool verse_final = false;

  std::size_t grapheme_count() const noexcept;
  bool empty() const noexcept { return words.empty(); }

  friend bool operator==(const ScriptLine&, const ScriptLine&) = default;
};

Grapheme make_grapheme(char32_t base, std::optional<Vowel> vowel = std::nullopt,
                       bool shadda = false) noexcept;

namespace script {

/// Parses composed-form text into graphemes. Whitespace runs delimit words.
/// Throws Error{LeadingDiacritic, ForeignCharacter, ConflictingMarks, EmptyLine}.
ScriptLine parse_line(std::string_view raw);

/// Parses a single word; throws EmptyWord for blank input or if the text
/// contains more than one word.
Word parse_word(std::string_view raw);

/// Like parse_line but an all-whitespace input yields an empty line instead
/// of EmptyLine. Used for optional context fields.
ScriptLine parse_words(std::string_view raw);

/// Canonical serialization: letter, shadda, vowel-class mark, silence mark.
/// Words are joined by one space. Throws EmptyLine / EmptyWord.
std::string render_line(const ScriptLine& line);
std::string render_word(const Word& word);
/// Renders words [first, first+count) joined by spaces; no emptiness checks on
/// the range itself.
std::string render_words(const std::vector<Word>& words, std::size_t first,
                         std::size_t count);

/// Normalizes mark order and placement: composes, strips tatweel and
/// non-inventory annotation marks, puts shadda first, keeps the first of any
/// competing vowel-class marks, and moves tanwin fath off an orthographic alif
/// onto the preceding letter. Returns canonical text (words single-spaced).
std::string fix_diacritic_order(std::string_view raw);

/// Share of letters carrying a vowel-class mark, shadda, or silence mark
/// (wasl alifs count as marked). Throws EmptyWord.
double word_diacritization_ratio(const Word& word);

/// The word's base letters, with wasl alif folded to plain alif. Used as the
/// lookup key for every word table.
std::u32string base_key(const Word& word);
std::u32string base_key(std::u32string_view letters);

}  // namespace script
}  // namespace arud
