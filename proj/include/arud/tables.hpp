#pragma once

// Word-level data tables shipped under data/. All files are UTF-8, one entry
// per line, tab-separated, '#' starts a comment line, and an optional
// "# version: <v>" line names the table revision.
//
// A key written with a leading tatweel (e.g. "ـهم") matches as a word suffix;
// any other key matches the whole word. Keys compare on base letters only,
// with wasl alif folded to plain alif.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arud/script.hpp"

namespace arud {

/// Words whose spelling omits a pronounced long vowel, mapped to a spelling
/// in which every pronounced letter is written.
class SpecialWordTable {
 public:
  void add(std::string_view surface, std::string_view replacement);
  /// Replacement for `word`, or nullopt. A vocalized proclitic wa/fa in front
  /// of a listed word is kept. The input's final marks (case ending) override
  /// the replacement's.
  std::optional<Word> lookup(const Word& word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::u32string, Word>& entries() const noexcept { return entries_; }
  std::string version;

 private:
  std::map<std::u32string, Word> entries_;
};

/// Vowel given to an unvocalized word-final letter when a following wasl alif
/// is dropped. Falls back to kasra.
class JunctureTable {
 public:
  void add(std::string_view key, Vowel vowel);
  Vowel vowel_for(const Word& word) const;

  std::size_t size() const noexcept { return whole_.size() + suffixes_.size(); }
  std::string version;

 private:
  std::map<std::u32string, Vowel> whole_;
  std::vector<std::pair<std::u32string, Vowel>> suffixes_;  // longest first
};

/// Function words with a single possible vocalization.
class KnownWordTable {
 public:
  void add(std::string_view diacritized);
  const Word* find(const Word& word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  std::string version;

 private:
  std::map<std::u32string, Word> entries_;
};

/// Written-but-silent letters: key plus the index (within the key's letters)
/// of the silent one.
class SilentLetterTable {
 public:
  void add(std::string_view key, std::size_t silent_index);
  /// Index into `word` of the letter to silence, if any pattern matches.
  std::optional<std::size_t> silent_position(const Word& word) const;

  std::size_t size() const noexcept { return whole_.size() + suffixes_.size(); }
  std::string version;

 private:
  std::map<std::u32string, std::size_t> whole_;
  std::vector<std::pair<std::u32string, std::size_t>> suffixes_;
};

SpecialWordTable load_special_words(std::istream& in, const std::string& name = "special_words");
JunctureTable load_juncture(std::istream& in, const std::string& name = "juncture");
KnownWordTable load_known_words(std::istream& in, const std::string& name = "known_words");
SilentLetterTable load_silent_letters(std::istream& in, const std::string& name = "silent_letters");

struct DataTables {
  SpecialWordTable special_words;
  JunctureTable juncture;
  KnownWordTable known_words;
  SilentLetterTable silent_letters;
};

/// $ARUD_DATA_DIR if set, else the data/ directory of the source tree.
std::filesystem::path default_data_dir();

/// Loads the four standard files from `dir`. Throws Error{Io, TableFormat}.
DataTables load_tables(const std::filesystem::path& dir);

/// Loads the tables from default_data_dir() once and caches them.
const DataTables& default_tables();

std::optional<Vowel> vowel_from_name(std::string_view name) noexcept;

}  // namespace arud
