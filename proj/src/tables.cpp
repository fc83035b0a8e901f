#include "arud/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>

#include "arud/error.hpp"
#include "arud/unicode.hpp"

#ifndef ARUD_DEFAULT_DATA_DIR
#define ARUD_DEFAULT_DATA_DIR "data"
#endif

namespace arud {

namespace cp = unicode::cp;

namespace {

struct TableKey {
  std::u32string letters;
  bool suffix = false;
};

TableKey parse_key(std::string_view text) {
  std::u32string decoded = unicode::decode_utf8(text);
  TableKey key;
  if (!decoded.empty() && decoded.front() == cp::kTatweel) {
    key.suffix = true;
    decoded.erase(0, 1);
  }
  key.letters = script::base_key(script::parse_word(unicode::encode_utf8(decoded)));
  return key;
}

bool ends_with(const std::u32string& s, const std::u32string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Calls fn(fields, line_number) for each data line; returns the version tag.
template <typename Fn>
std::string read_table(std::istream& in, const std::string& name, std::size_t min_fields,
                       Fn&& fn) {
  std::string version;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      constexpr std::string_view kTag = "# version:";
      if (view.substr(0, kTag.size()) == kTag) version = std::string(trim(view.substr(kTag.size())));
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = view.find('\t', start);
      fields.push_back(trim(view.substr(start, tab == std::string_view::npos ? tab : tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < min_fields) {
      throw Error(ErrorCode::TableFormat, name + ":" + std::to_string(number) +
                                              ": expected " + std::to_string(min_fields) +
                                              " tab-separated fields");
    }
    try {
      fn(fields, number);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TableFormat) throw;
      throw Error(ErrorCode::TableFormat, name + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::Io, "reading " + name);
  return version;
}

std::ifstream open_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return in;
}

}  // namespace

std::optional<Vowel> vowel_from_name(std::string_view name) noexcept {
  if (name == "fatha") return Vowel::Fatha;
  if (name == "damma") return Vowel::Damma;
  if (name == "kasra") return Vowel::Kasra;
  return std::nullopt;
}

// --- SpecialWordTable ------------------------------------------------------

void SpecialWordTable::add(std::string_view surface, std::string_view replacement) {
  TableKey key = parse_key(surface);
  if (key.suffix) throw Error(ErrorCode::TableFormat, "special words match whole words only");
  entries_[key.letters] = script::parse_word(replacement);
}

std::optional<Word> SpecialWordTable::lookup(const Word& word) const {
  if (entries_.empty() || word.empty()) return std::nullopt;
  const std::u32string key = script::base_key(word);

  std::optional<Word> result;
  if (auto it = entries_.find(key); it != entries_.end()) {
    result = it->second;
  } else if (word.size() >= 3 && (word[0].base == cp::kWaw || word[0].base == cp::kFeh) &&
             !word[0].shadda && (word[0].bare() || word[0].has_vowel(Vowel::Fatha))) {
    if (auto rest = entries_.find(key.substr(1)); rest != entries_.end()) {
      Word w{word[0]};
      w.insert(w.end(), rest->second.begin(), rest->second.end());
      result = std::move(w);
    }
  }
  if (!result) return std::nullopt;

  const Grapheme& last = word.back();
  if ((last.vowel || last.shadda) && last.base == result->back().base) {
    result->back().vowel = last.vowel;
    result->back().shadda = last.shadda;
  }
  return result;
}

// --- JunctureTable ---------------------------------------------------------

void JunctureTable::add(std::string_view key_text, Vowel vowel) {
  TableKey key = parse_key(key_text);
  if (key.suffix) {
    suffixes_.emplace_back(key.letters, vowel);
    std::stable_sort(suffixes_.begin(), suffixes_.end(), [](const auto& a, const auto& b) {
      return a.first.size() > b.first.size();
    });
  } else {
    whole_[key.letters] = vowel;
  }
}

Vowel JunctureTable::vowel_for(const Word& word) const {
  const std::u32string key = script::base_key(word);
  if (auto it = whole_.find(key); it != whole_.end()) return it->second;
  for (const auto& [suffix, vowel] : suffixes_) {
    if (ends_with(key, suffix)) return vowel;
  }
  return Vowel::Kasra;
}

// --- KnownWordTable --------------------------------------------------------

void KnownWordTable::add(std::string_view diacritized) {
  Word w = script::parse_word(diacritized);
  entries_[script::base_key(w)] = std::move(w);
}

const Word* KnownWordTable::find(const Word& word) const {
  auto it = entries_.find(script::base_key(word));
  return it == entries_.end() ? nullptr : &it->second;
}

// --- SilentLetterTable -----------------------------------------------------

void SilentLetterTable::add(std::string_view key_text, std::size_t silent_index) {
  TableKey key = parse_key(key_text);
  if (silent_index >= key.letters.size()) {
    throw Error(ErrorCode::TableFormat, "silent index out of range");
  }
  if (key.suffix) {
    suffixes_.emplace_back(key.letters, silent_index);
  } else {
    whole_[key.letters] = silent_index;
  }
}

std::optional<std::size_t> SilentLetterTable::silent_position(const Word& word) const {
  const std::u32string key = script::base_key(word);
  if (auto it = whole_.find(key); it != whole_.end()) return it->second;
  for (const auto& [suffix, index] : suffixes_) {
    if (key.size() > suffix.size() && ends_with(key, suffix)) {
      return key.size() - suffix.size() + index;
    }
  }
  return std::nullopt;
}

// --- loaders ---------------------------------------------------------------

SpecialWordTable load_special_words(std::istream& in, const std::string& name) {
  SpecialWordTable table;
  table.version = read_table(in, name, 2, [&](const auto& f, std::size_t) {
    table.add(f[0], f[1]);
  });
  return table;
}

JunctureTable load_juncture(std::istream& in, const std::string& name) {
  JunctureTable table;
  table.version = read_table(in, name, 2, [&](const auto& f, std::size_t) {
    auto vowel = vowel_from_name(f[1]);
    if (!vowel) throw Error(ErrorCode::TableFormat, "unknown vowel '" + std::string(f[1]) + "'");
    table.add(f[0], *vowel);
  });
  return table;
}

KnownWordTable load_known_words(std::istream& in, const std::string& name) {
  KnownWordTable table;
  table.version = read_table(in, name, 1, [&](const auto& f, std::size_t) { table.add(f[0]); });
  return table;
}

SilentLetterTable load_silent_letters(std::istream& in, const std::string& name) {
  SilentLetterTable table;
  table.version = read_table(in, name, 2, [&](const auto& f, std::size_t) {
    std::size_t index = 0;
    for (char c : f[1]) {
      if (c < '0' || c > '9') throw Error(ErrorCode::TableFormat, "bad index");
      index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (f[1].empty()) throw Error(ErrorCode::TableFormat, "bad index");
    table.add(f[0], index);
  });
  return table;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("ARUD_DATA_DIR"); env && *env) return env;
  return ARUD_DEFAULT_DATA_DIR;
}

DataTables load_tables(const std::filesystem::path& dir) {
  DataTables t;
  {
    auto in = open_table(dir / "special_words.tsv");
    t.special_words = load_special_words(in, "special_words.tsv");
  }
  {
    auto in = open_table(dir / "juncture.tsv");
    t.juncture = load_juncture(in, "juncture.tsv");
  }
  {
    auto in = open_table(dir / "known_words.tsv");
    t.known_words = load_known_words(in, "known_words.tsv");
  }
  {
    auto in = open_table(dir / "silent_letters.tsv");
    t.silent_letters = load_silent_letters(in, "silent_letters.tsv");
  }
  return t;
}

const DataTables& default_tables() {
  static const DataTables tables = load_tables(default_data_dir());
  return tables;
}

}  // namespace arud
