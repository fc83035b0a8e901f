#include "arud/script.hpp"

#include <cstdio>

#include "arud/error.hpp"
#include "arud/unicode.hpp"

namespace arud {

namespace cp = unicode::cp;

char32_t code_point(Mark mark) noexcept {
  switch (mark) {
    case Mark::Fatha: return cp::kFatha;
    case Mark::Damma: return cp::kDamma;
    case Mark::Kasra: return cp::kKasra;
    case Mark::Sukun: return cp::kSukun;
    case Mark::TanwinFath: return cp::kTanwinFath;
    case Mark::TanwinDamm: return cp::kTanwinDamm;
    case Mark::TanwinKasr: return cp::kTanwinKasr;
    case Mark::Shadda: return cp::kShadda;
    case Mark::Silence: return cp::kSilenceMark;
  }
  return 0;
}

Mark to_mark(Vowel vowel) noexcept {
  switch (vowel) {
    case Vowel::Fatha: return Mark::Fatha;
    case Vowel::Damma: return Mark::Damma;
    case Vowel::Kasra: return Mark::Kasra;
    case Vowel::Sukun: return Mark::Sukun;
    case Vowel::TanwinFath: return Mark::TanwinFath;
    case Vowel::TanwinDamm: return Mark::TanwinDamm;
    case Vowel::TanwinKasr: return Mark::TanwinKasr;
  }
  return Mark::Sukun;
}

char32_t code_point(Vowel vowel) noexcept { return code_point(to_mark(vowel)); }

std::optional<Mark> mark_from_code_point(char32_t c) noexcept {
  switch (c) {
    case cp::kFatha: return Mark::Fatha;
    case cp::kDamma: return Mark::Damma;
    case cp::kKasra: return Mark::Kasra;
    case cp::kSukun: return Mark::Sukun;
    case cp::kTanwinFath: return Mark::TanwinFath;
    case cp::kTanwinDamm: return Mark::TanwinDamm;
    case cp::kTanwinKasr: return Mark::TanwinKasr;
    case cp::kShadda: return Mark::Shadda;
    case cp::kSilenceMark: return Mark::Silence;
    default: return std::nullopt;
  }
}

std::string_view mark_name(Mark mark) noexcept {
  switch (mark) {
    case Mark::Fatha: return "fatha";
    case Mark::Damma: return "damma";
    case Mark::Kasra: return "kasra";
    case Mark::Sukun: return "sukun";
    case Mark::TanwinFath: return "tanwin_fath";
    case Mark::TanwinDamm: return "tanwin_damm";
    case Mark::TanwinKasr: return "tanwin_kasr";
    case Mark::Shadda: return "shadda";
    case Mark::Silence: return "silence";
  }
  return "?";
}

Vowel short_of(Vowel v) noexcept {
  switch (v) {
    case Vowel::TanwinFath: return Vowel::Fatha;
    case Vowel::TanwinDamm: return Vowel::Damma;
    case Vowel::TanwinKasr: return Vowel::Kasra;
    default: return v;
  }
}

bool Grapheme::is_wasl() const noexcept { return base == cp::kAlifWasla; }

std::size_t ScriptLine::grapheme_count() const noexcept {
  std::size_t n = 0;
  for (const auto& w : words) n += w.size();
  return n;
}

Grapheme make_grapheme(char32_t base, std::optional<Vowel> vowel, bool shadda) noexcept {
  Grapheme g;
  g.base = base;
  g.vowel = vowel;
  g.shadda = shadda;
  return g;
}

namespace script {
namespace {

std::optional<Vowel> vowel_of(Mark m) noexcept {
  switch (m) {
    case Mark::Fatha: return Vowel::Fatha;
    case Mark::Damma: return Vowel::Damma;
    case Mark::Kasra: return Vowel::Kasra;
    case Mark::Sukun: return Vowel::Sukun;
    case Mark::TanwinFath: return Vowel::TanwinFath;
    case Mark::TanwinDamm: return Vowel::TanwinDamm;
    case Mark::TanwinKasr: return Vowel::TanwinKasr;
    default: return std::nullopt;
  }
}

std::string describe(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
  return buf;
}

void attach(Grapheme& g, Mark m) {
  const auto conflict = [&] {
    throw Error(ErrorCode::ConflictingMarks,
                describe(code_point(m)) + " on " + describe(g.base));
  };
  if (m == Mark::Shadda) {
    if (g.shadda || g.silent || g.is_wasl()) conflict();
    g.shadda = true;
  } else if (m == Mark::Silence) {
    if (g.silent || g.vowel || g.shadda) conflict();
    g.silent = true;
  } else {
    if (g.vowel || g.silent) conflict();
    g.vowel = vowel_of(m);
  }
}

void append_grapheme(std::string& out, const Grapheme& g) {
  unicode::append_utf8(out, g.base);
  if (g.shadda) unicode::append_utf8(out, cp::kShadda);
  if (g.vowel) unicode::append_utf8(out, code_point(*g.vowel));
  if (g.silent) unicode::append_utf8(out, cp::kSilenceMark);
}

}  // namespace

ScriptLine parse_words(std::string_view raw) {
  const std::u32string text = unicode::compose(unicode::decode_utf8(raw));
  ScriptLine line;
  Word current;
  for (char32_t c : text) {
    if (unicode::is_whitespace(c)) {
      if (!current.empty()) line.words.push_back(std::move(current));
      current.clear();
    } else if (unicode::is_arabic_letter(c)) {
      current.push_back(make_grapheme(c));
    } else if (auto m = mark_from_code_point(c)) {
      if (current.empty()) {
        throw Error(ErrorCode::LeadingDiacritic, describe(c) + " has no letter");
      }
      attach(current.back(), *m);
    } else {
      throw Error(ErrorCode::ForeignCharacter, describe(c));
    }
  }
  if (!current.empty()) line.words.push_back(std::move(current));
  return line;
}

ScriptLine parse_line(std::string_view raw) {
  ScriptLine line = parse_words(raw);
  if (line.words.empty()) throw Error(ErrorCode::EmptyLine, "");
  return line;
}

Word parse_word(std::string_view raw) {
  ScriptLine line = parse_words(raw);
  if (line.words.size() != 1) {
    throw Error(ErrorCode::EmptyWord, "expected exactly one word");
  }
  return std::move(line.words.front());
}

std::string render_word(const Word& word) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "cannot render an empty word");
  std::string out;
  out.reserve(word.size() * 4);
  for (const auto& g : word) append_grapheme(out, g);
  return out;
}

std::string render_words(const std::vector<Word>& words, std::size_t first,
                         std::size_t count) {
  std::string out;
  for (std::size_t i = first; i < first + count && i < words.size(); ++i) {
    if (i != first) out.push_back(' ');
    out += render_word(words[i]);
  }
  return out;
}

std::string render_line(const ScriptLine& line) {
  if (line.words.empty()) throw Error(ErrorCode::EmptyLine, "cannot render an empty line");
  return render_words(line.words, 0, line.words.size());
}

std::string fix_diacritic_order(std::string_view raw) {
  struct Cluster {
    char32_t base;
    std::vector<Mark> marks;
  };
  const std::u32string text = unicode::compose(unicode::decode_utf8(raw));

  std::vector<std::vector<Cluster>> words(1);
  for (char32_t c : text) {
    if (unicode::is_whitespace(c)) {
      if (!words.back().empty()) words.emplace_back();
    } else if (unicode::is_ignorable_mark(c)) {
      continue;
    } else if (unicode::is_arabic_letter(c)) {
      words.back().push_back(Cluster{c, {}});
    } else if (auto m = mark_from_code_point(c)) {
      if (words.back().empty()) {
        throw Error(ErrorCode::LeadingDiacritic, describe(c) + " has no letter");
      }
      words.back().back().marks.push_back(*m);
    } else {
      throw Error(ErrorCode::ForeignCharacter, describe(c));
    }
  }
  if (words.back().empty()) words.pop_back();

  ScriptLine line;
  for (const auto& clusters : words) {
    Word word;
    for (const auto& cl : clusters) {
      Grapheme g = make_grapheme(cl.base);
      bool slot_taken = false;
      for (Mark m : cl.marks) {
        if (m == Mark::Shadda) {
          g.shadda = true;
        } else if (!slot_taken) {
          slot_taken = true;
          if (m == Mark::Silence) {
            g.silent = true;
          } else {
            g.vowel = vowel_of(m);
          }
        }
      }
      if (g.silent || g.is_wasl()) g.shadda = false;
      word.push_back(g);
    }
    // Tanwin fath written on the orthographic alif belongs to the letter before.
    // Right to left, so a run of alifs hands the mark down to a real host.
    for (std::size_t i = word.size(); i-- > 1;) {
      Grapheme& g = word[i];
      const bool carrier = g.base == cp::kAlif || g.base == cp::kAlifMaksura;
      if (!carrier || g.shadda || !g.has_vowel(Vowel::TanwinFath)) continue;
      Grapheme& host = word[i - 1];
      g.vowel.reset();
      if (!host.silent && (!host.vowel || host.has_vowel(Vowel::Fatha))) {
        host.vowel = Vowel::TanwinFath;
      }
    }
    line.words.push_back(std::move(word));
  }
  if (line.words.empty()) return {};
  return render_line(line);
}

double word_diacritization_ratio(const Word& word) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "ratio of an empty word");
  std::size_t marked = 0;
  for (const auto& g : word) {
    if (g.vowel || g.shadda || g.silent || g.is_wasl()) ++marked;
  }
  return static_cast<double>(marked) / static_cast<double>(word.size());
}

std::u32string base_key(std::u32string_view letters) {
  std::u32string key;
  key.reserve(letters.size());
  for (char32_t c : letters) {
    if (!unicode::is_arabic_letter(c)) continue;
    key.push_back(c == cp::kAlifWasla ? cp::kAlif : c);
  }
  return key;
}

std::u32string base_key(const Word& word) {
  std::u32string key;
  key.reserve(word.size());
  for (const auto& g : word) key.push_back(g.is_wasl() ? cp::kAlif : g.base);
  return key;
}

}  // namespace script
}  // namespace arud
