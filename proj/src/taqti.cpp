#include "arud/taqti.hpp"

#include "arud/error.hpp"
#include "arud/unicode.hpp"

namespace arud {

namespace cp = unicode::cp;

std::size_t ScansionLine::grapheme_count() const noexcept {
  std::size_t n = 0;
  for (const auto& w : words) n += w.size();
  return n;
}

namespace {

Vowel to_vowel(Harakah h) noexcept {
  switch (h) {
    case Harakah::Fatha: return Vowel::Fatha;
    case Harakah::Damma: return Vowel::Damma;
    case Harakah::Kasra: return Vowel::Kasra;
    case Harakah::Sukun: return Vowel::Sukun;
  }
  return Vowel::Sukun;
}

std::optional<Harakah> to_harakah(Vowel v) noexcept {
  switch (v) {
    case Vowel::Fatha: return Harakah::Fatha;
    case Vowel::Damma: return Harakah::Damma;
    case Vowel::Kasra: return Harakah::Kasra;
    case Vowel::Sukun: return Harakah::Sukun;
    default: return std::nullopt;
  }
}

char32_t long_letter_for(Vowel v) noexcept {
  switch (v) {
    case Vowel::Fatha: return cp::kAlif;
    case Vowel::Damma: return cp::kWaw;
    case Vowel::Kasra: return cp::kYeh;
    default: return 0;
  }
}

bool is_alif_carrier(char32_t c) noexcept { return c == cp::kAlif || c == cp::kAlifMaksura; }

bool unvocalized(const Grapheme& g) noexcept {
  return !g.shadda && (!g.vowel || *g.vowel == Vowel::Sukun);
}

std::string describe_word(const Word& w) {
  try {
    return script::render_word(w);
  } catch (const Error&) {
    return "<empty>";
  }
}

}  // namespace

ScriptLine to_script_line(const ScansionLine& line) {
  ScriptLine out;
  out.words.reserve(line.words.size());
  for (const auto& w : line.words) {
    Word word;
    word.reserve(w.size());
    for (const auto& g : w) word.push_back(make_grapheme(g.base, to_vowel(g.mark)));
    out.words.push_back(std::move(word));
  }
  return out;
}

std::string render(const ScansionLine& line) {
  std::string out;
  bool first = true;
  for (const auto& w : to_script_line(line).words) {
    if (w.empty()) continue;
    if (!first) out.push_back(' ');
    first = false;
    out += script::render_word(w);
  }
  return out;
}

BeatPattern ScanResult::word_beats(std::size_t first, std::size_t count) const {
  const std::size_t last = std::min(first + count, word_offsets.size() - 1);
  if (first >= last) return {};
  return beats.slice(word_offsets[first], word_offsets[last] - word_offsets[first]);
}

namespace taqti {

bool is_long_vowel(const Word& word, std::size_t index) noexcept {
  if (index == 0 || index >= word.size()) return false;
  const Grapheme& g = word[index];
  if (g.silent || !unvocalized(g)) return false;
  const Grapheme& prev = word[index - 1];
  if (is_alif_carrier(g.base)) return prev.has_vowel(Vowel::Fatha);
  if (g.base == cp::kWaw) return prev.has_vowel(Vowel::Damma);
  if (g.base == cp::kYeh) return prev.has_vowel(Vowel::Kasra);
  return false;
}

bool begins_with_wasl(const Word& word) noexcept {
  return !word.empty() && word.front().is_wasl();
}

std::optional<Word> plural_m_variant(const Word& word) {
  if (word.size() < 3) return std::nullopt;
  const Grapheme& m = word.back();
  const Grapheme& pre = word[word.size() - 2];
  if (m.base != cp::kMeem || !unvocalized(m) || m.silent) return std::nullopt;
  if (pre.base != cp::kHeh && pre.base != cp::kKaf && pre.base != cp::kTeh) return std::nullopt;
  if (!pre.has_vowel(Vowel::Damma) && !pre.has_vowel(Vowel::Kasra)) return std::nullopt;
  Word variant = word;
  variant.back().vowel = Vowel::Damma;
  return variant;
}

ScriptLine apply_special_words(const ScriptLine& line, const SpecialWordTable& table) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    if (auto replacement = table.lookup(w)) w = std::move(*replacement);
  }
  return out;
}

ScriptLine remove_silent_graphemes(const ScriptLine& line) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    std::erase_if(w, [](const Grapheme& g) { return g.silent; });
  }
  return out;
}

ScriptLine expand_madda(const ScriptLine& line) {
  ScriptLine out;
  out.verse_final = line.verse_final;
  out.words.reserve(line.words.size());
  for (const auto& w : line.words) {
    Word word;
    word.reserve(w.size() + 1);
    for (const auto& g : w) {
      if (g.base == cp::kAlifMadda) {
        word.push_back(make_grapheme(cp::kAlifHamzaAbove, Vowel::Fatha));
        word.push_back(make_grapheme(cp::kAlif, Vowel::Sukun));
      } else {
        word.push_back(g);
      }
    }
    out.words.push_back(std::move(word));
  }
  return out;
}

ScriptLine process_hamzat_wasl(const ScriptLine& line, bool sentence_initial,
                               const JunctureTable& juncture) {
  ScriptLine out = line;
  auto& words = out.words;

  // The article's lam assimilates into a following sun letter. Behind the
  // preposition li- the article is written without its alif (لِلنَّاسِ).
  auto opens_article = [](const Word& w, std::size_t i) {
    if (w[i].is_wasl()) return true;
    if (w[i].base != cp::kLam || !w[i].has_vowel(Vowel::Kasra) || w[i].shadda) return false;
    return i == 0 || (i == 1 && (w[0].base == cp::kWaw || w[0].base == cp::kFeh) &&
                      w[0].has_vowel(Vowel::Fatha));
  };
  for (auto& w : words) {
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (opens_article(w, i) && w[i + 1].base == cp::kLam && unvocalized(w[i + 1]) &&
          unicode::is_sun_letter(w[i + 2].base)) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      }
    }
  }

  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::size_t i = 0;
    while (i < words[wi].size()) {
      if (!words[wi][i].is_wasl()) {
        ++i;
        continue;
      }
      if (i + 1 >= words[wi].size()) {
        throw Error(ErrorCode::DanglingWasl, "wasl alif ends the word " + describe_word(words[wi]));
      }

      std::size_t pw = wi;
      std::size_t pi = 0;
      bool found = false;
      if (i > 0) {
        pi = i - 1;
        found = true;
      } else {
        for (std::size_t k = wi; k-- > 0;) {
          if (!words[k].empty()) {
            pw = k;
            pi = words[k].size() - 1;
            found = true;
            break;
          }
        }
      }

      if (!found) {
        if (!sentence_initial) {
          throw Error(ErrorCode::DanglingWasl,
                      "line-initial wasl alif outside sentence-initial position");
        }
        Grapheme& g = words[wi][i];
        g.base = cp::kAlifHamzaAbove;
        g.vowel = Vowel::Fatha;
        ++i;
        continue;
      }

      Word& prev_word = words[pw];
      const bool same_word = pw == wi;

      // Nunation meeting a wasl: the nun surfaces with a helping kasra.
      auto nunate = [&](std::size_t at) {
        prev_word[at].vowel = short_of(*prev_word[at].vowel);
        prev_word.insert(prev_word.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                         make_grapheme(cp::kNoon, Vowel::Kasra));
        if (same_word) ++i;
      };

      Grapheme& p = prev_word[pi];
      if (p.vowel && is_tanwin(*p.vowel)) {
        nunate(pi);
      } else if (is_alif_carrier(p.base) && unvocalized(p) && pi > 0 &&
                 prev_word[pi - 1].has_vowel(Vowel::TanwinFath)) {
        prev_word.erase(prev_word.begin() + static_cast<std::ptrdiff_t>(pi));
        if (same_word) --i;
        nunate(pi - 1);
      } else if (is_long_vowel(prev_word, pi)) {
        prev_word.erase(prev_word.begin() + static_cast<std::ptrdiff_t>(pi));
        if (same_word) --i;
      } else if (!p.vocalized()) {
        p.vowel = same_word ? Vowel::Kasra : juncture.vowel_for(prev_word);
      }
      words[wi].erase(words[wi].begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return out;
}

ScriptLine expand_gemination(const ScriptLine& line) {
  ScriptLine out;
  out.verse_final = line.verse_final;
  out.words.reserve(line.words.size());
  for (const auto& w : line.words) {
    Word word;
    word.reserve(w.size() + 2);
    for (const auto& g : w) {
      if (!g.shadda) {
        word.push_back(g);
        continue;
      }
      if (!g.vocalized()) {
        throw Error(ErrorCode::ShaddaWithoutVowel, describe_word(w));
      }
      word.push_back(make_grapheme(g.base, Vowel::Sukun));
      word.push_back(make_grapheme(g.base, g.vowel));
    }
    out.words.push_back(std::move(word));
  }
  return out;
}

ScriptLine expand_tanwin(const ScriptLine& line) {
  ScriptLine out;
  out.verse_final = line.verse_final;
  out.words.reserve(line.words.size());
  for (const auto& w : line.words) {
    Word word;
    word.reserve(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Grapheme& g = w[i];
      if (!g.vowel || !is_tanwin(*g.vowel)) {
        word.push_back(g);
        continue;
      }
      Grapheme host = g;
      host.vowel = short_of(*g.vowel);
      word.push_back(host);
      word.push_back(make_grapheme(cp::kNoon, Vowel::Sukun));
      if (*g.vowel == Vowel::TanwinFath && i + 1 < w.size() && is_alif_carrier(w[i + 1].base) &&
          unvocalized(w[i + 1])) {
        ++i;
      }
    }
    out.words.push_back(std::move(word));
  }
  return out;
}

ScriptLine apply_isba(const ScriptLine& line, bool verse_final) {
  ScriptLine out = line;
  auto& words = out.words;

  auto next_nonempty = [&](std::size_t from) -> const Word* {
    for (std::size_t k = from + 1; k < words.size(); ++k) {
      if (!words[k].empty()) return &words[k];
    }
    return nullptr;
  };

  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    Word& w = words[wi];
    if (w.size() < 2) continue;
    const Word* next = next_nonempty(wi);
    if (!next || !next->front().vocalized()) continue;

    const Grapheme& last = w.back();
    const Grapheme& pre = w[w.size() - 2];
    if (last.shadda || !last.vowel) continue;
    const Vowel v = *last.vowel;
    const bool hu_hi = last.base == cp::kHeh && (v == Vowel::Damma || v == Vowel::Kasra) &&
                       pre.vocalized();
    const bool plural_m = last.base == cp::kMeem && (v == Vowel::Damma || v == Vowel::Kasra) &&
                          (pre.base == cp::kHeh || pre.base == cp::kKaf || pre.base == cp::kTeh) &&
                          (pre.has_vowel(Vowel::Damma) || pre.has_vowel(Vowel::Kasra));
    if (hu_hi || plural_m) w.push_back(make_grapheme(long_letter_for(v), Vowel::Sukun));
  }

  if (verse_final) {
    for (std::size_t k = words.size(); k-- > 0;) {
      if (words[k].empty()) continue;
      const Grapheme& last = words[k].back();
      if (last.vowel && is_short_vowel(*last.vowel)) {
        words[k].push_back(make_grapheme(long_letter_for(*last.vowel), Vowel::Sukun));
      }
      break;
    }
  }
  return out;
}

ScansionLine finalize(const ScriptLine& line) {
  ScansionLine out;
  out.words.reserve(line.words.size());
  for (const auto& w : line.words) {
    std::vector<ScannedGrapheme> word;
    word.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Grapheme& g = w[i];
      if (g.shadda || g.silent || g.is_wasl() || (g.vowel && is_tanwin(*g.vowel))) {
        throw Error(ErrorCode::UnderDiacritized, "unexpanded mark in " + describe_word(w));
      }
      Harakah mark;
      if (g.vowel) {
        mark = *to_harakah(*g.vowel);
      } else if ((is_alif_carrier(g.base) && i > 0) || is_long_vowel(w, i)) {
        mark = Harakah::Sukun;
      } else {
        throw Error(ErrorCode::UnderDiacritized, "unmarked letter in " + describe_word(w));
      }
      word.push_back(ScannedGrapheme{g.base, mark});
    }
    out.words.push_back(std::move(word));
  }
  return out;
}

BeatPattern to_beats(const ScansionLine& line) {
  BeatPattern beats;
  for (const auto& w : line.words) {
    for (const auto& g : w) beats.push(g.mark != Harakah::Sukun);
  }
  return beats;
}

ScanResult scan(const ScriptLine& line, const SpecialWordTable& special_words,
                const JunctureTable& juncture, bool sentence_initial) {
  ScriptLine work = apply_special_words(line, special_words);
  work = remove_silent_graphemes(work);
  work = expand_madda(work);
  work = process_hamzat_wasl(work, sentence_initial, juncture);
  work = expand_gemination(work);
  work = expand_tanwin(work);
  work = apply_isba(work, line.verse_final);

  ScanResult result;
  result.transcription = finalize(work);
  result.word_offsets.reserve(result.transcription.words.size() + 1);
  for (const auto& w : result.transcription.words) {
    result.word_offsets.push_back(result.beats.size());
    for (const auto& g : w) result.beats.push(g.mark != Harakah::Sukun);
  }
  result.word_offsets.push_back(result.beats.size());

  const auto& b = result.beats;
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    if (!b[i - 1] && !b[i]) {
      result.warnings.push_back("consecutive sakin letters at beats " + std::to_string(i - 1) +
                                "-" + std::to_string(i));
    }
  }
  return result;
}

ScanResult scan(const ScriptLine& line, const DataTables& tables, bool sentence_initial) {
  return scan(line, tables.special_words, tables.juncture, sentence_initial);
}

BeatPattern scan_span(const ScriptLine& line, std::size_t first, std::size_t count,
                      const DataTables& tables, bool sentence_initial) {
  return scan(line, tables, sentence_initial).word_beats(first, count);
}

}  // namespace taqti
}  // namespace arud
