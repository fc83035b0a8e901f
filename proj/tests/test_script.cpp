#include <algorithm>
#include <string>

#include "doctest.h"
#include "arud/error.hpp"
#include "arud/random.hpp"
#include "arud/script.hpp"
#include "arud/unicode.hpp"
#include "support.hpp"
#include "synthetic.hpp"

using namespace arud;
namespace cp = arud::unicode::cp;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

std::string u8(std::u32string_view s) { return unicode::encode_utf8(s); }

// Any valid grapheme: random letter, random legal mark combination.
Grapheme random_grapheme(RandomSource& rng) {
  static constexpr std::u32string_view kLetters = U"ءآأؤإئابةتثجحخدذرزسشصضطظعغفقكلمنهوىيٱ";
  Grapheme g;
  g.base = kLetters[random::uniform_index(rng, kLetters.size())];
  if (g.base == cp::kAlifWasla) return g;
  switch (random::uniform_index(rng, 4)) {
    case 0: break;
    case 1: g.silent = true; break;
    default:
      if (random::bernoulli(rng, 0.8)) g.vowel = static_cast<Vowel>(random::uniform_index(rng, 7));
      g.shadda = random::bernoulli(rng, 0.3);
  }
  return g;
}

// Marks of each letter written in a random order.
std::string scramble_marks(const Word& w, RandomSource& rng) {
  std::u32string out;
  for (const Grapheme& g : w) {
    out.push_back(g.base);
    std::u32string marks;
    if (g.shadda) marks.push_back(cp::kShadda);
    if (g.vowel) marks.push_back(code_point(*g.vowel));
    if (g.silent) marks.push_back(cp::kSilenceMark);
    for (std::size_t i = marks.size(); i > 1; --i)
      std::swap(marks[i - 1], marks[random::uniform_index(rng, i)]);
    out += marks;
  }
  return u8(out);
}

}  // namespace

TEST_SUITE("script") {

TEST_CASE("parse_line examples") {
  ScriptLine ma = script::parse_line("مَا");
  REQUIRE(ma.words.size() == 1);
  REQUIRE(ma.words[0].size() == 2);
  CHECK(ma.words[0][0] == make_grapheme(cp::kMeem, Vowel::Fatha));
  CHECK(ma.words[0][1] == make_grapheme(cp::kAlif));

  ScriptLine allama = script::parse_line("عَلَّمَ");
  REQUIRE(allama.words.size() == 1);
  const Word& w = allama.words[0];
  REQUIRE(w.size() == 3);
  CHECK(w[0] == make_grapheme(U'ع', Vowel::Fatha));
  CHECK(w[1] == make_grapheme(cp::kLam, Vowel::Fatha, true));
  CHECK(w[2] == make_grapheme(cp::kMeem, Vowel::Fatha));

  CHECK(code_of([] { script::parse_line("َمَا"); }) == ErrorCode::LeadingDiacritic);
}

TEST_CASE("parse_line errors") {
  CHECK(code_of([] { script::parse_line(""); }) == ErrorCode::EmptyLine);
  CHECK(code_of([] { script::parse_line(" \t "); }) == ErrorCode::EmptyLine);
  CHECK(code_of([] { script::parse_line("مَا ab"); }) == ErrorCode::ForeignCharacter);
  CHECK(code_of([] { script::parse_line("مَا ١"); }) == ErrorCode::ForeignCharacter);
  CHECK(code_of([] { script::parse_line("مَا ،"); }) == ErrorCode::ForeignCharacter);
  CHECK(code_of([] { script::parse_line("مَا ـَ"); }) == ErrorCode::ForeignCharacter);
  CHECK(code_of([] { script::parse_line("مَُ"); }) == ErrorCode::ConflictingMarks);
  CHECK(code_of([] { script::parse_line("مّّ"); }) == ErrorCode::ConflictingMarks);
  CHECK(code_of([] { script::parse_line("ٱّ"); }) == ErrorCode::ConflictingMarks);
  CHECK(code_of([] { script::parse_line("مَ۠"); }) == ErrorCode::ConflictingMarks);
  CHECK(code_of([] { script::parse_line("\xff"); }) == ErrorCode::ForeignCharacter);
  CHECK(code_of([] { script::parse_word("مَا لَهُ"); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { script::parse_word(" "); }) == ErrorCode::EmptyWord);
}

TEST_CASE("whitespace runs delimit words") {
  ScriptLine l = script::parse_line("  مَا \t  لَهُ  ");
  CHECK(l.words.size() == 2);
  CHECK(script::render_line(l) == "مَا لَهُ");
  CHECK(script::parse_words("  ").words.empty());
}

TEST_CASE("input is composed before parsing") {
  // alif + combining madda, alif + combining hamza above
  ScriptLine l = script::parse_line("آمَ أَ");
  CHECK(l.words[0][0].base == cp::kAlifMadda);
  CHECK(l.words[1][0].base == cp::kAlifHamzaAbove);
  CHECK(script::render_line(l) == "آمَ أَ");
}

TEST_CASE("render puts shadda before vowel") {
  const std::string shadda_first = u8(U"\u0645\u0651\u064E");
  CHECK(script::render_line(script::parse_line(u8(U"\u0645\u064E\u0651"))) == shadda_first);
  CHECK(script::render_line(script::parse_line(shadda_first)) == shadda_first);

  Word w{make_grapheme(cp::kMeem, Vowel::TanwinFath), make_grapheme(cp::kAlif)};
  CHECK(script::render_word(w) == u8(U"\u0645\u064B\u0627"));

  CHECK(code_of([] { script::render_line(ScriptLine{}); }) == ErrorCode::EmptyLine);
  CHECK(code_of([] { script::render_word(Word{}); }) == ErrorCode::EmptyWord);
}

TEST_CASE("round trip on random lines") {
  Mt64Source rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    ScriptLine line;
    const std::size_t words = 1 + random::uniform_index(rng, 6);
    for (std::size_t i = 0; i < words; ++i) {
      Word w;
      const std::size_t n = 1 + random::uniform_index(rng, 6);
      for (std::size_t j = 0; j < n; ++j) w.push_back(random_grapheme(rng));
      line.words.push_back(std::move(w));
    }
    const std::string text = script::render_line(line);
    REQUIRE(script::parse_line(text) == line);
  }
}

TEST_CASE("fix_diacritic_order examples") {
  CHECK(script::fix_diacritic_order(u8(U"\u0645\u064E\u0651")) == u8(U"\u0645\u0651\u064E"));
  CHECK(script::fix_diacritic_order(u8(U"\u0643\u062A\u0627\u0628\u0627\u064B")) ==
        u8(U"\u0643\u062A\u0627\u0628\u064B\u0627"));
  const std::string canonical = test::canon("عَلَّمَ مَعًا");
  CHECK(script::fix_diacritic_order(canonical) == canonical);
}

TEST_CASE("fix_diacritic_order resolves doubles, strips annotation marks") {
  CHECK(script::fix_diacritic_order("مَُ") == "مَ");
  CHECK(script::fix_diacritic_order("مُْ") == "مُ");
  CHECK(script::fix_diacritic_order("قـــالَ") == "قالَ");
  CHECK(script::fix_diacritic_order(u8(U"هٰذَا")) == "هذَا");
  CHECK(script::fix_diacritic_order("  مَا   لَهُ ") == "مَا لَهُ");
  // Tanwin on an alif whose predecessor already has another vowel is dropped.
  CHECK(script::fix_diacritic_order(u8(U"\u0645\u064F\u0627\u064B")) == u8(U"\u0645\u064F\u0627"));
  CHECK(code_of([] { script::fix_diacritic_order("َمَا"); }) == ErrorCode::LeadingDiacritic);
  CHECK(code_of([] { script::fix_diacritic_order("abc"); }) == ErrorCode::ForeignCharacter);
}

TEST_CASE("fix_diacritic_order is idempotent and parseable") {
  static constexpr std::u32string_view kPool =
      U"ملاىبٱًٌٍَُِّْ"
      U"۠ـٰ ٓ";
  Mt64Source rng(5);
  int parsed = 0;
  for (int iter = 0; iter < 5000; ++iter) {
    std::u32string raw;
    const std::size_t n = 1 + random::uniform_index(rng, 14);
    raw.push_back(U'م');
    for (std::size_t i = 0; i < n; ++i) raw.push_back(kPool[random::uniform_index(rng, kPool.size())]);
    std::string once;
    try {
      once = script::fix_diacritic_order(u8(raw));
    } catch (const Error&) {
      continue;
    }
    ++parsed;
    REQUIRE(script::fix_diacritic_order(once) == once);
    if (!once.empty()) {
      REQUIRE_NOTHROW(script::parse_line(once));
      REQUIRE(script::render_line(script::parse_line(once)) == once);
    }
  }
  CHECK(parsed > 2500);
}

TEST_CASE("word_diacritization_ratio") {
  CHECK(script::word_diacritization_ratio(script::parse_word("مَا")) == doctest::Approx(0.5));
  CHECK(script::word_diacritization_ratio(script::parse_word("عَلَّمَ")) == doctest::Approx(1.0));
  CHECK(script::word_diacritization_ratio(script::parse_word("علم")) == doctest::Approx(0.0));
  CHECK(script::word_diacritization_ratio(script::parse_word("ٱلشَّمْسُ")) ==
        doctest::Approx(4.0 / 5.0));
  CHECK(script::word_diacritization_ratio(script::parse_word("عَمْرٌو۠")) == doctest::Approx(1.0));
  CHECK(code_of([] { script::word_diacritization_ratio(Word{}); }) == ErrorCode::EmptyWord);
}

TEST_CASE("ratio is invariant under mark reordering") {
  test::SyntheticText gen(3);
  Mt64Source rng(4);
  for (int iter = 0; iter < 1000; ++iter) {
    Word w = gen.word();
    if (gen.chance(0.3)) w.back().vowel.reset();
    const double ratio = script::word_diacritization_ratio(w);
    const Word reparsed = script::parse_word(scramble_marks(w, rng));
    REQUIRE(reparsed == w);
    REQUIRE(script::word_diacritization_ratio(reparsed) == ratio);
  }
}

TEST_CASE("base_key folds wasl") {
  CHECK(script::base_key(script::parse_word("ٱلشَّمْسُ")) == U"الشمس");
  CHECK(script::base_key(std::u32string_view(U"ٱبن")) == U"ابن");
}

}  // TEST_SUITE
