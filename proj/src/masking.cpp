#include "arud/masking.hpp"

#include <json.hpp>

#include "arud/error.hpp"
#include "arud/parallel.hpp"
#include "arud/taqti.hpp"
#include "arud/unicode.hpp"

namespace arud {

namespace cp = unicode::cp;

void MaskConfig::validate() const {
  auto check_p = [](double p, const char* name) {
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(ErrorCode::InvalidConfig, std::string(name) + " must lie in (0, 1)");
    }
  };
  check_p(span_p, "span_p");
  check_p(keep_p, "keep_p");
  check_p(sukun_drop, "sukun_drop");
  if (per_line == 0) throw Error(ErrorCode::InvalidConfig, "per_line must be positive");
  for (std::size_t i = 0; i < markers.size(); ++i) {
    const std::string& m = markers[i];
    if (m.empty()) throw Error(ErrorCode::InvalidConfig, "empty marker");
    if (m.find_first_not_of("01") == std::string::npos) {
      throw Error(ErrorCode::InvalidConfig, "marker " + m + " is made of beat digits");
    }
    for (char32_t c : unicode::decode_utf8(m)) {
      if (unicode::is_arabic_letter(c) || unicode::is_inventory_mark(c) ||
          unicode::is_ignorable_mark(c)) {
        throw Error(ErrorCode::InvalidConfig, "marker " + m + " contains Arabic script");
      }
    }
    for (std::size_t j = 0; j < markers.size(); ++j) {
      if (i != j && markers[j].find(m) != std::string::npos) {
        throw Error(ErrorCode::InvalidConfig, "marker " + m + " occurs inside " + markers[j]);
      }
    }
  }
}

std::string MaskedExample::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["line"] = line;
  j["example"] = example;
  j["input"] = input;
  j["target"] = target;
  j["beats"] = beats.str();
  j["span"] = {span.start, span.length};
  j["left_context"] = left_context;
  j["right_context"] = right_context;
  j["verse_final"] = verse_final;
  return j.dump();
}

MaskedExample MaskedExample::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    MaskedExample e;
    e.line = j.value("line", std::size_t{0});
    e.example = j.value("example", std::size_t{0});
    e.input = j.at("input").get<std::string>();
    e.target = j.at("target").get<std::string>();
    e.beats = BeatPattern::parse(j.at("beats").get<std::string>());
    const auto& span = j.at("span");
    e.span = MaskSpan{span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()};
    e.left_context = j.value("left_context", std::string{});
    e.right_context = j.value("right_context", std::string{});
    e.verse_final = j.value("verse_final", false);
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedRecord, ex.what());
  }
}

namespace masking {

MaskSpan sample_mask_span(const ScriptLine& line, const MaskConfig& cfg, RandomSource& rng) {
  const std::size_t n = line.words.size();
  if (n < 2) throw Error(ErrorCode::LineTooShort, std::to_string(n) + " word(s)");
  const std::size_t length = std::min(random::geometric_trials(rng, cfg.span_p), n - 1);
  const std::size_t start = random::uniform_index(rng, n - length + 1);
  return {start, length};
}

ScriptLine reduce_context_diacritics(const ScriptLine& context, const MaskConfig& cfg,
                                     RandomSource& rng) {
  struct Slot {
    std::size_t letter;
    bool shadda;
  };
  ScriptLine out = context;
  std::vector<Slot> pool;
  for (auto& w : out.words) {
    for (auto& g : w) {
      g.silent = false;
      if (g.is_wasl()) g.base = cp::kAlif;
      if (g.has_vowel(Vowel::Sukun) && random::bernoulli(rng, cfg.sukun_drop)) g.vowel.reset();
    }

    pool.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].shadda) pool.push_back({i, true});
      if (w[i].vocalized()) pool.push_back({i, false});
    }
    const std::size_t keep = random::truncated_geometric(rng, cfg.keep_p, pool.size());
    for (std::size_t j = 0; j < keep; ++j) {
      std::swap(pool[j], pool[j + random::uniform_index(rng, pool.size() - j)]);
    }
    for (std::size_t j = keep; j < pool.size(); ++j) {
      Grapheme& g = w[pool[j].letter];
      if (pool[j].shadda) {
        g.shadda = false;
      } else {
        g.vowel.reset();
      }
    }
  }
  return out;
}

MaskedExample build_example(const ScriptLine& line, MaskSpan span, const MaskConfig& cfg,
                            RandomSource& rng, const DataTables& tables) {
  const std::size_t n = line.words.size();
  if (n < 2 || span.length == 0 || span.length >= n || span.start + span.length > n) {
    throw Error(ErrorCode::LineTooShort, "span leaves no context");
  }
  const ScanResult scanned = taqti::scan(line, tables, true);

  MaskedExample e;
  e.span = span;
  e.beats = scanned.word_beats(span.start, span.length);
  e.target = script::render_words(line.words, span.start, span.length);
  e.left_context = script::render_words(line.words, 0, span.start);
  const std::size_t right = span.start + span.length;
  e.right_context = script::render_words(line.words, right, n - right);
  e.verse_final = line.verse_final;

  ScriptLine context;
  context.words.assign(line.words.begin(), line.words.begin() + static_cast<long>(span.start));
  context.words.insert(context.words.end(), line.words.begin() + static_cast<long>(right),
                       line.words.end());
  if (cfg.reduce_context) context = reduce_context_diacritics(context, cfg, rng);

  const std::string left = script::render_words(context.words, 0, span.start);
  const std::string rest = script::render_words(context.words, span.start, n - right);
  e.input = left;
  if (!left.empty()) e.input.push_back(' ');
  e.input += cfg.markers[0] + e.beats.str() + cfg.markers[1];
  if (!rest.empty()) e.input += " " + rest;
  e.input += cfg.markers[2];
  return e;
}

MaskedExample build_training_example(const ScriptLine& line, const MaskConfig& cfg,
                                     RandomSource& rng, const DataTables& tables) {
  const MaskSpan span = sample_mask_span(line, cfg, rng);
  return build_example(line, span, cfg, rng, tables);
}

Dataset generate_dataset(const std::vector<ScriptLine>& lines, const MaskConfig& cfg,
                         const DataTables& tables, unsigned jobs) {
  cfg.validate();
  struct Slot {
    std::vector<MaskedExample> examples;
    std::optional<corpus::Rejection> skipped;
  };
  std::vector<Slot> slots(lines.size());
  parallel_for(lines.size(), resolve_jobs(jobs), [&](std::size_t i) {
    for (std::size_t k = 0; k < cfg.per_line; ++k) {
      Mt64Source rng(derive_seed(cfg.seed, i, k));
      try {
        MaskedExample e = build_training_example(lines[i], cfg, rng, tables);
        e.line = i + 1;
        e.example = k;
        slots[i].examples.push_back(std::move(e));
      } catch (const Error& err) {
        slots[i].skipped = corpus::Rejection{i + 1, std::string(to_string(err.code())), err.what()};
        slots[i].examples.clear();
        break;
      }
    }
  });

  Dataset out;
  for (auto& s : slots) {
    for (auto& e : s.examples) out.examples.push_back(std::move(e));
    if (s.skipped) out.skipped.push_back(std::move(*s.skipped));
  }
  return out;
}

}  // namespace masking
}  // namespace arud
