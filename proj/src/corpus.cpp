#include "arud/corpus.hpp"

#include <istream>

#include <json.hpp>

#include "arud/error.hpp"
#include "arud/parallel.hpp"
#include "arud/report.hpp"
#include "arud/taqti.hpp"
#include "arud/unicode.hpp"

namespace arud {

namespace cp = unicode::cp;

std::string_view to_string(FilterReason reason) noexcept {
  switch (reason) {
    case FilterReason::Ok: return "Ok";
    case FilterReason::TooFewWords: return "TooFewWords";
    case FilterReason::WordUndiacritized: return "WordUndiacritized";
    case FilterReason::BelowLetterRatio: return "BelowLetterRatio";
    case FilterReason::ForeignResidue: return "ForeignResidue";
  }
  return "Ok";
}

void DiacriticStats::add(const ScriptLine& line) {
  for (const auto& w : line.words) {
    for (const auto& g : w) {
      ++total_letters;
      if (g.is_wasl()) ++hamzat_wasl;
      if (g.shadda) {
        ++marks[static_cast<std::size_t>(Mark::Shadda)];
        ++total_diacritics;
      }
      if (g.vowel) {
        ++marks[static_cast<std::size_t>(to_mark(*g.vowel))];
        ++total_diacritics;
      }
      if (g.silent) {
        ++marks[static_cast<std::size_t>(Mark::Silence)];
        ++total_diacritics;
      }
    }
  }
}

void DiacriticStats::merge(const DiacriticStats& other) {
  for (std::size_t i = 0; i < kMarkCount; ++i) marks[i] += other.marks[i];
  hamzat_wasl += other.hamzat_wasl;
  total_diacritics += other.total_diacritics;
  total_letters += other.total_letters;
}

std::string DiacriticStats::report() const {
  KeyValueReport r("diacritic_stats");
  for (std::size_t i = 0; i < kMarkCount; ++i) {
    r.add(std::string(mark_name(static_cast<Mark>(i))), marks[i]);
  }
  r.add("hamzat_wasl", hamzat_wasl);
  r.add("total_diacritics", total_diacritics);
  r.add("total_letters", total_letters);
  for (std::size_t i = 0; i < kMarkCount; ++i) {
    const double share = total_diacritics == 0
                             ? 0.0
                             : 100.0 * static_cast<double>(marks[i]) /
                                   static_cast<double>(total_diacritics);
    r.add_percent(std::string(mark_name(static_cast<Mark>(i))) + "_percent", share);
  }
  return r.str();
}

namespace corpus {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_proclitic(const Grapheme& g) noexcept {
  switch (g.base) {
    case cp::kWaw: case cp::kFeh: case cp::kBeh:
    case cp::kKaf: case cp::kLam: case cp::kSeen:
      return !g.shadda && g.vowel && is_short_vowel(*g.vowel);
    default:
      return false;
  }
}

bool unvocalized_or_geminated(const Grapheme& g) noexcept {
  return g.shadda || !g.vowel || *g.vowel == Vowel::Sukun;
}

}  // namespace

std::string join_hemistichs(std::string_view first, std::string_view second) {
  const auto a = trim(first);
  const auto b = trim(second);
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyHemistich, "blank hemistich");
  std::string out(a);
  out.push_back(' ');
  out += b;
  return out;
}

std::string clean_line(std::string_view raw) {
  const std::u32string text = unicode::decode_utf8_lossy(raw);
  std::u32string kept;
  kept.reserve(text.size());
  bool after_letter = false;
  for (char32_t c : text) {
    if (unicode::is_arabic_letter(c)) {
      kept.push_back(c);
      after_letter = true;
    } else if (unicode::is_inventory_mark(c) || unicode::is_ignorable_mark(c)) {
      if (after_letter) kept.push_back(c);
    } else {
      kept.push_back(U' ');
      after_letter = false;
    }
  }
  return script::fix_diacritic_order(unicode::encode_utf8(kept));
}

FilterDecision filter_line(const ScriptLine& line) {
  if (line.words.size() < kMinWords) return {false, FilterReason::TooFewWords};
  for (const auto& w : line.words) {
    if (script::word_diacritization_ratio(w) == 0.0) {
      return {false, FilterReason::WordUndiacritized};
    }
  }
  for (const auto& w : line.words) {
    if (script::word_diacritization_ratio(w) < kMinWordRatio) {
      return {false, FilterReason::BelowLetterRatio};
    }
  }
  return {true, FilterReason::Ok};
}

ScriptLine apply_wasl_heuristic(const ScriptLine& line) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    for (std::size_t i = 0; i + 1 < w.size() && i <= 2; ++i) {
      Grapheme& g = w[i];
      if (g.base == cp::kAlif && g.bare() && unvocalized_or_geminated(w[i + 1])) {
        g.base = cp::kAlifWasla;
        break;
      }
      if (!is_proclitic(g)) break;
    }
  }
  return out;
}

ScriptLine apply_lam_kasra(const ScriptLine& line) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    if (w.size() >= 3 && w[0].base == cp::kLam && w[0].bare() && w[1].base == cp::kLam) {
      w[0].vowel = Vowel::Kasra;
    }
  }
  return out;
}

ScriptLine mark_silent_letters(const ScriptLine& line, const SilentLetterTable& table) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    const auto pos = table.silent_position(w);
    if (!pos) continue;
    Grapheme& g = w[*pos];
    if (g.shadda || g.is_wasl() || (g.vowel && *g.vowel != Vowel::Sukun)) continue;
    // After fatha the letter is a pronounced long vowel or glide, not silent.
    if (*pos > 0 && (w[*pos - 1].has_vowel(Vowel::Fatha) || w[*pos - 1].has_vowel(Vowel::TanwinFath)))
      continue;
    g.vowel.reset();
    g.silent = true;
  }
  return out;
}

ScriptLine assign_default_sukun(const ScriptLine& line) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    for (auto& g : w) {
      if (!g.vowel && !g.silent && !g.is_wasl()) g.vowel = Vowel::Sukun;
    }
  }
  return out;
}

ScriptLine diacritize_known_words(const ScriptLine& line, const KnownWordTable& table) {
  ScriptLine out = line;
  for (auto& w : out.words) {
    const Word* entry = table.find(w);
    if (!entry || entry->size() != w.size()) continue;
    Word merged = *entry;
    bool conflict = false;
    for (std::size_t i = 0; i < w.size() && !conflict; ++i) {
      const Grapheme& have = w[i];
      const Grapheme& want = (*entry)[i];
      if (have.silent || have.is_wasl() != want.is_wasl() || (have.shadda && !want.shadda)) {
        conflict = true;
      } else if (have.vowel) {
        if (want.vowel) {
          conflict = *have.vowel != *want.vowel;
        } else if (*have.vowel == Vowel::Sukun) {
          merged[i].vowel = Vowel::Sukun;
        } else {
          conflict = true;
        }
      }
    }
    if (!conflict) w = std::move(merged);
  }
  return out;
}

DiacriticStats compute_stats(const std::vector<ScriptLine>& lines) {
  DiacriticStats stats;
  for (const auto& l : lines) stats.add(l);
  return stats;
}

std::string Rejection::to_json() const {
  nlohmann::json j;
  j["line"] = line;
  j["reason"] = reason;
  if (!detail.empty()) j["detail"] = detail;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

LineOutcome process_line(std::string_view raw, std::size_t line_number,
                         const PipelineConfig& config, const DataTables& tables) {
  LineOutcome outcome;
  auto reject = [&](std::string_view reason, std::string detail = {}) {
    outcome.rejection = Rejection{line_number, std::string(reason), std::move(detail)};
    return outcome;
  };

  std::string text(raw);
  if (config.hemistich_pairs) {
    const auto tab = text.find('\t');
    try {
      if (tab == std::string::npos) throw Error(ErrorCode::EmptyHemistich, "no hemistich separator");
      text = join_hemistichs(std::string_view(text).substr(0, tab),
                             std::string_view(text).substr(tab + 1));
    } catch (const Error& e) {
      return reject(to_string(e.code()), e.what());
    }
  }
  if (config.clean) text = clean_line(text);

  ScriptLine line;
  try {
    line = script::parse_words(text);
  } catch (const Error& e) {
    return reject(to_string(FilterReason::ForeignResidue), e.what());
  }

  if (config.known_words) line = diacritize_known_words(line, tables.known_words);
  if (const FilterDecision d = filter_line(line); !d.accepted) return reject(to_string(d.reason));

  if (config.wasl_heuristic) line = apply_wasl_heuristic(line);
  if (config.lam_kasra) line = apply_lam_kasra(line);
  if (config.silent_letters) line = mark_silent_letters(line, tables.silent_letters);
  if (config.default_sukun) line = assign_default_sukun(line);

  if (config.verify_scan) {
    try {
      taqti::scan(line, tables, true);
    } catch (const Error& e) {
      return reject(to_string(e.code()), e.what());
    }
  }
  outcome.accepted = std::move(line);
  return outcome;
}

PipelineResult run_pipeline(const std::vector<std::string>& raw_lines,
                            const PipelineConfig& config, const DataTables& tables) {
  std::vector<LineOutcome> outcomes(raw_lines.size());
  parallel_for(raw_lines.size(), resolve_jobs(config.jobs), [&](std::size_t i) {
    outcomes[i] = process_line(raw_lines[i], i + 1, config, tables);
  });

  PipelineResult result;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.accepted) {
      result.stats.add(*o.accepted);
      result.accepted.push_back(std::move(*o.accepted));
      result.accepted_line_numbers.push_back(i + 1);
    } else if (o.rejection) {
      result.rejections.push_back(std::move(*o.rejection));
    }
  }
  return result;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed after line " + std::to_string(lines.size()));
  return lines;
}

}  // namespace corpus
}  // namespace arud
