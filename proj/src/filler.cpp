#include "arud/filler.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "arud/error.hpp"
#include "arud/taqti.hpp"

namespace arud {

namespace {

// Juncture with the next word touches at most this many trailing beats of a
// word: an appended extension, a dropped long vowel, or a vocalized final.
constexpr std::size_t kSlack = 2;
constexpr std::size_t kNoMismatch = SIZE_MAX;

// Entries of `length` beats tolerate disagreement only in their last kSlack.
bool tolerated(std::size_t first_mismatch, std::size_t length) {
  return first_mismatch == kNoMismatch || first_mismatch + kSlack >= length;
}

}  // namespace

Lexicon Lexicon::index(const std::vector<std::string>& words, const DataTables& tables,
                       std::vector<corpus::Rejection>* skipped) {
  Lexicon lex;
  std::set<std::string> seen;
  auto add = [&](Word word, bool variant) {
    std::string surface = script::render_word(word);
    if (!seen.insert(surface).second) return;
    const ScanResult r = taqti::scan(ScriptLine{{word}}, tables, true);
    if (r.beats.empty()) throw Error(ErrorCode::UnderDiacritized, "no pronounced letter");
    lex.entries_.push_back(LexiconEntry{std::move(surface), std::move(word), r.beats, variant});
    lex.insert(lex.entries_.size() - 1);
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      const std::string text = script::fix_diacritic_order(words[i]);
      if (text.empty()) continue;
      Word word = script::parse_word(text);
      auto variant = taqti::plural_m_variant(word);
      add(std::move(word), false);
      if (variant) add(std::move(*variant), true);
    } catch (const Error& e) {
      if (skipped) skipped->push_back({i + 1, std::string(to_string(e.code())), e.what()});
    }
  }
  return lex;
}

void Lexicon::insert(std::size_t entry) {
  int node = 0;
  const BeatPattern& b = entries_[entry].isolated_beats;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int bit = b[i] ? 1 : 0;
    if (nodes_[node].child[bit] < 0) {
      nodes_[node].child[bit] = static_cast<int>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].child[bit];
  }
  nodes_[node].entries.push_back(entry);
}

std::vector<std::string> Lexicon::keys() const {
  std::vector<std::string> out;
  std::vector<std::pair<int, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [node, prefix] = stack.back();
    stack.pop_back();
    if (!nodes_[node].entries.empty()) out.push_back(prefix);
    for (int bit : {1, 0}) {
      if (nodes_[node].child[bit] >= 0) stack.emplace_back(nodes_[node].child[bit], prefix + char('0' + bit));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Lexicon::collect(int node, std::size_t depth, const BeatPattern& target, long start,
                      std::size_t first_mismatch, bool wasl_only,
                      std::vector<std::size_t>& out) const {
  if (tolerated(first_mismatch, depth)) {
    for (std::size_t e : nodes_[node].entries) {
      if (!wasl_only || taqti::begins_with_wasl(entries_[e].word)) out.push_back(e);
    }
  }
  if (!tolerated(first_mismatch, depth + 1)) return;
  for (int bit : {0, 1}) {
    const int child = nodes_[node].child[bit];
    if (child < 0) continue;
    std::size_t mismatch = first_mismatch;
    const long pos = start + static_cast<long>(depth);
    const bool free_head = wasl_only && depth == 0;
    if (!free_head && mismatch == kNoMismatch) {
      const bool agrees = pos >= 0 && static_cast<std::size_t>(pos) < target.size() &&
                          target[static_cast<std::size_t>(pos)] == (bit == 1);
      if (!agrees) mismatch = depth;
    }
    collect(child, depth + 1, target, start, mismatch, wasl_only, out);
  }
}

std::vector<std::size_t> Lexicon::candidates(const BeatPattern& target, std::size_t offset) const {
  std::vector<std::size_t> out;
  collect(0, 0, target, static_cast<long>(offset), kNoMismatch, false, out);
  collect(0, 0, target, static_cast<long>(offset) - 1, kNoMismatch, true, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void FillQuery::validate() const {
  if (target.empty()) throw Error(ErrorCode::InvalidConfig, "empty target pattern");
  if (max_words == 0 || max_results == 0) {
    throw Error(ErrorCode::InvalidConfig, "max_words and max_results must be positive");
  }
}

namespace {

struct Assembly {
  ScriptLine line;
  std::size_t first = 0;
};

Assembly assemble(const ScriptLine& left, const std::vector<Word>& phrase, const ScriptLine& right,
                  bool verse_final) {
  Assembly a;
  a.line.words = left.words;
  a.first = left.words.size();
  a.line.words.insert(a.line.words.end(), phrase.begin(), phrase.end());
  a.line.words.insert(a.line.words.end(), right.words.begin(), right.words.end());
  a.line.verse_final = verse_final;
  return a;
}

std::optional<BeatPattern> span_beats(const Assembly& a, std::size_t count, const DataTables& tables,
                                      bool sentence_initial) {
  try {
    return taqti::scan(a.line, tables, sentence_initial).word_beats(a.first, count);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string join(const std::vector<std::size_t>& ids, const Lexicon& lex) {
  std::string out;
  for (std::size_t id : ids) {
    if (!out.empty()) out.push_back(' ');
    out += lex.entries()[id].surface;
  }
  return out;
}

}  // namespace

std::optional<BeatPattern> beats_in_context(const FillQuery& query, const std::vector<Word>& phrase,
                                            const DataTables& tables) {
  const ScriptLine left = script::parse_words(query.left_context);
  const ScriptLine right = script::parse_words(query.right_context);
  return span_beats(assemble(left, phrase, right, query.verse_final), phrase.size(), tables,
                    query.sentence_initial);
}

std::vector<std::string> fill(const FillQuery& query, const Lexicon& lexicon,
                              const DataTables& tables) {
  query.validate();
  const ScriptLine left = script::parse_words(query.left_context);
  const ScriptLine right = script::parse_words(query.right_context);
  const BeatPattern& target = query.target;

  std::vector<std::size_t> all(lexicon.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  // Beats of a (partial) phrase as if it ended the line; the right context
  // and the verse end only change its last kSlack beats and its length by one.
  auto prefix_beats = [&](const std::vector<Word>& words) {
    return span_beats(assemble(left, words, {}, false), words.size(), tables, query.sentence_initial);
  };
  auto viable = [&](const BeatPattern& prefix) {
    const std::size_t n = prefix.size();
    if (n > target.size() + 1) return false;
    return n <= kSlack || target.starts_with(prefix.slice(0, n - kSlack));
  };

  std::set<std::string> found;
  struct Partial {
    std::vector<std::size_t> ids;
    std::size_t beats = 0;  // prefix length, when pruning
  };
  std::vector<Partial> frontier{{}};
  for (std::size_t depth = 0; depth < query.max_words && !frontier.empty(); ++depth) {
    std::vector<Partial> next;
    for (const auto& partial : frontier) {
      std::vector<Word> words;
      for (std::size_t id : partial.ids) words.push_back(lexicon.entries()[id].word);

      std::vector<std::size_t> ids;
      if (!query.prune) {
        ids = all;
      } else if (partial.ids.empty()) {
        ids = lexicon.candidates(target, 0);
      } else {
        const std::size_t n = partial.beats;
        for (std::size_t d : {n - 1, n, n + 1}) {
          if (d > target.size()) continue;
          auto c = lexicon.candidates(target, d);
          ids.insert(ids.end(), c.begin(), c.end());
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      }

      for (std::size_t id : ids) {
        Partial child{partial.ids, 0};
        child.ids.push_back(id);
        words.push_back(lexicon.entries()[id].word);
        bool rescan = true;
        if (query.prune) {
          const auto prefix = prefix_beats(words);
          if (!prefix || !viable(*prefix)) {
            words.pop_back();
            continue;
          }
          child.beats = prefix->size();
          rescan = child.beats + 1 >= target.size();
        }
        if (rescan) {
          const auto beats = span_beats(assemble(left, words, right, query.verse_final),
                                        words.size(), tables, query.sentence_initial);
          if (beats && *beats == target) found.insert(join(child.ids, lexicon));
        }
        words.pop_back();
        next.push_back(std::move(child));
      }
    }
    if (query.beam_width != 0 && next.size() > query.beam_width) {
      std::sort(next.begin(), next.end(), [&](const Partial& a, const Partial& b) {
        return join(a.ids, lexicon) < join(b.ids, lexicon);
      });
      next.resize(query.beam_width);
    }
    frontier = std::move(next);
  }

  std::vector<std::string> out(found.begin(), found.end());
  if (out.size() > query.max_results) out.resize(query.max_results);
  return out;
}

}  // namespace arud
