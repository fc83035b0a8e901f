#pragma once

// Rhythm-constrained gap filling from a lexicon: finds word sequences whose
// beats, scanned in place between the given contexts, equal a target
// pattern. A non-neural oracle for the substitution task.

#include <string>
#include <vector>

#include "arud/beat.hpp"
#include "arud/corpus.hpp"
#include "arud/script.hpp"
#include "arud/tables.hpp"

namespace arud {

struct LexiconEntry {
  std::string surface;
  Word word;
  /// The word scanned alone, sentence-initial, not verse-final.
  BeatPattern isolated_beats;
  /// Added by the search as the poetic -mu reading of an unvocalized
  /// plural suffix rather than read from the input.
  bool plural_m_variant = false;
};

class Lexicon {
 public:
  /// Words that fail to parse or scan are skipped and reported in `skipped`
  /// (with 1-based input positions). Duplicate surfaces are collapsed.
  static Lexicon index(const std::vector<std::string>& words, const DataTables& tables,
                       std::vector<corpus::Rejection>* skipped = nullptr);

  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Distinct isolated patterns present in the prefix tree, in lexical order.
  std::vector<std::string> keys() const;

  /// Entries whose isolated pattern, aligned at target[offset] (or at
  /// target[offset - 1] with its first beat dropped, for wasl-initial words),
  /// agrees with the target everywhere except possibly its last two beats.
  std::vector<std::size_t> candidates(const BeatPattern& target, std::size_t offset) const;

 private:
  struct Node {
    int child[2] = {-1, -1};
    std::vector<std::size_t> entries;
  };
  void insert(std::size_t entry);
  void collect(int node, std::size_t depth, const BeatPattern& target, long start,
               std::size_t first_mismatch, bool wasl_only, std::vector<std::size_t>& out) const;

  std::vector<LexiconEntry> entries_;
  std::vector<Node> nodes_{Node{}};
};

struct FillQuery {
  std::string left_context;
  std::string right_context;
  BeatPattern target;
  std::size_t max_words = 3;
  std::size_t max_results = 100;
  bool verse_final = false;
  bool sentence_initial = true;
  /// Partial phrases kept per search level; 0 keeps all.
  std::size_t beam_width = 0;
  /// Prefix / candidate pruning; disabling it only makes the search slower.
  bool prune = true;

  /// Throws Error{InvalidConfig}.
  void validate() const;
};

/// Phrases (words joined by one space) ordered by their UTF-8 bytes.
std::vector<std::string> fill(const FillQuery& query, const Lexicon& lexicon,
                              const DataTables& tables);

/// Beats of `phrase` scanned between the query's contexts, or nullopt if the
/// assembly does not scan.
std::optional<BeatPattern> beats_in_context(const FillQuery& query,
                                            const std::vector<Word>& phrase,
                                            const DataTables& tables);

}  // namespace arud
