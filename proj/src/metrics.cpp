#include "arud/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <json.hpp>

#include "arud/error.hpp"
#include "arud/parallel.hpp"
#include "arud/taqti.hpp"

namespace arud {
namespace metrics {

namespace {

// Myers / Hyyro. `a` is the column pattern, 1 <= |a| <= 64.
std::size_t bit_parallel(std::string_view a, std::string_view b) {
  std::array<std::uint64_t, 256> peq{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    peq[static_cast<unsigned char>(a[i])] |= std::uint64_t{1} << i;
  }
  const std::uint64_t last = std::uint64_t{1} << (a.size() - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t score = a.size();
  for (char c : b) {
    const std::uint64_t eq = peq[static_cast<unsigned char>(c)];
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    if (ph & last) ++score;
    else if (mh & last) --score;
    ph = (ph << 1) | 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
  }
  return score;
}

std::size_t two_row(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::size_t diag = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      const std::size_t up = row[i];
      row[i] = std::min({row[i] + 1, row[i - 1] + 1, diag + (a[i - 1] != b[j - 1])});
      diag = up;
    }
  }
  return row[a.size()];
}

}  // namespace

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return b.size();
  if (a.size() <= 64) return bit_parallel(a, b);
  return two_row(a, b);
}

double levenshtein_similarity(const BeatPattern& a, const BeatPattern& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 100.0;
  const double d = static_cast<double>(edit_distance(a.str(), b.str()));
  return 100.0 * (1.0 - d / static_cast<double>(longest));
}

double exact_accuracy(const std::vector<std::pair<BeatPattern, BeatPattern>>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyEvaluation, "no pairs to score");
  const auto same = std::count_if(pairs.begin(), pairs.end(),
                                  [](const auto& p) { return p.first == p.second; });
  return 100.0 * static_cast<double>(same) / static_cast<double>(pairs.size());
}

}  // namespace metrics

PredictionRecord PredictionRecord::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    PredictionRecord r;
    r.line = j.value("line", std::size_t{0});
    r.target_beats = BeatPattern::parse(j.at("beats").get<std::string>());
    if (r.target_beats.empty()) throw Error(ErrorCode::MalformedRecord, "empty target beats");
    r.generated_text = j.at("generated_text").get<std::string>();
    r.has_context = j.contains("left_context") || j.contains("right_context");
    r.left_context = j.value("left_context", std::string{});
    r.right_context = j.value("right_context", std::string{});
    r.verse_final = j.value("verse_final", false);
    if (j.contains("coherence") && !j["coherence"].is_null()) {
      r.coherence = j["coherence"].get<double>();
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedRecord, ex.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedRecord) throw;
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
}

ScoredPrediction score_prediction(const PredictionRecord& record, const DataTables& tables) {
  ScoredPrediction s;
  try {
    const ScriptLine generated = script::parse_words(record.generated_text);
    if (generated.words.empty()) throw Error(ErrorCode::EmptyLine, "empty generated text");
    if (record.has_context) {
      ScriptLine line = script::parse_words(record.left_context);
      const std::size_t first = line.words.size();
      line.words.insert(line.words.end(), generated.words.begin(), generated.words.end());
      const ScriptLine right = script::parse_words(record.right_context);
      line.words.insert(line.words.end(), right.words.begin(), right.words.end());
      line.verse_final = record.verse_final;
      s.generated = taqti::scan_span(line, first, generated.words.size(), tables);
    } else {
      s.generated = taqti::scan(generated, tables).beats;
    }
  } catch (const Error& e) {
    s.failure = std::string(to_string(e.code()));
    return s;
  }
  s.exact = *s.generated == record.target_beats;
  s.similarity = metrics::levenshtein_similarity(record.target_beats, *s.generated);
  return s;
}

KeyValueReport EvalReport::report() const {
  KeyValueReport r("eval_report");
  r.add("n", std::uint64_t{n});
  r.add("exact_matches", std::uint64_t{exact_matches});
  r.add_percent("exact_accuracy", exact_accuracy);
  r.add_percent("mean_levenshtein_similarity", mean_levenshtein_similarity);
  r.add("scan_failure_count", std::uint64_t{scan_failure_count});
  r.add("malformed_count", std::uint64_t{malformed_count});
  if (coherence_count > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", mean_coherence);
    r.add("coherence_count", std::uint64_t{coherence_count});
    r.add("mean_coherence", buf);
  }
  return r;
}

EvalReport evaluate_predictions(const std::vector<PredictionRecord>& records,
                                const DataTables& tables, unsigned jobs) {
  if (records.empty()) throw Error(ErrorCode::EmptyEvaluation, "no predictions to score");
  std::vector<ScoredPrediction> scored(records.size());
  parallel_for(records.size(), jobs,
               [&](std::size_t i) { scored[i] = score_prediction(records[i], tables); });
  EvalReport rep;
  rep.n = records.size();
  double similarity = 0.0;
  double coherence = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    rep.exact_matches += scored[i].exact;
    rep.scan_failure_count += !scored[i].generated.has_value();
    similarity += scored[i].similarity;
    if (records[i].coherence) {
      ++rep.coherence_count;
      coherence += *records[i].coherence;
    }
  }
  const double n = static_cast<double>(rep.n);
  rep.exact_accuracy = 100.0 * static_cast<double>(rep.exact_matches) / n;
  rep.mean_levenshtein_similarity = similarity / n;
  if (rep.coherence_count > 0) rep.mean_coherence = coherence / static_cast<double>(rep.coherence_count);
  return rep;
}

EvalReport evaluate_prediction_lines(const std::vector<std::string>& lines,
                                     const DataTables& tables, unsigned jobs,
                                     std::vector<corpus::Rejection>* malformed) {
  std::vector<PredictionRecord> records;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    try {
      records.push_back(PredictionRecord::from_json(lines[i]));
    } catch (const Error& e) {
      ++bad;
      if (malformed) malformed->push_back({i + 1, std::string(to_string(e.code())), e.what()});
    }
  }
  EvalReport rep = evaluate_predictions(records, tables, jobs);
  rep.malformed_count = bad;
  return rep;
}

}  // namespace arud
