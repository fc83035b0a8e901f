#include <algorithm>
#include <string>
#include <vector>
#include <json.hpp>

#include "doctest.h"
#include "arud/error.hpp"
#include "arud/masking.hpp"
#include "arud/metrics.hpp"
#include "arud/random.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "synthetic.hpp"

using namespace arud;
using test::tables;

namespace {

std::string random_digits(Mt64Source& rng, std::size_t max_len) {
  std::string s(random::uniform_index(rng, max_len + 1), '0');
  for (char& c : s) c = random::bernoulli(rng, 0.6) ? '1' : '0';
  return s;
}

BeatPattern bp(const char* s) { return BeatPattern::parse(s); }

std::string record(const std::string& beats, const std::string& text) {
  return R"({"beats":")" + beats + R"(","generated_text":")" + text + R"("})";
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("similarity examples") {
  CHECK(metrics::levenshtein_similarity(bp("11010"), bp("11010")) == 100.0);
  CHECK(metrics::levenshtein_similarity(bp("10"), bp("1")) == doctest::Approx(50.0));
  CHECK(format_percent(metrics::levenshtein_similarity(bp("101"), bp("010"))) == "33.33");
  CHECK(metrics::levenshtein_similarity(BeatPattern{}, BeatPattern{}) == 100.0);
  CHECK(metrics::levenshtein_similarity(BeatPattern{}, bp("10")) == 0.0);
}

TEST_CASE("edit distance matches the naive table") {
  Mt64Source rng(81);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t max_len = iter < 1000 ? 30 : 150;
    const std::string a = random_digits(rng, max_len), b = random_digits(rng, max_len);
    REQUIRE(metrics::edit_distance(a, b) == test::naive_distance(a, b));
  }
  CHECK(metrics::edit_distance(std::string(64, '1'), std::string(64, '0')) == 64);
  CHECK(metrics::edit_distance(std::string(65, '1'), std::string(64, '1')) == 1);
}

TEST_CASE("similarity properties") {
  Mt64Source rng(82);
  for (int iter = 0; iter < 1000; ++iter) {
    const BeatPattern a = BeatPattern::parse(random_digits(rng, 30));
    const BeatPattern b = BeatPattern::parse(random_digits(rng, 30));
    const BeatPattern c = BeatPattern::parse(random_digits(rng, 30));
    const double s = metrics::levenshtein_similarity(a, b);
    REQUIRE(s == metrics::levenshtein_similarity(b, a));
    REQUIRE((s == 100.0) == (a == b));
    REQUIRE(s >= 0.0);
    REQUIRE(s <= 100.0);
    REQUIRE(metrics::edit_distance(a.str(), c.str()) <=
            metrics::edit_distance(a.str(), b.str()) + metrics::edit_distance(b.str(), c.str()));
  }
}

TEST_CASE("exact accuracy") {
  CHECK(metrics::exact_accuracy({{bp("10"), bp("10")}, {bp("10"), bp("11")}}) == 50.0);
  CHECK(metrics::exact_accuracy({{bp("1"), bp("1")}, {bp("0"), bp("0")}}) == 100.0);
  CHECK_THROWS_AS(metrics::exact_accuracy({}), Error);

  Mt64Source rng(83);
  std::vector<std::pair<BeatPattern, BeatPattern>> pairs;
  for (int i = 0; i < 200; ++i) {
    const BeatPattern a = BeatPattern::parse(random_digits(rng, 4));
    pairs.emplace_back(a, random::bernoulli(rng, 0.5) ? a : BeatPattern::parse(random_digits(rng, 4)));
  }
  const double base = metrics::exact_accuracy(pairs);
  for (int i = 0; i < 20; ++i) {
    for (std::size_t k = pairs.size(); k > 1; --k) std::swap(pairs[k - 1], pairs[random::uniform_index(rng, k)]);
    REQUIRE(metrics::exact_accuracy(pairs) == base);
  }
}

TEST_CASE("evaluate examples") {
  // عَلَّمَ -> 1011; five-beat targets, one off by one beat.
  const EvalReport perfect = evaluate_prediction_lines(
      {record("1011", "عَلَّمَ"), record("11010", "لَهُ مَا")}, tables());
  CHECK(perfect.n == 2);
  CHECK(perfect.exact_accuracy == 100.0);
  CHECK(perfect.mean_levenshtein_similarity == 100.0);

  const EvalReport half = evaluate_prediction_lines(
      {record("11010", "لَهُ مَا"), record("11011", "لَهُ مَا")}, tables());
  CHECK(half.exact_accuracy == 50.0);
  CHECK(half.mean_levenshtein_similarity == doctest::Approx(90.0));

  std::vector<corpus::Rejection> bad;
  const EvalReport failing = evaluate_prediction_lines(
      {record("11010", "لَهُ مَا"), record("101", "كتب"), "{oops", record("", "مَا"), ""},
      tables(), 1, &bad);
  CHECK(failing.n == 2);
  CHECK(failing.scan_failure_count == 1);
  CHECK(failing.malformed_count == 2);
  CHECK(failing.exact_accuracy == 50.0);
  CHECK(failing.mean_levenshtein_similarity == 50.0);
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].line == 3);
  CHECK(bad[1].line == 4);

  CHECK_THROWS_AS(evaluate_prediction_lines({"{oops"}, tables()), Error);
}

TEST_CASE("score reports the failure code") {
  PredictionRecord r = PredictionRecord::from_json(record("101", "كتب"));
  const ScoredPrediction s = score_prediction(r, tables());
  CHECK_FALSE(s.generated.has_value());
  CHECK(s.failure == "UnderDiacritized");
  CHECK(s.similarity == 0.0);
}

TEST_CASE("context changes the scan") {
  // مَا before the article loses its length.
  PredictionRecord r;
  r.generated_text = "مَا";
  r.target_beats = bp("1");
  CHECK_FALSE(score_prediction(r, tables()).exact);
  r.has_context = true;
  r.right_context = "ٱلْبَيْتِ";
  CHECK(score_prediction(r, tables()).exact);
}

TEST_CASE("perfect predictions from generated examples") {
  test::SyntheticText gen(84);
  std::vector<ScriptLine> lines;
  for (int i = 0; i < 300; ++i) lines.push_back(gen.line(4 + gen.pick(10), gen.chance(0.5)));
  MaskConfig cfg;
  cfg.seed = 9;
  const auto data = masking::generate_dataset(lines, cfg, tables());
  std::vector<std::string> records;
  for (const auto& ex : data.examples) {
    auto j = nlohmann::json::parse(ex.to_json());
    j["generated_text"] = ex.target;
    records.push_back(j.dump());
  }
  const EvalReport rep = evaluate_prediction_lines(records, tables(), 4);
  CHECK(rep.n == data.examples.size());
  CHECK(rep.exact_accuracy == 100.0);
  CHECK(rep.mean_levenshtein_similarity == 100.0);
  CHECK(rep.scan_failure_count == 0);
  CHECK(evaluate_prediction_lines(records, tables(), 1).report().str() == rep.report().str());
}

TEST_CASE("report format and coherence pass-through") {
  const EvalReport rep = evaluate_prediction_lines(
      {R"({"beats":"10","generated_text":"مَا","coherence":2.5})",
       R"({"beats":"11","generated_text":"مَا","coherence":1.5})"},
      tables());
  const auto kv = KeyValueReport::parse(rep.report().str());
  CHECK(kv.at("kind") == "eval_report");
  CHECK(kv.at("n") == "2");
  CHECK(kv.at("exact_accuracy") == "50.00");
  CHECK(kv.at("mean_levenshtein_similarity") == "75.00");
  CHECK(kv.at("coherence_count") == "2");
  CHECK(kv.at("mean_coherence") == "2.0000");
}

}  // TEST_SUITE
