#include <doctest.h>
#include <json.hpp>

#include <filesystem>

#include "fixtures.hpp"
#include "tracewise/corpus.hpp"

using namespace tracewise;

namespace {
Corpus birne_corpus() {
  Corpus c;
  TaskRecord t;
  t.id = "birne";
  t.source = fixture_text("birne.ml");
  t.responses = {{"s1", "Birne 10\nBirne 6\nBirne 2\nApfel\n"},
                 {"s2", "Birne 6\nBirne 2\nBirne -2\nApfel\n"},
                 {std::nullopt, "Birne 10\nBirne 6\nBirne 2\nBirne -2\nApfel\n"}};
  c.tasks.push_back(t);
  return c;
}
}  // namespace

TEST_CASE("round trip") {
  Corpus c = birne_corpus();
  refresh_references(c);
  REQUIRE(c.tasks[0].reference_transcript);
  CHECK(c.tasks[0].reference_transcript->size() == 4);
  CHECK(parse_corpus(print_corpus(c)) == c);

  auto path = std::filesystem::temp_directory_path() / "tracewise_corpus_test.json";
  save_corpus(c, path);
  CHECK(load_corpus(path) == c);
  std::filesystem::remove(path);
}

TEST_CASE("malformed corpora") {
  CHECK_THROWS_AS(parse_corpus(R"({"version":"1","tasks":[{"id":"a","responses":[]}]})"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("[1,2"), CorpusError);
  auto stale = R"({"version":"1","tasks":[{"id":"a","source":"print(1);","referenceTranscript":["2"],"responses":[]}]})";
  CHECK_THROWS_AS(parse_corpus(stale), CorpusError);
}

TEST_CASE("aggregate statistics") {
  AggregateStats s = batch_diagnose(bundled_registry(), birne_corpus());
  CHECK(s.tasks == 1);
  CHECK(s.responses == 3);
  CHECK(s.correct == 1);
  CHECK(s.explained == 2);
  CHECK(s.unexplained == 0);
  REQUIRE(s.weights.count("ITER.3.b.ii.A"));
  // Both wrong answers credit ITER.3.b.ii.A; the weight of each response is
  // shared among its explanations, so the total lies strictly between 0 and 2.
  CHECK(s.weights.at("ITER.3.b.ii.A") > 0.0);
  CHECK(s.weights.at("ITER.3.b.ii.A") < 2.0);
  double total = 0;
  for (const auto& [code, w] : s.weights) total += w;
  CHECK(total == doctest::Approx(2.0));

  auto j = nlohmann::json::parse(stats_json(s));
  CHECK(j["totals"]["correct"] == 1);
}

TEST_CASE("empty corpus and skipped tasks") {
  AggregateStats e = batch_diagnose(bundled_registry(), Corpus{});
  CHECK(e.tasks == 0);
  CHECK(e.responses == 0);
  CHECK(e.weights.empty());

  Corpus c = birne_corpus();
  TaskRecord bad;
  bad.id = "broken";
  bad.source = "while (";
  bad.responses = {{std::nullopt, "1"}};
  c.tasks.push_back(bad);
  AggregateStats s = batch_diagnose(bundled_registry(), c);
  CHECK(s.skipped.size() == 1);
  CHECK(s.correct == 1);
  CHECK(s.explained == 2);
}
