#include <doctest.h>
#include <json.hpp>

#include <algorithm>

#include "fixtures.hpp"
#include "tracewise/distractors.hpp"
#include "tracewise/machine.hpp"
#include "tracewise/parser.hpp"

using namespace tracewise;

namespace {
using Lines = std::vector<std::string>;
bool contains(const std::vector<Distractor>& ds, const Lines& t) {
  return std::any_of(ds.begin(), ds.end(), [&](const Distractor& d) { return d.transcript == t; });
}
}  // namespace

TEST_CASE("Birne distractors") {
  const Registry& reg = bundled_registry();
  Program p = parse(fixture_text("birne.ml"));
  Lines w1{"Birne 6", "Birne 2", "Birne -2", "Apfel"};
  Lines w2{"Birne 10", "Birne 6", "Birne 2", "Birne -2", "Apfel"};

  auto k1 = gen_distractors(p, reg, 1);
  CHECK(contains(k1, w1));
  CHECK_FALSE(contains(k1, run_reference(p).transcript));

  auto k2 = gen_distractors(p, reg, 2);
  CHECK(contains(k2, w1));
  CHECK(contains(k2, w2));
  CHECK(k2.size() > k1.size());
  for (std::size_t i = 1; i < k2.size(); ++i) CHECK(k2[i - 1].plausibility_rank <= k2[i].plausibility_rank);
  for (const auto& d : k2) {
    CHECK_FALSE(d.generating_profiles.empty());
    CHECK(std::count_if(k2.begin(), k2.end(), [&](const Distractor& e) { return e.transcript == d.transcript; }) == 1);
  }
  auto it = std::find_if(k2.begin(), k2.end(), [&](const Distractor& d) { return d.transcript == w1; });
  CHECK(std::find(it->generating_profiles.begin(), it->generating_profiles.end(), "ITER.3.b.ii.A") !=
        it->generating_profiles.end());

  auto j = nlohmann::json::parse(distractors_json(k1));
  CHECK(j.is_array());
  CHECK(j.size() == k1.size());
}

TEST_CASE("straight-line programs have no distractors") {
  CHECK(gen_distractors(parse("print(1);"), bundled_registry(), 2).empty());
}
