#include <doctest.h>

#include <algorithm>

#include "tracewise/features.hpp"
#include "tracewise/parser.hpp"
#include "tracewise/registry.hpp"

using namespace tracewise;

namespace {
MisconceptionCode C(const char* s) { return MisconceptionCode::parse(s); }

const char* kMinimal = R"({"version":"t","categories":[
  {"code":"ITER","title":"Iteration","quote":"q"},{"code":"ITER.7","title":"Jumps","quote":"q"},
  {"code":"ITER.7.a","title":"Break","quote":"q"}],"entries":[
  {"code":"ITER.7.a.i","title":"break is continue","quote":"Break is continue","status":"executable",
   "slot":"jump.break","kind":"runtime-hook","applicability":["break"]}]})";
}  // namespace

TEST_CASE("minimal document loads") {
  Registry r = load_registry(kMinimal);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].status == EntryStatus::kExecutable);
  CHECK(r.entries[0].slot_text() == "jump.break");
}

TEST_CASE("duplicate codes are rejected") {
  std::string doc = R"({"version":"t","categories":[
    {"code":"SEL","title":"s","quote":"q"},{"code":"SEL.1","title":"s","quote":"q"}],"entries":[
    {"code":"SEL.1.c","title":"a","quote":"q","status":"executable","slot":"sel.branch_select","kind":"runtime-hook"},
    {"code":"SEL.1.c","title":"b","quote":"q","status":"executable","slot":"sel.branch_select","kind":"runtime-hook"}]})";
  CHECK_THROWS_WITH_AS(load_registry(doc), doctest::Contains("duplicate"), RegistryError);
  CHECK_THROWS_AS(load_registry("{not json"), RegistryError);
}

TEST_CASE("bundled catalog lookup") {
  const Registry& r = bundled_registry();
  CHECK(lookup(r, C("ITER.1.b")).title == "loop is if");
  CHECK(lookup(r, C("ITER.3.b.ii.A")).slot_text() == "loop.cycle_order");
  CHECK_THROWS(lookup(r, C("SEL.9.z")));
}

TEST_CASE("children by prefix") {
  const Registry& r = bundled_registry();
  CHECK(children(r, C("ITER.7")).size() == 4);
  CHECK(children(r, C("SEL")).size() == 27);
  CHECK(children(r, C("ITER.1.b")).empty());
}

TEST_CASE("validation") {
  CHECK(validate_registry(bundled_registry()).empty());
  CHECK(audit_catalog(bundled_registry()).empty());

  Registry r = load_registry(kMinimal);
  r.entries[0].status = EntryStatus::kParameterized;
  CHECK(validate_registry(r).size() == 1);

  r = load_registry(kMinimal);
  r.entries[0].slots = {"jump.nowhere"};
  CHECK(validate_registry(r).size() == 1);
}

TEST_CASE("catalog contents") {
  const Registry& r = bundled_registry();
  CHECK(r.entries.size() == 72);
  std::vector<std::string> descriptive;
  for (const auto& e : r.entries)
    if (!e.simulatable()) descriptive.push_back(e.code.str());
  CHECK(descriptive == std::vector<std::string>{"ITER.1.c", "ITER.4.a.iii.A", "ITER.4.a.iii.B", "ITER.5.b.ii",
                                                "SEL.3.a.i", "SEL.4.a.i"});
  CHECK(lookup(r, C("ITER.3.b.iii")).slots.size() == 2);
}

TEST_CASE("print then load round-trips") {
  const Registry& r = bundled_registry();
  Registry again = load_registry(print_registry(r));
  CHECK(print_registry(again) == print_registry(r));
}

TEST_CASE("applicability on the Birne fixture") {
  Program p = parse("for (i = 10; i > 0; i = i - 4) { print(\"Birne\", i); } print(\"Apfel\");");
  auto codes = applicable_variants(bundled_registry(), features(p));
  auto has = [&](const char* s) { return std::find(codes.begin(), codes.end(), C(s)) != codes.end(); };
  CHECK(has("ITER.3.b.ii.A"));
  CHECK(has("ITER.3.a.ii"));
  CHECK(has("ITER.2.b.i"));
  for (const auto& c : codes) {
    CHECK_FALSE(c.starts_with(C("ITER.7")));
    CHECK_FALSE(c.starts_with(C("ITER.6")));
  }
  CHECK(applicable_variants(bundled_registry(), features(parse(""))).empty());

  auto brk = applicable_variants(bundled_registry(), features(parse("x = 0; while (x < 3) { x++; break; }")));
  for (const char* s : {"ITER.7.a.i", "ITER.7.a.ii", "ITER.7.a.iii"})
    CHECK(std::find(brk.begin(), brk.end(), C(s)) != brk.end());
  auto both = applicable_variants(bundled_registry(),
                                  features(parse("x = 0; while (x < 3) { x++; if (x == 1) continue; break; }")));
  CHECK(std::count_if(both.begin(), both.end(), [](const auto& c) { return c.starts_with(C("ITER.7")); }) == 4);
}
