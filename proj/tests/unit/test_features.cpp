#include <doctest.h>

#include <algorithm>

#include "tracewise/features.hpp"
#include "tracewise/parser.hpp"

using namespace tracewise;

TEST_CASE("Birne fixture features") {
  auto f = features(parse("for (i = 10; i > 0; i = i - 4) { print(\"Birne\", i); } print(\"Apfel\");"));
  for (const char* name : {"for", "loop", "statement-after-loop", "constant-trip-count-loop", "for-init", "for-update",
                           "relational-loop-condition"}) {
    CAPTURE(name);
    CHECK(f.count(name) == 1);
  }
  CHECK(f.count("break") == 0);
  CHECK(f.count("nested-loops") == 0);
  CHECK(f.count("pre-increment") == 0);
}

TEST_CASE("complementary ifs") {
  CHECK(features(parse("if (c) { x = 1; } if (!c) { x = 2; }")).count("complementary-consecutive-ifs") == 1);
  CHECK(features(parse("if (x < 3) { y = 1; } if (x >= 3) { y = 2; }")).count("complementary-consecutive-ifs") == 1);
  CHECK(features(parse("if (x < 3) { y = 1; } if (x > 3) { y = 2; }")).count("complementary-consecutive-ifs") == 0);
  CHECK(features(parse("if (c) { x = 1; } y = 0; if (!c) { x = 2; }")).count("complementary-consecutive-ifs") == 0);
}

TEST_CASE("empty program has no features") { CHECK(features(parse("")).empty()); }

TEST_CASE("feature names are known") {
  auto f = features(parse(
      "for (i = 0; i < 3; ++i) { for (j = 0; j < i; j++) { if (j == 1) { break; } else if (j == 2) continue; } }"
      " x = 0; while (x < 2) x++; do { x--; } while (x > 0); if (x) { if (x) x = 1; } if (x) x = 2;"));
  const auto& known = known_features();
  for (const auto& name : f) {
    CAPTURE(name);
    CHECK(std::binary_search(known.begin(), known.end(), name));
  }
  CHECK(f.count("immediately-nested-loops") == 1);
  CHECK(f.count("nested-if") == 1);
  CHECK(f.count("pre-increment") == 1);
}

TEST_CASE("control variable and trip count") {
  Program p = parse("for (i = 0; i < 3; i++) { print(i); } while (x > 0) { print(x); }");
  const Loop* a = as<Loop>(*p.statements[0]);
  const Loop* b = as<Loop>(*p.statements[1]);
  CHECK(control_variable(*a) == "i");
  CHECK(has_constant_trip_count(*a));
  CHECK_FALSE(has_constant_trip_count(*b));
}
