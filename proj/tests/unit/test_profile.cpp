#include <doctest.h>

#include "tracewise/profile.hpp"
#include "tracewise/registry.hpp"

using namespace tracewise;

TEST_CASE("literal parsing") {
  auto r = parse_profile_literal("ITER.3.b.ii.A, ITER.5.a.i(k=2)");
  REQUIRE(r.size() == 2);
  CHECK(r[0].code == "ITER.3.b.ii.A");
  CHECK(r[1].params == ParamMap{{"k", 2}});
  CHECK(parse_profile_literal("").empty());
  CHECK_THROWS_AS(parse_profile_literal("ITER.5.a.i(k=)"), ProfileError);
  CHECK_THROWS_AS(parse_profile_literal("ITER.5.a.i(k=2"), ProfileError);
}

TEST_CASE("compilation") {
  const Registry& reg = bundled_registry();
  auto p = compile_profile(reg, "ITER.3.b.ii.A,ITER.3.a.ii");
  CHECK(p.size() == 2);
  CHECK(p.codes() == std::vector<std::string>{"ITER.3.a.ii", "ITER.3.b.ii.A"});
  CHECK(compile_profile(reg, "").empty());

  auto k = compile_profile(reg, "ITER.5.a.i");
  CHECK(k.active[0].params.at("k") == 1);
  CHECK(k.non_default_params() == 0);
  CHECK(k.literal() == "ITER.5.a.i");
  auto k2 = compile_profile(reg, "ITER.5.a.i(k=2)");
  CHECK(k2.non_default_params() == 1);
  CHECK(k2.literal() == "ITER.5.a.i(k=2)");

  auto s = compile_profile(reg, "SEL.2.a,ITER.6.c");
  CHECK(s.rewrites.size() == 2);
}

TEST_CASE("compilation errors") {
  const Registry& reg = bundled_registry();
  CHECK_THROWS_WITH_AS(compile_profile(reg, "ITER.3.a.ii,ITER.3.b.iii"), doctest::Contains("slot conflict"),
                       ProfileError);
  CHECK_THROWS_WITH_AS(compile_profile(reg, "ITER.3.a.ii,ITER.3.b.iii"), doctest::Contains("ITER.3.b.iii"),
                       ProfileError);
  CHECK_THROWS_WITH_AS(compile_profile(reg, "ITER.1.c"), doctest::Contains("descriptive"), ProfileError);
  CHECK_THROWS_AS(compile_profile(reg, "SEL.9.z"), ProfileError);
  CHECK_THROWS_AS(compile_profile(reg, "ITER.7.a.i,ITER.7.a.i"), ProfileError);
  CHECK_THROWS_AS(compile_profile(reg, "ITER.5.a.i(k=9)"), ProfileError);
  CHECK_THROWS_AS(compile_profile(reg, "ITER.5.a.i(q=1)"), ProfileError);
  CHECK_THROWS_AS(compile_profile(reg, "not a code"), ProfileError);
  // ITER.1.b claims two slots, so it conflicts with either.
  CHECK_THROWS_AS(compile_profile(reg, "ITER.1.b,ITER.3.b.ii.A"), ProfileError);
}
