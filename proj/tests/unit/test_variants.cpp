#include <doctest.h>
#include <json.hpp>

#include <set>

#include "fixtures.hpp"
#include "tracewise/parser.hpp"
#include "tracewise/registry.hpp"
#include "tracewise/variant.hpp"

using namespace tracewise;

TEST_CASE("per-variant fixtures match hand traces") {
  auto fixtures = nlohmann::json::parse(fixture_text("variants.json"));
  const Registry& reg = bundled_registry();
  std::set<std::string> covered;
  for (const auto& f : fixtures) {
    std::string lit = f["profile"];
    CAPTURE(lit);
    Program p = parse(f["program"].get<std::string>());
    auto expect = f["expect"].get<std::vector<std::string>>();
    ExecResult ref = run_reference(p);
    ExecResult got = run_variant(p, compile_profile(reg, lit));
    CHECK(got.transcript != ref.transcript);
    if (f.value("prefix", false)) {
      REQUIRE(got.transcript.size() >= expect.size());
      got.transcript.resize(expect.size());
    }
    CHECK(got.transcript == expect);
    CHECK(status_text(got) == f.value("status", std::string("completed")));
    for (const auto& a : compile_profile(reg, lit).active) covered.insert(a.code.str());
  }
  for (const auto& e : reg.entries) {
    if (!e.simulatable()) continue;
    CAPTURE(e.code.str());
    CHECK(covered.count(e.code.str()) == 1);
  }
}
