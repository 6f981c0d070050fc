#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tracewise/cli.hpp"

using namespace tracewise;

namespace {
struct Out {
  int code;
  std::string out;
  std::string err;
};

Out cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tracewise");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kBirne = std::string(TW_FIXTURES) + "/birne.ml";
}  // namespace

TEST_CASE("run and simulate") {
  auto r = cli({"run", kBirne});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Birne 10\nBirne 6\nBirne 2\nApfel\n");

  auto s = cli({"simulate", kBirne, "--profile", "ITER.3.b.ii.A"});
  CHECK(s.code == kExitOk);
  CHECK(s.out == "Birne 6\nBirne 2\nBirne -2\nApfel\n");

  auto j = cli({"simulate", kBirne, "--profile", "ITER.3.a.iii", "--json", "--limits", "events=200"});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out)["status"] == "step_cap");
  CHECK(j.err.find("step_cap") != std::string::npos);
}

TEST_CASE("diagnose") {
  auto d = cli({"diagnose", kBirne, "--answer-text", "Birne 10\nBirne 6\nBirne 2\nBirne -2\nApfel", "--max-k", "2",
                "--json"});
  CHECK(d.code == kExitOk);
  auto j = nlohmann::json::parse(d.out);
  CHECK(j["verdict"] == "explained");
  bool found = false;
  for (const auto& x : j["explanations"])
    if (x["codes"] == nlohmann::json{"ITER.3.a.ii", "ITER.3.b.ii.A"}) found = true;
  CHECK(found);

  CHECK(cli({"diagnose", kBirne, "--answer-text", "Banane"}).code == kExitNegative);
  CHECK(cli({"diagnose", kBirne}).code == kExitUsage);
}

TEST_CASE("taxonomy") {
  auto s = cli({"taxonomy", "show", "ITER.1.b"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("loop is if") != std::string::npos);
  auto l = cli({"taxonomy", "list", "ITER.7", "--json"});
  CHECK(nlohmann::json::parse(l.out).size() == 4);
  CHECK(cli({"taxonomy", "show", "SEL.9.z"}).code == kExitUsage);
}

TEST_CASE("error exits") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"simulate", kBirne, "--profile", "ITER.3.a.ii,ITER.3.b.iii"}).code == kExitUsage);
  CHECK(cli({"run", "/nonexistent/file.ml"}).code == kExitUsage);
  CHECK(cli({"run", kBirne, "--limits", "steps=3"}).code == kExitUsage);

  auto path = std::filesystem::temp_directory_path() / "tracewise_bad.ml";
  { std::ofstream(path) << "while ("; }
  auto bad = cli({"run", path.string()});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("1:") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("distractors and batch") {
  auto d = cli({"distractors", kBirne, "--max-k", "1", "--json"});
  CHECK(d.code == kExitOk);
  CHECK(nlohmann::json::parse(d.out).is_array());
  CHECK(d.out.find("Birne -2") != std::string::npos);
}
