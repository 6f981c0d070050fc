#include "tracewise/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracewise/corpus.hpp"
#include "tracewise/diagnosis.hpp"
#include "tracewise/distractors.hpp"
#include "tracewise/parser.hpp"
#include "tracewise/variant.hpp"

namespace tracewise {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load_program(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw InputError(path + ":" + to_string(e.loc()) + ": " + e.detail());
  }
}

Limits parse_limits(const std::string& text) {
  Limits l;
  if (text.empty()) return l;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--limits expects events=N,outputs=M");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc() || ptr != val.data() + val.size() || n == 0)
      throw UsageError("--limits: bad value '" + val + "'");
    if (key == "events") {
      l.max_events = n;
    } else if (key == "outputs") {
      l.max_outputs = n;
    } else {
      throw UsageError("--limits: unknown key '" + key + "'");
    }
  }
  return l;
}

struct Options {
  std::string registry_path;
  std::string limits;
  bool json = false;
  std::string file;
  std::string trace_path;
  std::string profile;
  std::string answer_path;
  std::string answer_text;
  bool answer_text_set = false;
  int max_k = 2;
  std::string match = "exact";
  std::string tax_arg;
};

class Commands {
 public:
  Commands(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int run() {
    Program p = load_program(o_.file);
    return emit(run_reference(p, limits()));
  }

  int simulate() {
    Program p = load_program(o_.file);
    SemanticProfile prof = compile_profile(registry(), o_.profile);
    return emit(run_variant(p, prof, limits()));
  }

  int diagnose() {
    Program p = load_program(o_.file);
    if (o_.answer_path.empty() == !o_.answer_text_set)
      throw UsageError("diagnose needs exactly one of --answer or --answer-text");
    std::string raw = o_.answer_text_set ? o_.answer_text : read_file(o_.answer_path);
    auto mode = parse_match_mode(o_.match);
    if (!mode) throw UsageError("--match must be exact, prefix or normalized");
    Observation obs{tokenize_answer(raw), *mode};
    DiagnosisReport rep = tracewise::diagnose(registry(), p, obs, config());
    out_ << (o_.json ? report_json(rep) : report_text(rep));
    return rep.verdict == Verdict::kUnexplained ? kExitNegative : kExitOk;
  }

  int distractors() {
    Program p = load_program(o_.file);
    auto ds = gen_distractors(p, registry(), check_k(), limits());
    out_ << (o_.json ? distractors_json(ds) : distractors_text(ds));
    return kExitOk;
  }

  int taxonomy_list() {
    const Registry& reg = registry();
    std::vector<const CatalogEntry*> entries;
    if (o_.tax_arg.empty()) {
      for (const auto& e : reg.entries) entries.push_back(&e);
    } else {
      entries = children(reg, code(o_.tax_arg));
    }
    if (o_.json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto* e : entries) j.push_back(nlohmann::ordered_json::parse(entry_json(*e)));
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto* e : entries) {
        out_ << e->code.str() << "  " << to_string(e->status) << "  " << e->title << "\n";
      }
    }
    return kExitOk;
  }

  int taxonomy_show() {
    const CatalogEntry* e = registry().find(code(o_.tax_arg));
    if (!e) throw UsageError("unknown code: " + o_.tax_arg);
    if (o_.json) {
      out_ << entry_json(*e);
      return kExitOk;
    }
    out_ << e->code.str() << "  " << e->title << "\n";
    out_ << "  quote: \"" << e->quote << "\"\n";
    out_ << "  status: " << to_string(e->status) << "\n";
    if (!e->slots.empty()) {
      out_ << "  slot: " << e->slot_text() << "\n";
      out_ << "  kind: " << to_string(e->kind) << "\n";
    }
    for (const auto& [name, p] : e->params) {
      out_ << "  param " << name << ": default " << p.def << ", range " << p.min << ".." << p.max << "\n";
    }
    if (!e->applicability.empty()) {
      out_ << "  applies to:";
      for (const auto& a : e->applicability) out_ << " " << a;
      out_ << "\n";
    }
    if (!e->rationale.empty()) out_ << "  rationale: " << e->rationale << "\n";
    return kExitOk;
  }

  int batch() {
    Corpus c;
    try {
      c = load_corpus(o_.file);
    } catch (const CorpusError& e) {
      throw InputError(e.what());
    }
    AggregateStats s = batch_diagnose(registry(), c, config());
    out_ << (o_.json ? stats_json(s) : stats_text(s));
    for (const auto& m : s.skipped) err_ << "skipped " << m << "\n";
    return kExitOk;
  }

 private:
  const Registry& registry() {
    if (o_.registry_path.empty()) return bundled_registry();
    if (!custom_) {
      try {
        custom_ = load_registry(read_file(o_.registry_path));
      } catch (const RegistryError& e) {
        throw InputError(o_.registry_path + ": " + e.what());
      }
    }
    return *custom_;
  }

  Limits limits() const { return parse_limits(o_.limits); }

  int check_k() const {
    if (o_.max_k < 0 || o_.max_k > 3) throw UsageError("--max-k must be between 0 and 3");
    return o_.max_k;
  }

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.max_k = check_k();
    cfg.limits = limits();
    return cfg;
  }

  static MisconceptionCode code(const std::string& text) {
    auto c = MisconceptionCode::try_parse(text);
    if (!c) throw UsageError("malformed code: " + text);
    return *c;
  }

  int emit(const ExecResult& r) {
    if (o_.json) {
      nlohmann::ordered_json j;
      j["transcript"] = r.transcript;
      j["status"] = status_text(r);
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& line : r.transcript) out_ << line << "\n";
    }
    if (!o_.trace_path.empty()) {
      std::ofstream t(o_.trace_path, std::ios::binary);
      if (!t) throw UsageError("cannot write " + o_.trace_path);
      t << trace_jsonl(r.trace);
    }
    if (r.status != ExecStatus::kCompleted) {
      err_ << "status: " << status_text(r);
      if (!r.message.empty()) err_ << " (" << r.message << ")";
      err_ << "\n";
    }
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Registry> custom_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Simulate and diagnose novice misreadings of selection and iteration", "tracewise"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--registry", o.registry_path, "Catalog file to use instead of the bundled one");
  app.add_option("--limits", o.limits, "Caps as events=N,outputs=M");

  auto* run = app.add_subcommand("run", "Run a program with correct semantics");
  run->add_option("file", o.file, "Program source")->required();
  run->add_option("--trace", o.trace_path, "Write the event trace as JSON lines");
  run->add_flag("--json", o.json, "JSON output");

  auto* sim = app.add_subcommand("simulate", "Run a program under a misconception profile");
  sim->add_option("file", o.file, "Program source")->required();
  sim->add_option("--profile", o.profile, "Profile literal, e.g. ITER.3.b.ii.A,ITER.5.a.i(k=2)")->required();
  sim->add_option("--trace", o.trace_path, "Write the event trace as JSON lines");
  sim->add_flag("--json", o.json, "JSON output");

  auto* diag = app.add_subcommand("diagnose", "Explain an answer by misconception profiles");
  diag->add_option("file", o.file, "Program source")->required();
  auto* ans = diag->add_option("--answer", o.answer_path, "File with the answer, one output per line");
  auto* ans_text = diag->add_option("--answer-text", o.answer_text, "Answer text, one output per line");
  ans->excludes(ans_text);
  diag->add_option("--max-k", o.max_k, "Largest profile size searched (0-3)");
  diag->add_option("--match", o.match, "exact, prefix or normalized");
  diag->add_flag("--json", o.json, "JSON output");

  auto* dis = app.add_subcommand("distractors", "Generate wrong answers for a tracing task");
  dis->add_option("file", o.file, "Program source")->required();
  dis->add_option("--max-k", o.max_k, "Largest profile size used (0-3)");
  dis->add_flag("--json", o.json, "JSON output");

  auto* tax = app.add_subcommand("taxonomy", "Inspect the misconception catalog");
  tax->require_subcommand(1);
  tax->fallthrough();
  auto* list = tax->add_subcommand("list", "List entries, optionally below a prefix");
  list->add_option("prefix", o.tax_arg, "Code prefix such as ITER.7");
  list->add_flag("--json", o.json, "JSON output");
  auto* show = tax->add_subcommand("show", "Show one entry");
  show->add_option("code", o.tax_arg, "Entry code")->required();
  show->add_flag("--json", o.json, "JSON output");
  tax->add_flag("--json", o.json, "JSON output");

  auto* bat = app.add_subcommand("batch", "Diagnose every response in a corpus file");
  bat->add_option("file", o.file, "Corpus JSON")->required();
  bat->add_option("--max-k", o.max_k, "Largest profile size searched (0-3)");
  bat->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  o.answer_text_set = ans_text->count() > 0;

  Commands cmd(o, out, err);
  try {
    if (*run) return cmd.run();
    if (*sim) return cmd.simulate();
    if (*diag) return cmd.diagnose();
    if (*dis) return cmd.distractors();
    if (*list) return cmd.taxonomy_list();
    if (*show) return cmd.taxonomy_show();
    if (*bat) return cmd.batch();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProfileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace tracewise
