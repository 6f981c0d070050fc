#include "tracewise/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tracewise/machine.hpp"
#include "tracewise/parser.hpp"

namespace tracewise {

using nlohmann::ordered_json;

namespace {

std::string require_string(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw CorpusError(where + ": missing string field \"" + key + "\"");
  return it->get<std::string>();
}

std::vector<std::string> string_array(const ordered_json& v, const std::string& where) {
  if (!v.is_array()) throw CorpusError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw CorpusError(where + ": expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::optional<std::vector<std::string>> reference_of(const std::string& source) {
  try {
    return run_reference(parse(source)).transcript;
  } catch (const SyntaxError&) {
    return std::nullopt;
  }
}

}  // namespace

Corpus parse_corpus(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError(std::string("malformed corpus: ") + e.what());
  }
  if (!doc.is_object()) throw CorpusError("malformed corpus: top level must be an object");
  Corpus c;
  c.version = require_string(doc, "version", "corpus");
  auto tasks = doc.find("tasks");
  if (tasks == doc.end() || !tasks->is_array()) throw CorpusError("corpus: missing array field \"tasks\"");
  for (std::size_t i = 0; i < tasks->size(); ++i) {
    const auto& t = (*tasks)[i];
    std::string where = "task " + std::to_string(i);
    if (!t.is_object()) throw CorpusError(where + ": expected an object");
    TaskRecord r;
    r.id = require_string(t, "id", where);
    where = "task " + r.id;
    r.source = require_string(t, "source", where);
    if (auto ref = t.find("referenceTranscript"); ref != t.end())
      r.reference_transcript = string_array(*ref, where + " referenceTranscript");
    if (auto rs = t.find("responses"); rs != t.end()) {
      if (!rs->is_array()) throw CorpusError(where + ": \"responses\" must be an array");
      for (const auto& x : *rs) {
        if (!x.is_object()) throw CorpusError(where + ": response must be an object");
        Response resp;
        resp.answer = require_string(x, "answer", where + " response");
        if (auto sid = x.find("studentId"); sid != x.end()) {
          if (!sid->is_string()) throw CorpusError(where + ": studentId must be a string");
          resp.student_id = sid->get<std::string>();
        }
        r.responses.push_back(std::move(resp));
      }
    }
    if (r.reference_transcript) {
      auto actual = reference_of(r.source);
      if (actual && *actual != *r.reference_transcript)
        throw CorpusError(where + ": cached referenceTranscript does not match the source");
    }
    c.tasks.push_back(std::move(r));
  }
  return c;
}

std::string print_corpus(const Corpus& corpus) {
  ordered_json doc;
  doc["version"] = corpus.version;
  doc["tasks"] = ordered_json::array();
  for (const auto& t : corpus.tasks) {
    ordered_json j;
    j["id"] = t.id;
    j["source"] = t.source;
    if (t.reference_transcript) j["referenceTranscript"] = *t.reference_transcript;
    j["responses"] = ordered_json::array();
    for (const auto& r : t.responses) {
      ordered_json x;
      if (r.student_id) x["studentId"] = *r.student_id;
      x["answer"] = r.answer;
      j["responses"].push_back(std::move(x));
    }
    doc["tasks"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write " + path.string());
  out << print_corpus(corpus);
}

void refresh_references(Corpus& corpus) {
  for (auto& t : corpus.tasks) {
    if (!t.reference_transcript) t.reference_transcript = reference_of(t.source);
  }
}

AggregateStats batch_diagnose(const Registry& registry, const Corpus& corpus, const SearchConfig& cfg,
                              MatchMode mode) {
  AggregateStats s;
  for (const auto& t : corpus.tasks) {
    Program p;
    try {
      p = parse(t.source);
    } catch (const SyntaxError& e) {
      s.skipped.push_back("task " + t.id + ": " + e.what());
      continue;
    }
    ++s.tasks;
    for (const auto& r : t.responses) {
      ++s.responses;
      Observation obs{tokenize_answer(r.answer), mode};
      DiagnosisReport rep = diagnose(registry, p, obs, cfg);
      switch (rep.verdict) {
        case Verdict::kCorrect: ++s.correct; break;
        case Verdict::kUnexplained: ++s.unexplained; break;
        case Verdict::kExplained: {
          ++s.explained;
          if (rep.explanations.size() > 1) ++s.ambiguous;
          const double per = 1.0 / static_cast<double>(rep.explanations.size());
          for (const auto& e : rep.explanations) {
            for (const auto& code : e.profile.codes()) s.weights[code] += per / static_cast<double>(e.profile.size());
          }
          break;
        }
      }
    }
  }
  return s;
}

std::string stats_json(const AggregateStats& stats) {
  ordered_json j;
  ordered_json w = ordered_json::object();
  for (const auto& [code, v] : stats.weights) w[code] = v;
  j["weights"] = w;
  j["totals"] = {{"tasks", stats.tasks},         {"responses", stats.responses},
                 {"correct", stats.correct},     {"explained", stats.explained},
                 {"unexplained", stats.unexplained}, {"ambiguous", stats.ambiguous}};
  j["skipped"] = stats.skipped;
  return j.dump(2) + "\n";
}

std::string stats_text(const AggregateStats& stats) {
  std::ostringstream out;
  out << "tasks: " << stats.tasks << "\nresponses: " << stats.responses << "\ncorrect: " << stats.correct
      << "\nexplained: " << stats.explained << "\nunexplained: " << stats.unexplained
      << "\nambiguous: " << stats.ambiguous << "\n";
  for (const auto& [code, v] : stats.weights) out << "  " << code << " " << v << "\n";
  for (const auto& m : stats.skipped) out << "skipped " << m << "\n";
  return out.str();
}

}  // namespace tracewise
