#include "tracewise/diagnosis.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tracewise/features.hpp"
#include "tracewise/rewrite.hpp"
#include "tracewise/variant.hpp"

namespace tracewise {

std::string_view to_string(MatchMode m) {
  switch (m) {
    case MatchMode::kExact: return "exact";
    case MatchMode::kPrefix: return "prefix";
    case MatchMode::kNormalized: return "normalized";
  }
  return "exact";
}

std::optional<MatchMode> parse_match_mode(std::string_view text) {
  if (text == "exact") return MatchMode::kExact;
  if (text == "prefix") return MatchMode::kPrefix;
  if (text == "normalized") return MatchMode::kNormalized;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCorrect: return "correct";
    case Verdict::kExplained: return "explained";
    case Verdict::kUnexplained: return "unexplained";
  }
  return "unexplained";
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse(std::string_view s) {
  std::string out;
  bool gap = false;
  for (char c : s) {
    if (is_space(c)) {
      gap = !out.empty();
      continue;
    }
    if (gap) out += ' ';
    gap = false;
    out += c;
  }
  return out;
}

bool same_token(MatchMode mode, const std::string& a, const std::string& b) {
  return mode == MatchMode::kNormalized ? collapse(a) == collapse(b) : a == b;
}

struct ObserverState {
  const Observation* obs;
};

// Rejects an output as soon as it cannot be part of a matching transcript.
bool observe(void* ctx, std::size_t index, const std::string& text) {
  const Observation& obs = *static_cast<ObserverState*>(ctx)->obs;
  if (index >= obs.transcript.size()) return obs.mode == MatchMode::kPrefix;
  return same_token(obs.mode, obs.transcript[index], text);
}

}  // namespace

std::vector<std::string> tokenize_answer(std::string_view raw) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t nl = raw.find('\n', start);
    std::string line = trim(raw.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    if (!line.empty()) out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

bool match_transcript(const Observation& expected, const ExecResult& actual) {
  if (actual.status == ExecStatus::kRuntimeError || actual.abandoned) return false;
  const auto& want = expected.transcript;
  const auto& got = actual.transcript;
  auto equal_prefix = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!same_token(expected.mode, want[i], got[i])) return false;
    }
    return true;
  };
  if (want.size() == got.size() && equal_prefix(want.size())) return true;
  if (expected.mode == MatchMode::kPrefix && actual.capped() && want.size() <= got.size())
    return equal_prefix(want.size());
  return false;
}

std::vector<MisconceptionCode> candidate_codes(const Registry& registry, const Program& program) {
  FeatureSet base = features(program);
  FeatureSet all = base;
  for (const auto& e : registry.entries) {
    if (!e.simulatable() || e.kind != VariantKind::kStructuralRewrite || !applicable(e, base)) continue;
    for (const auto& atom : expand_atoms(registry, {e.code})) {
      FeatureSet f = features(apply_rewrite(program, atom.code, atom.params));
      all.insert(f.begin(), f.end());
    }
  }
  return applicable_variants(registry, all);
}

std::vector<Atom> expand_atoms(const Registry& registry, const std::vector<MisconceptionCode>& codes) {
  std::vector<Atom> out;
  for (const auto& code : codes) {
    const CatalogEntry& e = lookup(registry, code);
    std::vector<ParamMap> grid{ParamMap{}};
    for (const auto& [name, spec] : e.params) {
      std::vector<ParamMap> next;
      for (const auto& partial : grid) {
        // default first so the default binding is the first atom of its code
        std::vector<std::int64_t> values{spec.def};
        for (std::int64_t v = spec.min; v <= spec.max; ++v) {
          if (v != spec.def) values.push_back(v);
        }
        for (std::int64_t v : values) {
          ParamMap m = partial;
          m[name] = v;
          next.push_back(std::move(m));
        }
      }
      grid = std::move(next);
    }
    for (auto& params : grid) out.push_back(Atom{code, std::move(params), e.slots});
  }
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_combinations(const std::vector<Atom>& atoms, int max_k) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::vector<std::size_t>> frontier{{}};
  auto compatible = [&](const std::vector<std::size_t>& combo, std::size_t j) {
    for (std::size_t i : combo) {
      if (atoms[i].code == atoms[j].code) return false;
      for (const auto& s : atoms[i].slots) {
        if (std::find(atoms[j].slots.begin(), atoms[j].slots.end(), s) != atoms[j].slots.end()) return false;
      }
    }
    return true;
  };
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& combo : frontier) {
      std::size_t from = combo.empty() ? 0 : combo.back() + 1;
      for (std::size_t j = from; j < atoms.size(); ++j) {
        if (!compatible(combo, j)) continue;
        auto c = combo;
        c.push_back(j);
        next.push_back(std::move(c));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

SemanticProfile profile_of(const Registry& registry, const std::vector<Atom>& atoms,
                           const std::vector<std::size_t>& combination) {
  std::vector<ProfileRequest> req;
  for (std::size_t i : combination) req.push_back({atoms[i].code.str(), atoms[i].params});
  return compile_profile(registry, req);
}

namespace {

bool rank_less(const Explanation& a, const Explanation& b) {
  if (a.profile.size() != b.profile.size()) return a.profile.size() < b.profile.size();
  std::size_t na = a.profile.non_default_params();
  std::size_t nb = b.profile.non_default_params();
  if (na != nb) return na < nb;
  for (std::size_t i = 0; i < a.profile.active.size(); ++i) {
    const auto& x = a.profile.active[i];
    const auto& y = b.profile.active[i];
    if (x.code != y.code) return x.code < y.code;
  }
  for (std::size_t i = 0; i < a.profile.active.size(); ++i) {
    const auto& x = a.profile.active[i];
    const auto& y = b.profile.active[i];
    if (x.params != y.params) return x.params < y.params;
  }
  return false;
}

// True if some proper subset of `combo` that contains at least `min_size`
// atoms is marked as matching.
bool subset_matches(const std::vector<std::size_t>& combo, std::size_t min_size,
                    const std::map<std::vector<std::size_t>, bool>& matched) {
  const std::size_t n = combo.size();
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(combo[i]);
    }
    if (sub.size() < min_size) continue;
    auto it = matched.find(sub);
    if (it != matched.end() && it->second) return true;
  }
  return false;
}

}  // namespace

DiagnosisReport diagnose(const Registry& registry, const Program& program, const Observation& obs,
                         const SearchConfig& cfg) {
  const int k = std::clamp(cfg.max_k, 0, 3);
  std::vector<Atom> atoms = expand_atoms(registry, candidate_codes(registry, program));
  std::vector<std::vector<std::size_t>> combos = enumerate_combinations(atoms, k);
  std::vector<SemanticProfile> profiles;
  profiles.reserve(combos.size());
  for (const auto& c : combos) profiles.push_back(profile_of(registry, atoms, c));

  std::vector<char> hit(combos.size(), 0);
  std::vector<std::string> status(combos.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ObserverState st{&obs};
    RunOptions opts;
    opts.record_trace = false;
    opts.observer = observe;
    opts.observer_ctx = &st;
    for (std::size_t i = next++; i < combos.size(); i = next++) {
      ExecResult r = run_variant(program, profiles[i], cfg.limits, opts);
      hit[i] = match_transcript(obs, r) ? 1 : 0;
      status[i] = status_text(r);
    }
  };
  unsigned n_threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, combos.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<std::size_t>, bool> matched;
  for (std::size_t i = 0; i < combos.size(); ++i) matched[combos[i]] = hit[i] != 0;

  DiagnosisReport rep;
  rep.searched = combos.size();
  const bool correct = hit[0] != 0;
  for (std::size_t i = 1; i < combos.size(); ++i) {
    if (!hit[i]) continue;
    // Masked candidates ignore the empty profile when testing minimality.
    if (subset_matches(combos[i], correct ? 1 : 0, matched)) continue;
    Explanation e{profiles[i], obs.mode, status[i]};
    (correct ? rep.masked : rep.explanations).push_back(std::move(e));
  }
  std::stable_sort(rep.explanations.begin(), rep.explanations.end(), rank_less);
  std::stable_sort(rep.masked.begin(), rep.masked.end(), rank_less);
  rep.ambiguity = rep.explanations.size();
  rep.verdict = correct ? Verdict::kCorrect : rep.explanations.empty() ? Verdict::kUnexplained : Verdict::kExplained;
  return rep;
}

namespace {

nlohmann::ordered_json explanation_json(const Explanation& e) {
  nlohmann::ordered_json j;
  j["codes"] = e.profile.codes();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& a : e.profile.active) {
    if (a.params.empty()) continue;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [name, v] : a.params) p[name] = v;
    params[a.code.str()] = p;
  }
  j["params"] = params;
  j["matchMode"] = std::string(to_string(e.mode));
  j["status"] = e.status;
  return j;
}

}  // namespace

std::string report_json(const DiagnosisReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = std::string(to_string(report.verdict));
  j["explanations"] = nlohmann::ordered_json::array();
  for (const auto& e : report.explanations) j["explanations"].push_back(explanation_json(e));
  j["maskedCandidates"] = nlohmann::ordered_json::array();
  for (const auto& e : report.masked) j["maskedCandidates"].push_back(explanation_json(e));
  j["ambiguity"] = report.ambiguity;
  j["searched"] = report.searched;
  return j.dump(2) + "\n";
}

std::string report_text(const DiagnosisReport& report) {
  std::ostringstream out;
  out << "verdict: " << to_string(report.verdict) << "\n";
  for (const auto& e : report.explanations) out << "  explanation: " << e.profile.literal() << " [" << e.status << "]\n";
  for (const auto& e : report.masked) out << "  masked: " << e.profile.literal() << " [" << e.status << "]\n";
  out << "ambiguity: " << report.ambiguity << "\n";
  out << "searched: " << report.searched << "\n";
  return out.str();
}

}  // namespace tracewise
