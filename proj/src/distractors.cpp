#include "tracewise/distractors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tracewise/diagnosis.hpp"
#include "tracewise/variant.hpp"

namespace tracewise {

std::vector<Distractor> gen_distractors(const Program& program, const Registry& registry, int max_k,
                                        const Limits& limits) {
  RunOptions quiet;
  quiet.record_trace = false;
  const std::vector<std::string> reference = run_reference(program, limits).transcript;

  std::vector<Atom> atoms = expand_atoms(registry, candidate_codes(registry, program));
  auto combos = enumerate_combinations(atoms, std::clamp(max_k, 0, 3));

  std::vector<Distractor> all;
  std::vector<bool> weak;  // runtime error or empty output
  std::map<std::vector<std::string>, std::size_t> index;
  for (std::size_t i = 1; i < combos.size(); ++i) {
    SemanticProfile p = profile_of(registry, atoms, combos[i]);
    ExecResult r = run_variant(program, p, limits, quiet);
    if (r.transcript == reference) continue;
    auto [it, fresh] = index.emplace(r.transcript, all.size());
    if (fresh) {
      Distractor d;
      d.transcript = r.transcript;
      d.status = status_text(r);
      d.plausibility_rank = p.size();
      all.push_back(std::move(d));
      weak.push_back(r.status == ExecStatus::kRuntimeError || r.transcript.empty());
    }
    Distractor& d = all[it->second];
    d.generating_profiles.push_back(p.literal());
    d.plausibility_rank = std::min(d.plausibility_rank, p.size());
  }

  std::vector<Distractor> out;
  bool any_strong = std::find(weak.begin(), weak.end(), false) != weak.end();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!any_strong || !weak[i]) out.push_back(std::move(all[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const Distractor& a, const Distractor& b) {
    if (a.plausibility_rank != b.plausibility_rank) return a.plausibility_rank < b.plausibility_rank;
    return a.transcript < b.transcript;
  });
  return out;
}

std::string distractors_json(const std::vector<Distractor>& ds) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& d : ds) {
    nlohmann::ordered_json e;
    e["transcript"] = d.transcript;
    e["status"] = d.status;
    e["plausibilityRank"] = d.plausibility_rank;
    e["generatingProfiles"] = d.generating_profiles;
    j.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string distractors_text(const std::vector<Distractor>& ds) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Distractor& d = ds[i];
    out << "#" << i + 1 << " (rank " << d.plausibility_rank << ", " << d.status << ")";
    out << " from " << d.generating_profiles.front();
    if (d.generating_profiles.size() > 1) out << " and " << d.generating_profiles.size() - 1 << " more";
    out << "\n";
    for (const auto& t : d.transcript) out << "  " << t << "\n";
  }
  return out.str();
}

}  // namespace tracewise
