#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracewise/profile.hpp"
#include "tracewise/trace.hpp"

namespace tracewise {

enum class MatchMode { kExact, kPrefix, kNormalized };
std::string_view to_string(MatchMode m);
std::optional<MatchMode> parse_match_mode(std::string_view text);

/// Splits raw answer text on newlines and trims each line. Blank lines are
/// dropped.
std::vector<std::string> tokenize_answer(std::string_view raw);

struct Observation {
  std::vector<std::string> transcript;
  MatchMode mode = MatchMode::kExact;
};

/// exact: same tokens and no runtime error. prefix: exact, or a capped run
/// whose transcript starts with the observation. normalized: exact after
/// collapsing whitespace runs inside each token.
bool match_transcript(const Observation& expected, const ExecResult& actual);

struct SearchConfig {
  int max_k = 2;  // 0..3
  Limits limits;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One variant with a concrete parameter binding; the unit the search
/// combines into profiles.
struct Atom {
  MisconceptionCode code;
  ParamMap params;
  std::vector<std::string> slots;
};

/// Variants worth trying on `program`: applicable to the features of the
/// program or of any single structural rewrite of it.
std::vector<MisconceptionCode> candidate_codes(const Registry& registry, const Program& program);

/// Every parameter binding of every code, in code order.
std::vector<Atom> expand_atoms(const Registry& registry, const std::vector<MisconceptionCode>& codes);

/// Conflict-free combinations of atoms by increasing size, each as sorted
/// atom indices. Includes the empty combination first.
std::vector<std::vector<std::size_t>> enumerate_combinations(const std::vector<Atom>& atoms, int max_k);

SemanticProfile profile_of(const Registry& registry, const std::vector<Atom>& atoms,
                           const std::vector<std::size_t>& combination);

struct Explanation {
  SemanticProfile profile;
  MatchMode mode = MatchMode::kExact;
  std::string status;
};

enum class Verdict { kCorrect, kExplained, kUnexplained };
std::string_view to_string(Verdict v);

struct DiagnosisReport {
  Verdict verdict = Verdict::kUnexplained;
  /// Inclusion-minimal matching profiles, ranked by size, then number of
  /// non-default parameters, then codes.
  std::vector<Explanation> explanations;
  /// With a correct verdict: nonempty profiles that also reproduce the
  /// answer, minimal among the nonempty ones.
  std::vector<Explanation> masked;
  std::size_t ambiguity = 0;
  std::size_t searched = 0;
};

DiagnosisReport diagnose(const Registry& registry, const Program& program, const Observation& obs,
                         const SearchConfig& cfg = {});

std::string report_json(const DiagnosisReport& report);
std::string report_text(const DiagnosisReport& report);

}  // namespace tracewise
