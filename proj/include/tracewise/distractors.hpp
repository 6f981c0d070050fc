#pragma once

#include <string>
#include <vector>

#include "tracewise/registry.hpp"
#include "tracewise/trace.hpp"

namespace tracewise {

struct Distractor {
  std::vector<std::string> transcript;
  std::string status;                           // of the first generating run
  std::vector<std::string> generating_profiles;  // profile literals, search order
  std::size_t plausibility_rank = 0;            // size of the smallest generating profile
};

/// Wrong answers produced by applicable profiles of at most `max_k` variants.
/// The reference transcript is never included; runtime errors and empty
/// outputs are only kept when nothing else remains.
std::vector<Distractor> gen_distractors(const Program& program, const Registry& registry, int max_k,
                                        const Limits& limits = {});

std::string distractors_json(const std::vector<Distractor>& ds);
std::string distractors_text(const std::vector<Distractor>& ds);

}  // namespace tracewise
