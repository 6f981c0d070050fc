#pragma once

#include <cstddef>
#include <vector>

#include "tracewise/machine.hpp"
#include "tracewise/profile.hpp"

namespace tracewise {

/// Sets the hook fields for a runtime-hook variant. Returns false when the
/// code has no runtime implementation.
bool install_runtime_hook(const MisconceptionCode& code, const ParamMap& params, HookTable& hooks);

/// Structural rewrites first, then execution with the profile's hooks.
ExecResult run_variant(const Program& program, const SemanticProfile& profile, const Limits& limits = {},
                       const RunOptions& options = {});

/// Groups profile indices by identical transcript and status. Classes are
/// ordered by their first member.
std::vector<std::vector<std::size_t>> equivalence_classes(const Program& program,
                                                          const std::vector<SemanticProfile>& profiles,
                                                          const Limits& limits = {});

}  // namespace tracewise
