#pragma once

#include "tracewise/ast.hpp"
#include "tracewise/profile.hpp"

namespace tracewise {

bool has_structural_rewrite(const MisconceptionCode& code);

/// Applies one structural variant at every site, in a single pre-order pass.
/// Unchanged nodes keep their ids; new nodes get ids from program.next_id.
Program apply_rewrite(const Program& program, const MisconceptionCode& code, const ParamMap& params);

/// Applies the profile's rewrites in code order.
Program rewrite_structural(const Program& program, const SemanticProfile& profile);

}  // namespace tracewise
