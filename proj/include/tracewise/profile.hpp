#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tracewise/hooks.hpp"
#include "tracewise/registry.hpp"

namespace tracewise {

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, std::int64_t>;

/// One requested code with the parameters written for it.
struct ProfileRequest {
  std::string code;
  ParamMap params;

  friend bool operator==(const ProfileRequest&, const ProfileRequest&) = default;
};

struct ActiveVariant {
  MisconceptionCode code;
  ParamMap params;  // every declared parameter, defaults filled in
  VariantKind kind = VariantKind::kRuntimeHook;
  std::size_t non_default = 0;

  friend bool operator==(const ActiveVariant&, const ActiveVariant&) = default;
};

/// A validated, conflict-free set of variants.
struct SemanticProfile {
  std::vector<ActiveVariant> active;    // sorted by code
  HookTable hooks;                      // runtime hooks installed
  std::vector<ActiveVariant> rewrites;  // structural variants, in code order

  bool empty() const { return active.empty(); }
  std::size_t size() const { return active.size(); }
  std::size_t non_default_params() const;
  std::vector<std::string> codes() const;
  /// Literal form accepted by parse_profile_literal; only non-default
  /// parameters are written.
  std::string literal() const;
};

/// "ITER.3.b.ii.A,ITER.5.a.i(k=2)". Empty text is the empty profile.
std::vector<ProfileRequest> parse_profile_literal(std::string_view text);

/// Throws ProfileError for unknown or descriptive codes, repeated codes,
/// unknown or out-of-range parameters, and slot conflicts (naming both codes).
SemanticProfile compile_profile(const Registry& registry, const std::vector<ProfileRequest>& requested);
SemanticProfile compile_profile(const Registry& registry, std::string_view literal);

}  // namespace tracewise
