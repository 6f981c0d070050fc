#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tracewise/code.hpp"
#include "tracewise/features.hpp"

namespace tracewise {

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EntryStatus { kExecutable, kParameterized, kDescriptive };
enum class VariantKind { kRuntimeHook, kStructuralRewrite };

std::string_view to_string(EntryStatus s);
std::string_view to_string(VariantKind k);

struct ParamSpec {
  std::string type = "int";
  std::int64_t def = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

struct Category {
  MisconceptionCode code;
  std::string title;
  std::string quote;
};

struct CatalogEntry {
  MisconceptionCode code;
  std::string title;
  std::string quote;
  EntryStatus status = EntryStatus::kExecutable;
  /// Hook slots claimed. Usually one; a few entries claim two, written in the
  /// file as "a+b".
  std::vector<std::string> slots;
  VariantKind kind = VariantKind::kRuntimeHook;
  std::map<std::string, ParamSpec> params;
  /// Conjunction of clauses; a clause "a|b" holds if either feature is present.
  std::vector<std::string> applicability;
  std::string rationale;

  bool simulatable() const { return status != EntryStatus::kDescriptive; }
  std::string slot_text() const;
};

struct Registry {
  std::string version;
  std::vector<Category> categories;
  std::vector<CatalogEntry> entries;  // sorted by code

  const CatalogEntry* find(const MisconceptionCode& code) const;
};

/// All hook slot identifiers.
const std::vector<std::string>& known_slots();

/// Parses a registry document. Rejects malformed JSON, duplicate codes,
/// dangling prefixes and descriptive entries with a slot.
Registry load_registry(std::string_view source);
/// The catalog compiled into the library.
const Registry& bundled_registry();
std::string_view bundled_catalog_text();

/// JSON text that load_registry accepts.
std::string print_registry(const Registry& registry);
/// One entry in the registry file's entry format.
std::string entry_json(const CatalogEntry& entry);

/// Throws RegistryError("unknown code ...").
const CatalogEntry& lookup(const Registry& registry, const MisconceptionCode& code);
/// Entries strictly below `prefix`, in code order.
std::vector<const CatalogEntry*> children(const Registry& registry, const MisconceptionCode& prefix);

/// One message per violated invariant; empty when the registry is sound.
std::vector<std::string> validate_registry(const Registry& registry);

/// The complete list of taxonomy leaves and the descriptive subset.
const std::vector<std::string>& canonical_leaves();
const std::vector<std::string>& canonical_descriptive();
/// Differences between a registry and the canonical leaf list.
std::vector<std::string> audit_catalog(const Registry& registry);

bool applicable(const CatalogEntry& entry, const FeatureSet& features);
/// Simulatable codes whose applicability holds, in code order.
std::vector<MisconceptionCode> applicable_variants(const Registry& registry, const FeatureSet& features);

}  // namespace tracewise
