#include "tracewise/registry.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace tracewise {

using nlohmann::ordered_json;

std::string_view to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::kExecutable: return "executable";
    case EntryStatus::kParameterized: return "parameterized";
    case EntryStatus::kDescriptive: return "descriptive";
  }
  return "?";
}

std::string_view to_string(VariantKind k) {
  return k == VariantKind::kRuntimeHook ? "runtime-hook" : "structural-rewrite";
}

std::string CatalogEntry::slot_text() const {
  std::string out;
  for (const auto& s : slots) {
    if (!out.empty()) out += '+';
    out += s;
  }
  return out;
}

const CatalogEntry* Registry::find(const MisconceptionCode& code) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), code,
                             [](const CatalogEntry& e, const MisconceptionCode& c) { return e.code < c; });
  if (it == entries.end() || it->code != code) return nullptr;
  return &*it;
}

const std::vector<std::string>& known_slots() {
  static const std::vector<std::string> kSlots{
      "sel.branch_select",   "sel.body_extent",       "sel.post",         "sel.repeat",
      "sel.trigger",         "sel.cond_eval",         "sel.nesting",      "loop.entry_order",
      "loop.cycle_order",    "loop.phase_skip",       "loop.cond_semantics", "loop.cond_eval",
      "loop.body_extent",    "loop.body_schedule",    "loop.update_semantics", "loop.state_view",
      "loop.post",           "loop.nesting",          "jump.break",       "jump.continue",
  };
  return kSlots;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string required_string(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw RegistryError("malformed document: " + where + " lacks string field \"" + key + "\"");
  return obj[key].get<std::string>();
}

MisconceptionCode code_field(const ordered_json& obj, const std::string& where) {
  std::string text = required_string(obj, "code", where);
  try {
    return MisconceptionCode::parse(text);
  } catch (const CodeError& e) {
    throw RegistryError("malformed document: " + std::string(e.what()));
  }
}

EntryStatus parse_status(const std::string& text, const std::string& where) {
  if (text == "executable") return EntryStatus::kExecutable;
  if (text == "parameterized") return EntryStatus::kParameterized;
  if (text == "descriptive") return EntryStatus::kDescriptive;
  throw RegistryError("malformed document: " + where + " has unknown status \"" + text + "\"");
}

CatalogEntry parse_entry(const ordered_json& j) {
  if (!j.is_object()) throw RegistryError("malformed document: entry is not an object");
  CatalogEntry e;
  e.code = code_field(j, "entry");
  std::string where = "entry " + e.code.str();
  e.title = required_string(j, "title", where);
  e.quote = required_string(j, "quote", where);
  e.status = parse_status(required_string(j, "status", where), where);
  if (j.contains("slot") && !j["slot"].is_null()) {
    if (!j["slot"].is_string()) throw RegistryError("malformed document: " + where + " slot is not a string");
    e.slots = split(j["slot"].get<std::string>(), '+');
  }
  if (j.contains("kind") && !j["kind"].is_null()) {
    std::string kind = required_string(j, "kind", where);
    if (kind == "runtime-hook") {
      e.kind = VariantKind::kRuntimeHook;
    } else if (kind == "structural-rewrite") {
      e.kind = VariantKind::kStructuralRewrite;
    } else {
      throw RegistryError("malformed document: " + where + " has unknown kind \"" + kind + "\"");
    }
  }
  if (j.contains("params") && !j["params"].is_null()) {
    if (!j["params"].is_object()) throw RegistryError("malformed document: " + where + " params is not an object");
    for (const auto& [name, spec] : j["params"].items()) {
      if (!spec.is_object()) throw RegistryError("malformed document: " + where + " param " + name);
      ParamSpec p;
      try {
        p.type = spec.value("type", std::string("int"));
        p.def = spec.at("default").get<std::int64_t>();
        p.min = spec.at("min").get<std::int64_t>();
        p.max = spec.at("max").get<std::int64_t>();
      } catch (const nlohmann::json::exception&) {
        throw RegistryError("malformed document: " + where + " param " + name +
                            " needs integer default/min/max");
      }
      e.params.emplace(name, p);
    }
  }
  if (j.contains("applicability") && !j["applicability"].is_null()) {
    if (!j["applicability"].is_array())
      throw RegistryError("malformed document: " + where + " applicability is not an array");
    for (const auto& f : j["applicability"]) {
      if (!f.is_string()) throw RegistryError("malformed document: " + where + " applicability item");
      e.applicability.push_back(f.get<std::string>());
    }
  }
  if (j.contains("rationale") && j["rationale"].is_string()) e.rationale = j["rationale"].get<std::string>();
  if (e.status == EntryStatus::kDescriptive && !e.slots.empty())
    throw RegistryError("descriptive entry with a slot: " + e.code.str());
  return e;
}

void check_structure(const Registry& r, std::vector<std::string>& issues) {
  std::set<MisconceptionCode> seen;
  std::set<MisconceptionCode> categories;
  for (const auto& c : r.categories) {
    if (!seen.insert(c.code).second) issues.push_back("duplicate code: " + c.code.str());
    categories.insert(c.code);
  }
  for (const auto& e : r.entries) {
    if (!seen.insert(e.code).second) issues.push_back("duplicate code: " + e.code.str());
  }
  auto check_prefixes = [&](const MisconceptionCode& code) {
    for (auto p = code.parent(); p; p = p->parent()) {
      if (!seen.count(*p)) {
        issues.push_back("dangling prefix: " + p->str() + " (of " + code.str() + ")");
        return;
      }
      if (!categories.count(*p)) {
        issues.push_back("entry " + p->str() + " has children but is not a category");
        return;
      }
    }
  };
  for (const auto& c : r.categories) check_prefixes(c.code);
  for (const auto& e : r.entries) check_prefixes(e.code);
}

}  // namespace

Registry load_registry(std::string_view source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw RegistryError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw RegistryError("malformed document: top level is not an object");
  Registry r;
  r.version = doc.value("version", std::string());
  if (doc.contains("categories")) {
    if (!doc["categories"].is_array()) throw RegistryError("malformed document: categories is not an array");
    for (const auto& c : doc["categories"]) {
      if (!c.is_object()) throw RegistryError("malformed document: category is not an object");
      Category cat;
      cat.code = code_field(c, "category");
      cat.title = required_string(c, "title", "category " + cat.code.str());
      cat.quote = c.value("quote", std::string());
      r.categories.push_back(std::move(cat));
    }
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw RegistryError("malformed document: missing entries array");
  for (const auto& j : doc["entries"]) r.entries.push_back(parse_entry(j));

  std::vector<std::string> issues;
  check_structure(r, issues);
  if (!issues.empty()) throw RegistryError(issues.front());
  std::sort(r.categories.begin(), r.categories.end(),
            [](const Category& a, const Category& b) { return a.code < b.code; });
  std::sort(r.entries.begin(), r.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  return r;
}

const Registry& bundled_registry() {
  static const Registry r = load_registry(bundled_catalog_text());
  return r;
}

namespace {

ordered_json entry_to_json(const CatalogEntry& e) {
  ordered_json j;
  j["code"] = e.code.str();
  j["title"] = e.title;
  j["quote"] = e.quote;
  j["status"] = std::string(to_string(e.status));
  if (!e.slots.empty()) {
    j["slot"] = e.slot_text();
    j["kind"] = std::string(to_string(e.kind));
  }
  if (!e.params.empty()) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, p] : e.params) {
      params[name] = {{"type", p.type}, {"default", p.def}, {"min", p.min}, {"max", p.max}};
    }
    j["params"] = params;
  }
  j["applicability"] = e.applicability;
  if (!e.rationale.empty()) j["rationale"] = e.rationale;
  return j;
}

}  // namespace

std::string entry_json(const CatalogEntry& entry) { return entry_to_json(entry).dump(2) + "\n"; }

std::string print_registry(const Registry& registry) {
  ordered_json doc;
  doc["version"] = registry.version;
  doc["categories"] = ordered_json::array();
  for (const auto& c : registry.categories) {
    doc["categories"].push_back({{"code", c.code.str()}, {"title", c.title}, {"quote", c.quote}});
  }
  doc["entries"] = ordered_json::array();
  for (const auto& e : registry.entries) doc["entries"].push_back(entry_to_json(e));
  return doc.dump(2) + "\n";
}

const CatalogEntry& lookup(const Registry& registry, const MisconceptionCode& code) {
  if (auto e = registry.find(code)) return *e;
  throw RegistryError("unknown code: " + code.str());
}

std::vector<const CatalogEntry*> children(const Registry& registry, const MisconceptionCode& prefix) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : registry.entries) {
    if (e.code.has_proper_prefix(prefix)) out.push_back(&e);
  }
  return out;
}

std::vector<std::string> validate_registry(const Registry& registry) {
  std::vector<std::string> issues;
  check_structure(registry, issues);
  const auto& slots = known_slots();
  const auto& feats = known_features();
  for (const auto& e : registry.entries) {
    std::string c = e.code.str();
    if (e.title.empty()) issues.push_back(c + ": empty title");
    if (e.quote.empty()) issues.push_back(c + ": empty quote");
    if (e.status == EntryStatus::kDescriptive) {
      if (!e.slots.empty()) issues.push_back(c + ": descriptive entry names a slot");
      if (e.rationale.empty()) issues.push_back(c + ": descriptive entry lacks a rationale");
      if (!e.params.empty()) issues.push_back(c + ": descriptive entry has parameters");
      continue;
    }
    if (e.slots.empty()) {
      issues.push_back(c + ": simulatable entry lacks a slot");
    } else {
      for (const auto& s : e.slots) {
        if (std::find(slots.begin(), slots.end(), s) == slots.end())
          issues.push_back(c + ": unknown slot \"" + s + "\"");
      }
    }
    if (e.status == EntryStatus::kParameterized && e.params.empty())
      issues.push_back(c + ": parameterized entry has no parameters");
    if (e.status == EntryStatus::kExecutable && !e.params.empty())
      issues.push_back(c + ": executable entry has parameters");
    for (const auto& [name, p] : e.params) {
      if (p.type != "int") issues.push_back(c + ": parameter " + name + " has unsupported type " + p.type);
      if (p.min > p.max) issues.push_back(c + ": parameter " + name + " has empty range");
      if (p.def < p.min || p.def > p.max)
        issues.push_back(c + ": parameter " + name + " default outside its range");
    }
    for (const auto& clause : e.applicability) {
      for (const auto& f : split(clause, '|')) {
        if (!std::binary_search(feats.begin(), feats.end(), f))
          issues.push_back(c + ": unknown feature \"" + f + "\"");
      }
    }
  }
  return issues;
}

const std::vector<std::string>& canonical_leaves() {
  static const std::vector<std::string> kLeaves{
      "SEL.1.a.i",     "SEL.1.a.ii",     "SEL.1.b.i",      "SEL.1.b.ii",      "SEL.1.c",
      "SEL.2.a",       "SEL.2.b",        "SEL.3.a.i",      "SEL.3.b.i",       "SEL.3.b.ii",
      "SEL.3.c.i",     "SEL.3.c.ii",     "SEL.4.a.i",      "SEL.4.a.ii.A",    "SEL.4.a.ii.B",
      "SEL.4.b.i",     "SEL.4.b.ii",     "SEL.4.c.i",      "SEL.4.c.ii.A.I",  "SEL.4.c.ii.A.II",
      "SEL.4.c.ii.B",  "SEL.4.d.i",      "SEL.4.d.ii.A",   "SEL.4.d.ii.B",    "SEL.5.a.i",
      "SEL.5.a.ii",    "SEL.5.b",        "ITER.1.a",       "ITER.1.b",        "ITER.1.c",
      "ITER.1.d",      "ITER.2.a.i",     "ITER.2.a.ii",    "ITER.2.b.i",      "ITER.2.b.ii",
      "ITER.3.a.i",    "ITER.3.a.ii",    "ITER.3.a.iii",   "ITER.3.a.iv",     "ITER.3.a.v",
      "ITER.3.b.i",    "ITER.3.b.ii.A",  "ITER.3.b.ii.B",  "ITER.3.b.iii",    "ITER.3.b.iv",
      "ITER.3.b.v",    "ITER.4.a.i.A",   "ITER.4.a.i.B",   "ITER.4.a.i.C",    "ITER.4.a.ii.A",
      "ITER.4.a.ii.B", "ITER.4.a.iii.A", "ITER.4.a.iii.B", "ITER.4.b",        "ITER.5.a.i",
      "ITER.5.a.ii.A", "ITER.5.a.ii.B",  "ITER.5.a.iii.A", "ITER.5.a.iii.B",  "ITER.5.b.i.A",
      "ITER.5.b.i.B",  "ITER.5.b.ii",    "ITER.6.a",       "ITER.6.b",        "ITER.6.c",
      "ITER.6.d",      "ITER.6.e",       "ITER.6.f",       "ITER.7.a.i",      "ITER.7.a.ii",
      "ITER.7.a.iii",  "ITER.7.b.i",
  };
  return kLeaves;
}

const std::vector<std::string>& canonical_descriptive() {
  static const std::vector<std::string> kDescriptive{
      "SEL.3.a.i", "SEL.4.a.i", "ITER.1.c", "ITER.4.a.iii.A", "ITER.4.a.iii.B", "ITER.5.b.ii",
  };
  return kDescriptive;
}

std::vector<std::string> audit_catalog(const Registry& registry) {
  std::vector<std::string> out;
  std::set<std::string> expected(canonical_leaves().begin(), canonical_leaves().end());
  std::set<std::string> descriptive(canonical_descriptive().begin(), canonical_descriptive().end());
  std::set<std::string> present;
  for (const auto& e : registry.entries) {
    std::string c = e.code.str();
    present.insert(c);
    if (!expected.count(c)) out.push_back("extra entry " + c);
    bool desc = e.status == EntryStatus::kDescriptive;
    if (desc != (descriptive.count(c) > 0))
      out.push_back(c + (desc ? " should not be descriptive" : " should be descriptive"));
  }
  for (const auto& c : canonical_leaves()) {
    if (!present.count(c)) out.push_back("missing entry " + c);
  }
  return out;
}

bool applicable(const CatalogEntry& entry, const FeatureSet& features) {
  for (const auto& clause : entry.applicability) {
    bool any = false;
    for (const auto& f : split(clause, '|')) any = any || features.count(f) > 0;
    if (!any) return false;
  }
  return true;
}

std::vector<MisconceptionCode> applicable_variants(const Registry& registry, const FeatureSet& features) {
  std::vector<MisconceptionCode> out;
  if (features.empty()) return out;
  for (const auto& e : registry.entries) {
    if (e.simulatable() && applicable(e, features)) out.push_back(e.code);
  }
  return out;
}

}  // namespace tracewise
