#include "tracewise/profile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tracewise/rewrite.hpp"
#include "tracewise/variant.hpp"

namespace tracewise {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_top(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) throw ProfileError("unbalanced ')' in profile");
    } else if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ProfileError("unbalanced '(' in profile");
  parts.push_back(text.substr(start));
  return parts;
}

ParamMap parse_params(std::string_view text) {
  ParamMap out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ProfileError("expected name=value in '" + std::string(item) + "'");
    std::string name(trim(item.substr(0, eq)));
    std::string_view value = trim(item.substr(eq + 1));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (name.empty() || ec != std::errc() || ptr != value.data() + value.size())
      throw ProfileError("bad parameter binding '" + std::string(item) + "'");
    if (out.count(name)) throw ProfileError("parameter '" + name + "' bound twice");
    out[name] = v;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t SemanticProfile::non_default_params() const {
  std::size_t n = 0;
  for (const auto& a : active) n += a.non_default;
  return n;
}

std::vector<std::string> SemanticProfile::codes() const {
  std::vector<std::string> out;
  for (const auto& a : active) out.push_back(a.code.str());
  return out;
}

std::string SemanticProfile::literal() const {
  std::string out;
  const Registry& reg = bundled_registry();
  for (const auto& a : active) {
    if (!out.empty()) out += ',';
    out += a.code.str();
    std::string args;
    const CatalogEntry* e = reg.find(a.code);
    for (const auto& [name, v] : a.params) {
      if (e && e->params.count(name) && e->params.at(name).def == v) continue;
      if (!args.empty()) args += ',';
      args += name + "=" + std::to_string(v);
    }
    if (!args.empty()) out += "(" + args + ")";
  }
  return out;
}

std::vector<ProfileRequest> parse_profile_literal(std::string_view text) {
  std::vector<ProfileRequest> out;
  if (trim(text).empty()) return out;
  for (std::string_view part : split_top(text)) {
    part = trim(part);
    if (part.empty()) throw ProfileError("empty item in profile");
    ProfileRequest r;
    auto open = part.find('(');
    if (open == std::string_view::npos) {
      r.code = std::string(part);
    } else {
      if (part.back() != ')') throw ProfileError("expected ')' at end of '" + std::string(part) + "'");
      r.code = std::string(trim(part.substr(0, open)));
      r.params = parse_params(part.substr(open + 1, part.size() - open - 2));
    }
    out.push_back(std::move(r));
  }
  return out;
}

SemanticProfile compile_profile(const Registry& registry, const std::vector<ProfileRequest>& requested) {
  SemanticProfile p;
  std::map<std::string, MisconceptionCode> claimed;
  for (const auto& req : requested) {
    auto code = MisconceptionCode::try_parse(req.code);
    if (!code) throw ProfileError("malformed code: " + req.code);
    const CatalogEntry* e = registry.find(*code);
    if (!e) throw ProfileError("unknown code: " + req.code);
    if (!e->simulatable()) throw ProfileError(code->str() + " is descriptive only and cannot be simulated");
    for (const auto& a : p.active) {
      if (a.code == *code) throw ProfileError(code->str() + " requested twice");
    }
    for (const auto& slot : e->slots) {
      auto [it, fresh] = claimed.emplace(slot, *code);
      if (!fresh)
        throw ProfileError("slot conflict: " + it->second.str() + " and " + code->str() + " both claim " + slot);
    }
    ActiveVariant v;
    v.code = *code;
    v.kind = e->kind;
    for (const auto& [name, value] : req.params) {
      auto spec = e->params.find(name);
      if (spec == e->params.end()) throw ProfileError(code->str() + " has no parameter '" + name + "'");
      if (value < spec->second.min || value > spec->second.max)
        throw ProfileError(code->str() + ": parameter " + name + "=" + std::to_string(value) + " outside [" +
                           std::to_string(spec->second.min) + ", " + std::to_string(spec->second.max) + "]");
    }
    for (const auto& [name, spec] : e->params) {
      auto it = req.params.find(name);
      v.params[name] = it == req.params.end() ? spec.def : it->second;
      if (v.params[name] != spec.def) ++v.non_default;
    }
    p.active.push_back(std::move(v));
  }
  std::sort(p.active.begin(), p.active.end(),
            [](const ActiveVariant& a, const ActiveVariant& b) { return a.code < b.code; });
  for (const auto& v : p.active) {
    if (v.kind == VariantKind::kStructuralRewrite) {
      if (!has_structural_rewrite(v.code)) throw ProfileError("no implementation for " + v.code.str());
      p.rewrites.push_back(v);
    } else if (!install_runtime_hook(v.code, v.params, p.hooks)) {
      throw ProfileError("no implementation for " + v.code.str());
    }
  }
  return p;
}

SemanticProfile compile_profile(const Registry& registry, std::string_view literal) {
  return compile_profile(registry, parse_profile_literal(literal));
}

}  // namespace tracewise
