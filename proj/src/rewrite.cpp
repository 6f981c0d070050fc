#include "tracewise/rewrite.hpp"

#include <functional>

#include "tracewise/features.hpp"

namespace tracewise {

namespace {

using List = std::vector<StmtPtr>;
// Rewrites one statement list at sibling level. Children are handled by the
// caller afterwards.
using ListRule = std::function<List(const List&, IdSource&)>;

void fix(Body& b) {
  if (!b.braced && b.stmts.size() != 1) b.braced = true;
}

Body make_body(List stmts) {
  Body b;
  b.stmts = std::move(stmts);
  b.braced = true;
  return b;
}

List apply_list(const List& list, const ListRule& rule, IdSource& ids);

StmtPtr apply_children(const StmtPtr& s, const ListRule& rule, IdSource& ids) {
  bool changed = false;
  auto redo = [&](Body& b) {
    List next = apply_list(b.stmts, rule, ids);
    if (next != b.stmts) {
      b.stmts = std::move(next);
      fix(b);
      changed = true;
    }
  };
  if (auto i = as<If>(*s)) {
    If copy = *i;
    for (auto& br : copy.branches) redo(br.body);
    if (copy.else_body) redo(*copy.else_body);
    return changed ? with_node(*s, std::move(copy)) : s;
  }
  if (auto l = as<Loop>(*s)) {
    Loop copy = *l;
    redo(copy.body);
    return changed ? with_node(*s, std::move(copy)) : s;
  }
  if (auto b = as<Block>(*s)) {
    List next = apply_list(b->stmts, rule, ids);
    return next != b->stmts ? with_node(*s, Block{std::move(next)}) : s;
  }
  return s;
}

List apply_list(const List& list, const ListRule& rule, IdSource& ids) {
  List out = rule(list, ids);
  for (auto& s : out) s = apply_children(s, rule, ids);
  return out;
}

// ---- selection ----

List absorb_after_if(const List& in, std::int64_t k) {
  List out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const If* node = as<If>(*in[i]);
    if (!node || i + 1 >= in.size()) {
      out.push_back(in[i]);
      continue;
    }
    If copy = *node;
    Body& last = copy.else_body ? *copy.else_body : copy.branches.back().body;
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), in.size() - i - 1);
    for (std::size_t j = 1; j <= take; ++j) last.stmts.push_back(in[i + j]);
    fix(last);
    out.push_back(with_node(*in[i], std::move(copy)));
    i += take;
  }
  return out;
}

List hoist_from_if(const List& in) {
  List out;
  for (const auto& s : in) {
    const If* node = as<If>(*s);
    if (!node) {
      out.push_back(s);
      continue;
    }
    If copy = *node;
    List hoisted;
    auto take = [&](Body& b) {
      if (b.stmts.empty()) return;
      hoisted.push_back(b.stmts.back());
      b.stmts.pop_back();
      fix(b);
    };
    for (auto& br : copy.branches) take(br.body);
    if (copy.else_body) take(*copy.else_body);
    out.push_back(hoisted.empty() ? s : with_node(*s, std::move(copy)));
    out.insert(out.end(), hoisted.begin(), hoisted.end());
  }
  return out;
}

List next_as_else(const List& in) {
  List out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const If* node = as<If>(*in[i]);
    if (!node || node->else_body || i + 1 >= in.size()) {
      out.push_back(in[i]);
      continue;
    }
    If copy = *node;
    Body e;
    e.stmts = {in[i + 1]};
    e.braced = false;
    copy.else_body = std::move(e);
    out.push_back(with_node(*in[i], std::move(copy)));
    ++i;
  }
  return out;
}

List fuse_complementary(const List& in) {
  List out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const If* a = as<If>(*in[i]);
    const If* b = i + 1 < in.size() ? as<If>(*in[i + 1]) : nullptr;
    if (a && b && is_simple_if(*a) && is_simple_if(*b) &&
        complementary(*a->branches[0].cond, *b->branches[0].cond)) {
      If copy = *a;
      copy.else_body = b->branches[0].body;
      out.push_back(with_node(*in[i], std::move(copy)));
      ++i;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

List lift_nested_ifs(const List& in) {
  List out;
  for (const auto& s : in) {
    const If* node = as<If>(*s);
    if (!node) {
      out.push_back(s);
      continue;
    }
    If copy = *node;
    List lifted;
    for (auto& br : copy.branches) {
      List keep;
      for (const auto& inner : br.body.stmts) {
        (as<If>(*inner) ? lifted : keep).push_back(inner);
      }
      br.body.stmts = std::move(keep);
      fix(br.body);
    }
    out.push_back(lifted.empty() ? s : with_node(*s, std::move(copy)));
    out.insert(out.end(), lifted.begin(), lifted.end());
  }
  return out;
}

List nest_pairs(const List& in) {
  List out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const If* a = as<If>(*in[i]);
    const If* b = i + 1 < in.size() ? as<If>(*in[i + 1]) : nullptr;
    if (a && b && is_simple_if(*a) && is_simple_if(*b)) {
      If copy = *a;
      copy.branches[0].body.stmts.push_back(in[i + 1]);
      fix(copy.branches[0].body);
      out.push_back(with_node(*in[i], std::move(copy)));
      ++i;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

// ---- iteration ----

List unroll_once(const List& in) {
  List out;
  for (const auto& s : in) {
    if (auto l = as<Loop>(*s)) {
      List inner = unroll_once(l->body.stmts);
      out.insert(out.end(), inner.begin(), inner.end());
    } else {
      out.push_back(s);
    }
  }
  return out;
}

List hoist_from_loop(const List& in) {
  List out;
  for (const auto& s : in) {
    const Loop* l = as<Loop>(*s);
    if (!l || l->body.stmts.empty()) {
      out.push_back(s);
      continue;
    }
    Loop copy = *l;
    StmtPtr last = copy.body.stmts.back();
    copy.body.stmts.pop_back();
    fix(copy.body);
    out.push_back(with_node(*s, std::move(copy)));
    out.push_back(last);
  }
  return out;
}

List absorb_after_loop(const List& in, std::int64_t k) {
  List out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Loop* l = as<Loop>(*in[i]);
    if (!l || i + 1 >= in.size()) {
      out.push_back(in[i]);
      continue;
    }
    Loop copy = *l;
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), in.size() - i - 1);
    for (std::size_t j = 1; j <= take; ++j) copy.body.stmts.push_back(in[i + j]);
    fix(copy.body);
    out.push_back(with_node(*in[i], std::move(copy)));
    i += take;
  }
  return out;
}

// Position of the first direct inner loop of a non-do-while outer loop.
std::optional<std::size_t> inner_loop_index(const Loop& outer) {
  if (outer.kind == LoopKind::kDoWhile) return std::nullopt;
  for (std::size_t i = 0; i < outer.body.stmts.size(); ++i) {
    if (auto l = as<Loop>(*outer.body.stmts[i]); l && l->kind != LoopKind::kDoWhile) return i;
  }
  return std::nullopt;
}

using NestRule = std::function<void(const StmtPtr& outer_stmt, const Loop& outer, std::size_t at, List& out,
                                    IdSource& ids)>;

List on_nested(const List& in, IdSource& ids, const NestRule& rule) {
  List out;
  for (const auto& s : in) {
    const Loop* l = as<Loop>(*s);
    auto at = l ? inner_loop_index(*l) : std::nullopt;
    if (!at) {
      out.push_back(s);
      continue;
    }
    rule(s, *l, *at, out, ids);
  }
  return out;
}

List splice(const List& body, std::size_t at, const List& with) {
  List out(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), body.begin() + static_cast<std::ptrdiff_t>(at) + 1, body.end());
  return out;
}

void fuse_loops(const StmtPtr& s, const Loop& outer, std::size_t at, List& out, IdSource& ids) {
  const Stmt& inner_stmt = *outer.body.stmts[at];
  const Loop& inner = std::get<Loop>(inner_stmt.node);
  Loop fused;
  fused.init = outer.init;
  fused.init.insert(fused.init.end(), inner.init.begin(), inner.init.end());
  fused.update = outer.update;
  fused.update.insert(fused.update.end(), inner.update.begin(), inner.update.end());
  if (outer.cond && inner.cond) {
    fused.cond = make_expr(ids.next(), outer.cond->loc, Binary{BinaryOp::kAnd, outer.cond, inner.cond});
  } else {
    fused.cond = outer.cond ? outer.cond : inner.cond;
  }
  bool needs_for = !fused.init.empty() || !fused.update.empty() || !fused.cond;
  fused.kind = needs_for ? LoopKind::kFor : LoopKind::kWhile;
  fused.body = make_body(splice(outer.body.stmts, at, inner.body.stmts));
  out.push_back(with_node(*s, std::move(fused)));
}

void sequence_loops(const StmtPtr& s, const Loop& outer, std::size_t at, List& out, IdSource&) {
  Loop copy = outer;
  StmtPtr inner = copy.body.stmts[at];
  copy.body.stmts.erase(copy.body.stmts.begin() + static_cast<std::ptrdiff_t>(at));
  fix(copy.body);
  out.push_back(with_node(*s, std::move(copy)));
  out.push_back(inner);
}

void swap_headers(const StmtPtr& s, const Loop& outer, std::size_t at, List& out, IdSource&) {
  const Stmt& inner_stmt = *outer.body.stmts[at];
  const Loop& inner = std::get<Loop>(inner_stmt.node);
  Loop new_inner = inner;
  new_inner.kind = outer.kind;
  new_inner.init = outer.init;
  new_inner.cond = outer.cond;
  new_inner.update = outer.update;
  Loop new_outer = outer;
  new_outer.kind = inner.kind;
  new_outer.init = inner.init;
  new_outer.cond = inner.cond;
  new_outer.update = inner.update;
  new_outer.body.stmts[at] = with_node(inner_stmt, std::move(new_inner));
  out.push_back(with_node(*s, std::move(new_outer)));
}

void inner_header_wins(const StmtPtr& s, const Loop& outer, std::size_t at, List& out, IdSource&) {
  const Loop& inner = std::get<Loop>(outer.body.stmts[at]->node);
  out.insert(out.end(), outer.init.begin(), outer.init.end());
  Loop merged = inner;
  merged.body = make_body(splice(outer.body.stmts, at, inner.body.stmts));
  out.push_back(with_node(*s, std::move(merged)));
}

using Rewrite = std::function<List(const List&, IdSource&, const ParamMap&)>;

std::int64_t param(const ParamMap& p, const char* name, std::int64_t def) {
  auto it = p.find(name);
  return it == p.end() ? def : it->second;
}

const std::map<std::string, Rewrite>& rewrites() {
  static const std::map<std::string, Rewrite> table = {
      {"SEL.2.a", [](const List& l, IdSource&, const ParamMap& p) { return absorb_after_if(l, param(p, "k", 1)); }},
      {"SEL.2.b", [](const List& l, IdSource&, const ParamMap&) { return hoist_from_if(l); }},
      {"SEL.3.c.ii", [](const List& l, IdSource&, const ParamMap&) { return next_as_else(l); }},
      {"SEL.4.d.ii.B", [](const List& l, IdSource&, const ParamMap&) { return fuse_complementary(l); }},
      {"SEL.5.a.i", [](const List& l, IdSource&, const ParamMap&) { return lift_nested_ifs(l); }},
      {"SEL.5.a.ii", [](const List& l, IdSource&, const ParamMap&) { return nest_pairs(l); }},
      {"ITER.1.a", [](const List& l, IdSource&, const ParamMap&) { return unroll_once(l); }},
      {"ITER.2.a.i", [](const List& l, IdSource&, const ParamMap&) { return hoist_from_loop(l); }},
      {"ITER.2.a.ii",
       [](const List& l, IdSource&, const ParamMap& p) { return absorb_after_loop(l, param(p, "k", 1)); }},
      {"ITER.6.a", [](const List& l, IdSource& ids, const ParamMap&) { return on_nested(l, ids, fuse_loops); }},
      {"ITER.6.b", [](const List& l, IdSource& ids, const ParamMap&) { return on_nested(l, ids, sequence_loops); }},
      {"ITER.6.c", [](const List& l, IdSource& ids, const ParamMap&) { return on_nested(l, ids, swap_headers); }},
      {"ITER.6.e",
       [](const List& l, IdSource& ids, const ParamMap&) { return on_nested(l, ids, inner_header_wins); }},
  };
  return table;
}

}  // namespace

bool has_structural_rewrite(const MisconceptionCode& code) { return rewrites().count(code.str()) > 0; }

Program apply_rewrite(const Program& program, const MisconceptionCode& code, const ParamMap& params) {
  auto it = rewrites().find(code.str());
  if (it == rewrites().end()) return program;
  IdSource ids(program.next_id);
  const Rewrite& rw = it->second;
  ListRule rule = [&](const List& l, IdSource& src) { return rw(l, src, params); };
  Program out;
  out.statements = apply_list(program.statements, rule, ids);
  out.next_id = ids.peek();
  return out;
}

Program rewrite_structural(const Program& program, const SemanticProfile& profile) {
  Program p = program;
  for (const auto& v : profile.rewrites) p = apply_rewrite(p, v.code, v.params);
  return p;
}

}  // namespace tracewise
