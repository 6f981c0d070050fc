#include "tracewise/features.hpp"

#include <algorithm>

namespace tracewise {

const std::vector<std::string>& known_features() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> v{
        "if",
        "else",
        "else-if-chain",
        "if-without-else",
        "simple-if",
        "unbraced-body",
        "while",
        "do-while",
        "for",
        "loop",
        "for-init",
        "for-update",
        "pre-increment",
        "inc-dec-update",
        "nested-loops",
        "immediately-nested-loops",
        "nested-if",
        "nested-if-in-loop",
        "consecutive-ifs",
        "complementary-consecutive-ifs",
        "break",
        "continue",
        "statement-after-selection",
        "statement-after-loop",
        "multi-statement-loop-body",
        "constant-trip-count-loop",
        "relational-loop-condition",
        "body-writes-control",
        "body-reads-control",
        "loop-state-dependence",
    };
    std::sort(v.begin(), v.end());
    return v;
  }();
  return kNames;
}

std::set<std::string> vars_read(const Expr& e) {
  std::set<std::string> out;
  walk(e, [&](const Expr& x) {
    if (auto v = as<VarRef>(x)) out.insert(v->name);
  });
  return out;
}

std::set<std::string> vars_read(const std::vector<StmtPtr>& stmts) {
  std::set<std::string> out;
  walk(
      stmts,
      [&](const Stmt& s) {
        // Compound assignment and ++/-- read their target.
        if (auto a = as<Assign>(s)) {
          if (a->op != AssignOp::kSet) out.insert(a->target);
        } else if (auto d = as<IncDec>(s)) {
          out.insert(d->target);
        }
      },
      [&](const Expr& x) {
        if (auto v = as<VarRef>(x)) out.insert(v->name);
      });
  return out;
}

std::set<std::string> vars_written(const std::vector<StmtPtr>& stmts) {
  std::set<std::string> out;
  walk(stmts, [&](const Stmt& s) {
    if (auto a = as<Assign>(s)) out.insert(a->target);
    if (auto d = as<IncDec>(s)) out.insert(d->target);
  });
  return out;
}

namespace {

std::optional<std::string> target_of(const Stmt& s) {
  if (auto a = as<Assign>(s)) return a->target;
  if (auto d = as<IncDec>(s)) return d->target;
  return std::nullopt;
}

std::vector<std::string> vars_in_order(const Expr& e) {
  std::vector<std::string> out;
  walk(e, [&](const Expr& x) {
    if (auto v = as<VarRef>(x)) out.push_back(v->name);
  });
  return out;
}

std::optional<std::int64_t> literal_value(const Expr& e) {
  if (auto i = as<IntLit>(e)) return i->value;
  if (auto u = as<Unary>(e)) {
    if (u->op == UnaryOp::kNeg) {
      if (auto i = as<IntLit>(*u->operand)) return -i->value;
    }
  }
  return std::nullopt;
}

bool is_var(const Expr& e, const std::string& name) {
  auto v = as<VarRef>(e);
  return v && v->name == name;
}

bool literal_step(const Stmt& s, const std::string& ctl) {
  if (auto d = as<IncDec>(s)) return d->target == ctl;
  auto a = as<Assign>(s);
  if (!a || a->target != ctl) return false;
  if (a->op == AssignOp::kAdd || a->op == AssignOp::kSub) return literal_value(*a->value).has_value();
  if (a->op != AssignOp::kSet) return false;
  auto b = as<Binary>(*a->value);
  if (!b) return false;
  if (b->op == BinaryOp::kAdd) {
    return (is_var(*b->lhs, ctl) && literal_value(*b->rhs)) ||
           (is_var(*b->rhs, ctl) && literal_value(*b->lhs));
  }
  return b->op == BinaryOp::kSub && is_var(*b->lhs, ctl) && literal_value(*b->rhs);
}

BinaryOp complement_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::kLt: return BinaryOp::kGe;
    case BinaryOp::kGe: return BinaryOp::kLt;
    case BinaryOp::kGt: return BinaryOp::kLe;
    case BinaryOp::kLe: return BinaryOp::kGt;
    case BinaryOp::kEq: return BinaryOp::kNe;
    case BinaryOp::kNe: return BinaryOp::kEq;
    default: return op;
  }
}

bool negation_of(const Expr& neg, const Expr& e) {
  auto u = as<Unary>(neg);
  return u && u->op == UnaryOp::kNot && structurally_equal(*u->operand, e);
}

class Collector {
 public:
  FeatureSet out;

  void list(const std::vector<StmtPtr>& stmts) {
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      const Stmt& s = *stmts[i];
      bool has_next = i + 1 < stmts.size();
      if (has_next) {
        if (as<If>(s)) out.insert("statement-after-selection");
        if (as<Loop>(s)) out.insert("statement-after-loop");
        auto a = as<If>(s);
        auto b = as<If>(*stmts[i + 1]);
        if (a && b && is_simple_if(*a) && is_simple_if(*b)) {
          out.insert("consecutive-ifs");
          if (complementary(*a->branches[0].cond, *b->branches[0].cond))
            out.insert("complementary-consecutive-ifs");
        }
      }
      stmt(s);
    }
  }

  void body(const Body& b) {
    if (!b.braced) out.insert("unbraced-body");
    list(b.stmts);
  }

  void stmt(const Stmt& s) {
    if (auto i = as<If>(s)) {
      out.insert("if");
      if (i->else_body) {
        out.insert("else");
      } else {
        out.insert("if-without-else");
      }
      if (i->branches.size() > 1) out.insert("else-if-chain");
      if (is_simple_if(*i)) out.insert("simple-if");
      if (loop_depth_ > 0) out.insert("nested-if-in-loop");
      for (const auto& br : i->branches) {
        for (const auto& c : br.body.stmts) {
          if (as<If>(*c)) out.insert("nested-if");
        }
      }
      for (const auto& br : i->branches) body(br.body);
      if (i->else_body) body(*i->else_body);
    } else if (auto l = as<Loop>(s)) {
      loop(*l);
    } else if (auto b = as<Block>(s)) {
      list(b->stmts);
    } else if (as<Break>(s)) {
      out.insert("break");
    } else if (as<Continue>(s)) {
      out.insert("continue");
    }
  }

  void loop(const Loop& l) {
    out.insert("loop");
    switch (l.kind) {
      case LoopKind::kWhile: out.insert("while"); break;
      case LoopKind::kDoWhile: out.insert("do-while"); break;
      case LoopKind::kFor: out.insert("for"); break;
    }
    if (!l.init.empty()) out.insert("for-init");
    if (!l.update.empty()) out.insert("for-update");
    for (const auto& u : l.update) {
      if (auto d = as<IncDec>(*u)) {
        out.insert("inc-dec-update");
        if (is_prefix(d->form)) out.insert("pre-increment");
      }
    }
    if (loop_depth_ > 0) out.insert("nested-loops");
    if (l.kind != LoopKind::kDoWhile) {
      for (const auto& c : l.body.stmts) {
        auto inner = as<Loop>(*c);
        if (inner && inner->kind != LoopKind::kDoWhile) out.insert("immediately-nested-loops");
      }
    }
    if (l.body.stmts.size() > 1) out.insert("multi-statement-loop-body");
    if (has_constant_trip_count(l)) out.insert("constant-trip-count-loop");
    if (l.cond) {
      walk(*l.cond, [&](const Expr& e) {
        if (auto b = as<Binary>(e); b && is_relational(b->op)) out.insert("relational-loop-condition");
      });
    }
    auto ctl = control_variable(l);
    auto written = vars_written(l.body.stmts);
    auto read = vars_read(l.body.stmts);
    if (ctl) {
      if (written.count(*ctl)) out.insert("body-writes-control");
      if (read.count(*ctl)) out.insert("body-reads-control");
    }
    for (const auto& v : written) {
      if (v != ctl && read.count(v)) out.insert("loop-state-dependence");
    }
    ++loop_depth_;
    body(l.body);
    --loop_depth_;
  }

 private:
  int loop_depth_ = 0;
};

}  // namespace

bool is_simple_if(const If& node) { return node.branches.size() == 1 && !node.else_body; }

bool complementary(const Expr& a, const Expr& b) {
  if (negation_of(a, b) || negation_of(b, a)) return true;
  auto x = as<Binary>(a);
  auto y = as<Binary>(b);
  if (!x || !y) return false;
  BinaryOp c = complement_of(x->op);
  if (c == x->op || c != y->op) return false;
  return structurally_equal(*x->lhs, *y->lhs) && structurally_equal(*x->rhs, *y->rhs);
}

std::optional<std::string> control_variable(const Loop& loop) {
  if (loop.kind == LoopKind::kFor) {
    if (!loop.update.empty()) {
      if (auto t = target_of(*loop.update.front())) return t;
    }
    if (!loop.init.empty()) return target_of(*loop.init.front());
    return std::nullopt;
  }
  if (!loop.cond) return std::nullopt;
  auto written = vars_written(loop.body.stmts);
  for (const auto& v : vars_in_order(*loop.cond)) {
    if (written.count(v)) return v;
  }
  return std::nullopt;
}

bool has_constant_trip_count(const Loop& loop) {
  if (loop.kind != LoopKind::kFor || loop.init.size() != 1 || loop.update.size() != 1 || !loop.cond)
    return false;
  auto ctl = control_variable(loop);
  if (!ctl) return false;
  auto init = as<Assign>(*loop.init.front());
  if (!init || init->target != *ctl || init->op != AssignOp::kSet || !literal_value(*init->value))
    return false;
  auto cond = as<Binary>(*loop.cond);
  if (!cond || !(is_relational(cond->op) || cond->op == BinaryOp::kNe)) return false;
  bool shape = (is_var(*cond->lhs, *ctl) && literal_value(*cond->rhs)) ||
               (is_var(*cond->rhs, *ctl) && literal_value(*cond->lhs));
  if (!shape) return false;
  if (!literal_step(*loop.update.front(), *ctl)) return false;
  return vars_written(loop.body.stmts).count(*ctl) == 0;
}

bool contains_loop(const std::vector<StmtPtr>& stmts) {
  bool found = false;
  walk(stmts, [&](const Stmt& s) {
    if (as<Loop>(s)) found = true;
  });
  return found;
}

FeatureSet features(const Program& program) {
  Collector c;
  c.list(program.statements);
  return std::move(c.out);
}

}  // namespace tracewise
