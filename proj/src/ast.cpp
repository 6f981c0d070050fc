#include "tracewise/ast.hpp"

namespace tracewise {

std::string_view op_text(UnaryOp op) { return op == UnaryOp::kNeg ? "-" : "!"; }

std::string_view op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view op_text(AssignOp op) {
  switch (op) {
    case AssignOp::kSet: return "=";
    case AssignOp::kAdd: return "+=";
    case AssignOp::kSub: return "-=";
    case AssignOp::kMul: return "*=";
  }
  return "?";
}

bool is_relational(BinaryOp op) {
  return op == BinaryOp::kLt || op == BinaryOp::kLe || op == BinaryOp::kGt || op == BinaryOp::kGe;
}

ExprPtr make_expr(NodeId id, SourceLoc loc, decltype(Expr::node) node) {
  return std::make_shared<const Expr>(Expr{id, loc, std::move(node)});
}

StmtPtr make_stmt(NodeId id, SourceLoc loc, decltype(Stmt::node) node) {
  return std::make_shared<const Stmt>(Stmt{id, loc, std::move(node)});
}

StmtPtr with_node(const Stmt& s, decltype(Stmt::node) node) {
  return make_stmt(s.id, s.loc, std::move(node));
}

namespace {

bool eq(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool eq(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structurally_equal(*a[i], *b[i])) return false;
  }
  return true;
}

bool eq(const Body& a, const Body& b) { return a.braced == b.braced && eq(a.stmts, b.stmts); }

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto x = as<IntLit>(a)) return x->value == as<IntLit>(b)->value;
  if (auto x = as<BoolLit>(a)) return x->value == as<BoolLit>(b)->value;
  if (auto x = as<VarRef>(a)) return x->name == as<VarRef>(b)->name;
  if (auto x = as<Unary>(a)) {
    auto y = as<Unary>(b);
    return x->op == y->op && eq(x->operand, y->operand);
  }
  auto x = as<Binary>(a);
  auto y = as<Binary>(b);
  return x->op == y->op && eq(x->lhs, y->lhs) && eq(x->rhs, y->rhs);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto x = as<Assign>(a)) {
    auto y = as<Assign>(b);
    return x->target == y->target && x->op == y->op && eq(x->value, y->value);
  }
  if (auto x = as<IncDec>(a)) {
    auto y = as<IncDec>(b);
    return x->target == y->target && x->form == y->form;
  }
  if (auto x = as<Print>(a)) {
    auto y = as<Print>(b);
    if (x->args.size() != y->args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i) {
      if (x->args[i].index() != y->args[i].index()) return false;
      if (auto s = std::get_if<std::string>(&x->args[i])) {
        if (*s != std::get<std::string>(y->args[i])) return false;
      } else if (!eq(std::get<ExprPtr>(x->args[i]), std::get<ExprPtr>(y->args[i]))) {
        return false;
      }
    }
    return true;
  }
  if (auto x = as<If>(a)) {
    auto y = as<If>(b);
    if (x->branches.size() != y->branches.size()) return false;
    for (std::size_t i = 0; i < x->branches.size(); ++i) {
      if (!eq(x->branches[i].cond, y->branches[i].cond) ||
          !eq(x->branches[i].body, y->branches[i].body))
        return false;
    }
    if (x->else_body.has_value() != y->else_body.has_value()) return false;
    return !x->else_body || eq(*x->else_body, *y->else_body);
  }
  if (auto x = as<Loop>(a)) {
    auto y = as<Loop>(b);
    return x->kind == y->kind && eq(x->init, y->init) && eq(x->cond, y->cond) &&
           eq(x->update, y->update) && eq(x->body, y->body);
  }
  if (auto x = as<Block>(a)) return eq(x->stmts, as<Block>(b)->stmts);
  return true;  // Break, Continue
}

bool structurally_equal(const Program& a, const Program& b) { return eq(a.statements, b.statements); }

void walk(const Expr& e, const std::function<void(const Expr&)>& on_expr) {
  on_expr(e);
  if (auto u = as<Unary>(e)) {
    walk(*u->operand, on_expr);
  } else if (auto b = as<Binary>(e)) {
    walk(*b->lhs, on_expr);
    walk(*b->rhs, on_expr);
  }
}

namespace {

void walk_stmt(const Stmt& s, const std::function<void(const Stmt&)>& on_stmt,
               const std::function<void(const Expr&)>& on_expr) {
  on_stmt(s);
  auto expr = [&](const ExprPtr& e) {
    if (e && on_expr) walk(*e, on_expr);
  };
  auto list = [&](const std::vector<StmtPtr>& stmts) {
    for (const auto& c : stmts) walk_stmt(*c, on_stmt, on_expr);
  };
  if (auto a = as<Assign>(s)) {
    expr(a->value);
  } else if (auto p = as<Print>(s)) {
    for (const auto& arg : p->args) {
      if (auto e = std::get_if<ExprPtr>(&arg)) expr(*e);
    }
  } else if (auto i = as<If>(s)) {
    for (const auto& br : i->branches) {
      expr(br.cond);
      list(br.body.stmts);
    }
    if (i->else_body) list(i->else_body->stmts);
  } else if (auto l = as<Loop>(s)) {
    if (l->kind == LoopKind::kDoWhile) {
      list(l->body.stmts);
      expr(l->cond);
    } else {
      list(l->init);
      expr(l->cond);
      list(l->update);
      list(l->body.stmts);
    }
  } else if (auto b = as<Block>(s)) {
    list(b->stmts);
  }
}

}  // namespace

void walk(const std::vector<StmtPtr>& stmts, const std::function<void(const Stmt&)>& on_stmt,
          const std::function<void(const Expr&)>& on_expr) {
  for (const auto& s : stmts) walk_stmt(*s, on_stmt, on_expr);
}

std::vector<const std::vector<StmtPtr>*> child_lists(const Stmt& s) {
  std::vector<const std::vector<StmtPtr>*> out;
  if (auto i = as<If>(s)) {
    for (const auto& br : i->branches) out.push_back(&br.body.stmts);
    if (i->else_body) out.push_back(&i->else_body->stmts);
  } else if (auto l = as<Loop>(s)) {
    out.push_back(&l->body.stmts);
  } else if (auto b = as<Block>(s)) {
    out.push_back(&b->stmts);
  }
  return out;
}

}  // namespace tracewise
