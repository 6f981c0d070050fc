#include "tracewise/printer.hpp"

namespace tracewise {
namespace {

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 6;
  }
  return 0;
}

constexpr int kUnaryPrec = 7;
constexpr int kAtomPrec = 8;

int precedence(const Expr& e) {
  if (auto b = as<Binary>(e)) return precedence(b->op);
  if (as<Unary>(e)) return kUnaryPrec;
  return kAtomPrec;
}

void expr(std::string& out, const Expr& e);

void operand(std::string& out, const Expr& e, bool parens) {
  if (parens) out += '(';
  expr(out, e);
  if (parens) out += ')';
}

void expr(std::string& out, const Expr& e) {
  if (auto i = as<IntLit>(e)) {
    out += std::to_string(i->value);
  } else if (auto b = as<BoolLit>(e)) {
    out += b->value ? "true" : "false";
  } else if (auto v = as<VarRef>(e)) {
    out += v->name;
  } else if (auto u = as<Unary>(e)) {
    out += op_text(u->op);
    // "- -x" must not lex as "--x"
    operand(out, *u->operand, precedence(*u->operand) <= kUnaryPrec);
  } else if (auto bin = as<Binary>(e)) {
    int p = precedence(bin->op);
    operand(out, *bin->lhs, precedence(*bin->lhs) < p);
    out += ' ';
    out += op_text(bin->op);
    out += ' ';
    operand(out, *bin->rhs, precedence(*bin->rhs) <= p);
  }
}

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

std::string simple(const Stmt& s) {
  std::string out;
  if (auto a = as<Assign>(s)) {
    out += a->target;
    out += ' ';
    out += op_text(a->op);
    out += ' ';
    expr(out, *a->value);
  } else if (auto d = as<IncDec>(s)) {
    const char* op = is_increment(d->form) ? "++" : "--";
    out = is_prefix(d->form) ? op + d->target : d->target + op;
  }
  return out;
}

std::string header_list(const std::vector<StmtPtr>& stmts) {
  std::string out;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (i) out += ", ";
    out += simple(*stmts[i]);
  }
  return out;
}

void stmt(std::string& out, const Stmt& s, int depth);

bool braced_text(const Body& b) { return b.braced || b.stmts.empty(); }

void stmts(std::string& out, const std::vector<StmtPtr>& list, int depth) {
  for (const auto& s : list) stmt(out, *s, depth);
}

// Writes the body after a header already on the current line. Returns with the
// cursor at the start of a fresh line (braced bodies leave "}" unterminated so
// that "else" / "while" can follow on the same line).
void body(std::string& out, const Body& b, int depth) {
  if (b.braced || b.stmts.empty()) {
    out += " {\n";
    stmts(out, b.stmts, depth + 1);
    indent(out, depth);
    out += '}';
  } else {
    out += '\n';
    std::string inner;
    stmt(inner, *b.stmts.front(), depth + 1);
    inner.pop_back();  // trailing newline
    out += inner;
  }
}

void stmt(std::string& out, const Stmt& s, int depth) {
  indent(out, depth);
  if (as<Assign>(s) || as<IncDec>(s)) {
    out += simple(s);
    out += ";\n";
  } else if (auto p = as<Print>(s)) {
    out += "print(";
    for (std::size_t i = 0; i < p->args.size(); ++i) {
      if (i) out += ", ";
      if (auto str = std::get_if<std::string>(&p->args[i])) {
        out += quote_string(*str);
      } else {
        expr(out, *std::get<ExprPtr>(p->args[i]));
      }
    }
    out += ");\n";
  } else if (auto i = as<If>(s)) {
    for (std::size_t k = 0; k < i->branches.size(); ++k) {
      if (k) {
        bool closed = braced_text(i->branches[k - 1].body);
        out += closed ? " " : "\n";
        if (!closed) indent(out, depth);
        out += "else ";
      }
      out += "if (";
      expr(out, *i->branches[k].cond);
      out += ')';
      body(out, i->branches[k].body, depth);
    }
    if (i->else_body) {
      bool closed = braced_text(i->branches.back().body);
      out += closed ? " " : "\n";
      if (!closed) indent(out, depth);
      out += "else";
      body(out, *i->else_body, depth);
    }
    out += '\n';
  } else if (auto l = as<Loop>(s)) {
    switch (l->kind) {
      case LoopKind::kWhile:
        out += "while (";
        expr(out, *l->cond);
        out += ')';
        body(out, l->body, depth);
        out += '\n';
        break;
      case LoopKind::kDoWhile:
        out += "do";
        body(out, l->body, depth);
        if (braced_text(l->body)) {
          out += ' ';
        } else {
          out += '\n';
          indent(out, depth);
        }
        out += "while (";
        expr(out, *l->cond);
        out += ");\n";
        break;
      case LoopKind::kFor:
        out += "for (";
        out += header_list(l->init);
        out += "; ";
        if (l->cond) expr(out, *l->cond);
        out += "; ";
        out += header_list(l->update);
        out += ')';
        body(out, l->body, depth);
        out += '\n';
        break;
    }
  } else if (as<Break>(s)) {
    out += "break;\n";
  } else if (as<Continue>(s)) {
    out += "continue;\n";
  } else if (auto b = as<Block>(s)) {
    out += "{\n";
    stmts(out, b->stmts, depth + 1);
    indent(out, depth);
    out += "}\n";
  }
}

}  // namespace

std::string quote_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string pretty_print(const Program& program) {
  std::string out;
  stmts(out, program.statements, 0);
  return out;
}

std::string pretty_print(const Expr& e) {
  std::string out;
  expr(out, e);
  return out;
}

std::string pretty_print(const Stmt& s) {
  std::string out;
  stmt(out, s, 0);
  return out;
}

}  // namespace tracewise
