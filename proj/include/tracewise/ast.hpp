#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tracewise/lexer.hpp"

namespace tracewise {

/// Identifies a node within one Program. Zero means "no node".
using NodeId = std::uint32_t;

enum class UnaryOp { kNeg, kNot };
enum class BinaryOp { kAdd, kSub, kMul, kDiv, kMod, kLt, kLe, kGt, kGe, kEq, kNe, kAnd, kOr };

std::string_view op_text(UnaryOp op);
std::string_view op_text(BinaryOp op);
bool is_relational(BinaryOp op);  // < <= > >=

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  std::int64_t value = 0;
};
struct BoolLit {
  bool value = false;
};
struct VarRef {
  std::string name;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  NodeId id = 0;
  SourceLoc loc;
  std::variant<IntLit, BoolLit, VarRef, Unary, Binary> node;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

enum class AssignOp { kSet, kAdd, kSub, kMul };
enum class IncDecForm { kPreInc, kPostInc, kPreDec, kPostDec };

std::string_view op_text(AssignOp op);
inline bool is_increment(IncDecForm f) { return f == IncDecForm::kPreInc || f == IncDecForm::kPostInc; }
inline bool is_prefix(IncDecForm f) { return f == IncDecForm::kPreInc || f == IncDecForm::kPreDec; }

struct Assign {
  std::string target;
  AssignOp op = AssignOp::kSet;
  ExprPtr value;
};

struct IncDec {
  std::string target;
  IncDecForm form = IncDecForm::kPostInc;
};

/// A print argument is either an expression or a string literal.
using PrintArg = std::variant<ExprPtr, std::string>;

struct Print {
  std::vector<PrintArg> args;
};

/// Statement sequence of a branch or loop. `braced` is false when the source
/// wrote a single statement without braces.
struct Body {
  std::vector<StmtPtr> stmts;
  bool braced = true;
};

struct Branch {
  ExprPtr cond;
  Body body;
};

/// if / else-if chain with optional else.
struct If {
  std::vector<Branch> branches;
  std::optional<Body> else_body;
};

enum class LoopKind { kWhile, kDoWhile, kFor };

/// All three loop forms share one node so that variants can address phases
/// uniformly. `init`/`update` are only populated for `for` loops; `cond` may be
/// null for `for(;;)`.
struct Loop {
  LoopKind kind = LoopKind::kWhile;
  std::vector<StmtPtr> init;
  ExprPtr cond;
  std::vector<StmtPtr> update;
  Body body;
};

struct Break {};
struct Continue {};
struct Block {
  std::vector<StmtPtr> stmts;
};

struct Stmt {
  NodeId id = 0;
  SourceLoc loc;
  std::variant<Assign, IncDec, Print, If, Loop, Break, Continue, Block> node;
};

struct Program {
  std::vector<StmtPtr> statements;
  NodeId next_id = 1;  // first id not used by any node
};

template <typename T>
const T* as(const Stmt& s) {
  return std::get_if<T>(&s.node);
}
template <typename T>
const T* as(const Expr& e) {
  return std::get_if<T>(&e.node);
}

/// Hands out fresh ids for synthesized nodes.
class IdSource {
 public:
  explicit IdSource(NodeId next) : next_(next) {}
  NodeId next() { return next_++; }
  NodeId peek() const { return next_; }

 private:
  NodeId next_;
};

ExprPtr make_expr(NodeId id, SourceLoc loc, decltype(Expr::node) node);
StmtPtr make_stmt(NodeId id, SourceLoc loc, decltype(Stmt::node) node);
/// Copy of `s` with a different payload; keeps id and location.
StmtPtr with_node(const Stmt& s, decltype(Stmt::node) node);

/// Structural equality ignoring node ids and source locations.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Program& a, const Program& b);

/// Pre-order traversal in source order. The statement callback sees every
/// statement, including init/update statements of `for` headers.
void walk(const std::vector<StmtPtr>& stmts, const std::function<void(const Stmt&)>& on_stmt,
          const std::function<void(const Expr&)>& on_expr = nullptr);
void walk(const Expr& e, const std::function<void(const Expr&)>& on_expr);

/// Statement lists directly owned by `s` (branch bodies, loop body, block).
std::vector<const std::vector<StmtPtr>*> child_lists(const Stmt& s);

}  // namespace tracewise
