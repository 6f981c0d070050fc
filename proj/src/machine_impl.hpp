#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tracewise/machine.hpp"

namespace tracewise::detail {

enum class Flow { kNormal, kBroke, kContinued };

/// Thrown by the restart-on-false selection rule; caught at the top level.
struct RestartProgram {};

struct LoopInfo {
  std::optional<std::string> control;
  bool constant_trip = false;
  bool has_nested_loop = false;
  bool prefix_update = false;
  std::set<std::string> body_written;
  ExprPtr cond;  // condition as the hooks see it (may be rewritten)
};

class Machine {
 public:
  Machine(const Program& program, const HookTable& hooks, ExecContext& cx);
  void run();

 private:
  // statements
  Flow exec_list(const std::vector<StmtPtr>& list);
  Flow exec_at(const std::vector<StmtPtr>& list, std::size_t index);
  Flow exec_stmt(const Stmt& s, const Stmt* next);
  void exec_simple(const Stmt& s);
  void exec_print(const Stmt& s, const Print& p);
  Flow exec_break(const Stmt& s);
  Flow exec_continue(const Stmt& s);

  // selection (selection.cpp)
  struct ChainResult {
    Flow flow = Flow::kNormal;
    bool took_condition_branch = false;
  };
  Flow exec_if(const Stmt& s, const If& node);
  ChainResult exec_chain(const Stmt& s, const If& node);
  ChainResult chain_standard(const Stmt& s, const If& node, bool negate);
  ChainResult chain_hindsight(const Stmt& s, const If& node);
  ChainResult chain_shadow(const Stmt& s, const If& node);
  bool branch_cond(const Stmt& s, const If& node, int branch);
  Flow take_branch(const Stmt& s, const If& node, int branch);
  void arm_watcher(const Stmt& s);
  void check_watchers();

  // loops (loop_machine.cpp)
  Flow exec_loop(const Stmt& s, const Loop& loop, const Stmt* next);
  Flow exec_unbundled(const Stmt& s, const Loop& loop, const LoopInfo& info);
  const LoopInfo& loop_info(const Stmt& s, const Loop& loop);
  bool loop_cond(const Stmt& s, const LoopInfo& info);
  void run_header(const std::vector<StmtPtr>& stmts);
  void run_update(const Stmt& s, const Loop& loop, std::size_t applications);
  void phase(const Stmt& s, Phase p);

  Value read(const std::string& name) const { return cx_.state().read(name); }
  Value eval(const Expr& e) const { return eval_expr(e, reader_); }
  [[noreturn]] void halt(NodeId node, const std::string& reason);

  const Program& program_;
  const HookTable& h_;
  ExecContext& cx_;
  VarReader reader_;

  int loop_depth_ = 0;
  int shadow_depth_ = 0;  // > 0 while output is suppressed
  bool in_watcher_ = false;
  std::vector<const Stmt*> watchers_;
  std::set<NodeId> fired_;
  std::map<NodeId, LoopInfo> loop_info_;
};

}  // namespace tracewise::detail
