#include <algorithm>
#include <numeric>

#include "machine_impl.hpp"
#include "tracewise/features.hpp"

namespace tracewise::detail {

using BS = HookTable::BranchSelect;
using CE = HookTable::SelCondEval;

bool Machine::branch_cond(const Stmt& s, const If& node, int branch) {
  Value v = eval(*node.branches[static_cast<std::size_t>(branch)].cond);
  Event e;
  e.node = s.id;
  e.kind = EventKind::kCondCheck;
  e.value = v;
  e.branch = branch;
  cx_.emit(std::move(e));
  return v.truthy();
}

Flow Machine::take_branch(const Stmt& s, const If& node, int branch) {
  Event e;
  e.node = s.id;
  e.kind = EventKind::kBranchTaken;
  e.branch = branch;
  cx_.emit(std::move(e));
  const Body& b = branch < 0 ? *node.else_body : node.branches[static_cast<std::size_t>(branch)].body;
  return exec_list(b.stmts);
}

Flow Machine::exec_if(const Stmt& s, const If& node) {
  if (h_.sel_trigger == HookTable::SelTrigger::kWholeProgram && fired_.count(s.id)) return Flow::kNormal;

  ChainResult r;
  switch (h_.sel_repeat) {
    case HookTable::SelRepeat::kNone: r = exec_chain(s, node); break;
    case HookTable::SelRepeat::kUntilFalse:
      do {
        r = exec_chain(s, node);
      } while (r.took_condition_branch && r.flow == Flow::kNormal);
      break;
    case HookTable::SelRepeat::kFixedTimes:
      for (int i = 0; i < h_.repeat_times; ++i) {
        r = exec_chain(s, node);
        if (r.flow != Flow::kNormal) break;
      }
      break;
  }

  if (!node.else_body && !r.took_condition_branch && r.flow == Flow::kNormal) {
    if (h_.sel_post == HookTable::SelPost::kRestart) throw RestartProgram{};
    if (h_.sel_post == HookTable::SelPost::kHalt) halt(s.id, "false condition ends the program");
  }
  return r.flow;
}

Machine::ChainResult Machine::exec_chain(const Stmt& s, const If& node) {
  if (h_.sel_cond_eval == CE::kHindsight) return chain_hindsight(s, node);
  if (h_.sel_cond_eval != CE::kNone && node.branches.size() == 1) return chain_shadow(s, node);

  const int n = static_cast<int>(node.branches.size());
  ChainResult r;
  switch (h_.branch_select) {
    case BS::kStandard:
    case BS::kRecheckForElse: r = chain_standard(s, node, false); break;
    case BS::kNegated: r = chain_standard(s, node, true); break;
    case BS::kIgnoreInLoops:
      if (loop_depth_ == 0) return chain_standard(s, node, false);
      r.took_condition_branch = true;
      r.flow = take_branch(s, node, 0);
      return r;
    case BS::kAllBranches:
      for (int i = 0; i < n && r.flow == Flow::kNormal; ++i) {
        r.took_condition_branch = true;
        r.flow = take_branch(s, node, i);
      }
      if (node.else_body && r.flow == Flow::kNormal) r.flow = take_branch(s, node, -1);
      return r;
    case BS::kForced: {
      int k = h_.forced_branch;
      if (k < 0 || k >= n) k = node.else_body ? -1 : (k < 0 ? 0 : n - 1);
      r.took_condition_branch = k >= 0;
      r.flow = take_branch(s, node, k);
      return r;
    }
    case BS::kAllTrue:
      for (int i = 0; i < n; ++i) {
        if (branch_cond(s, node, i)) {
          r.took_condition_branch = true;
          r.flow = take_branch(s, node, i);
          if (r.flow != Flow::kNormal) return r;
        }
      }
      if (!r.took_condition_branch && node.else_body) r.flow = take_branch(s, node, -1);
      return r;
    case BS::kStopAtFirstFalse:
      for (int i = 0; i < n; ++i) {
        if (!branch_cond(s, node, i)) return r;
        r.took_condition_branch = true;
        r.flow = take_branch(s, node, i);
        return r;
      }
      return r;
    case BS::kElseAlways: {
      for (int i = 0; i < n; ++i) {
        if (branch_cond(s, node, i)) {
          r.took_condition_branch = true;
          r.flow = take_branch(s, node, i);
          break;
        }
      }
      if (node.else_body && r.flow == Flow::kNormal) r.flow = take_branch(s, node, -1);
      return r;
    }
    case BS::kPermuted: {
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      if (h_.chain_order == 0) {
        std::reverse(order.begin(), order.end());
      } else if (h_.chain_order == 1) {
        std::rotate(order.begin(), order.begin() + 1, order.end());
      } else {
        std::rotate(order.begin(), order.end() - 1, order.end());
      }
      for (int i : order) {
        if (branch_cond(s, node, i)) {
          r.took_condition_branch = true;
          r.flow = take_branch(s, node, i);
          return r;
        }
      }
      if (node.else_body) r.flow = take_branch(s, node, -1);
      return r;
    }
  }

  return r;
}

Machine::ChainResult Machine::chain_standard(const Stmt& s, const If& node, bool negate) {
  ChainResult r;
  const int n = static_cast<int>(node.branches.size());
  bool simple = is_simple_if(node);
  for (int i = 0; i < n; ++i) {
    if (branch_cond(s, node, i) != negate) {
      r.took_condition_branch = true;
      if (simple && h_.sel_trigger == HookTable::SelTrigger::kWholeProgram) {
        fired_.insert(s.id);
        std::erase(watchers_, &s);
      }
      r.flow = take_branch(s, node, i);
      if (h_.branch_select == BS::kRecheckForElse && r.flow == Flow::kNormal && node.else_body &&
          !branch_cond(s, node, i))
        r.flow = take_branch(s, node, -1);
      return r;
    }
  }
  if (node.else_body) {
    r.flow = take_branch(s, node, -1);
  } else if (simple && h_.sel_trigger == HookTable::SelTrigger::kWatchAfter) {
    arm_watcher(s);
  }
  return r;
}

Machine::ChainResult Machine::chain_hindsight(const Stmt& s, const If& node) {
  ChainResult r;
  const int n = static_cast<int>(node.branches.size());
  for (int i = 0; i < n; ++i) {
    SnapshotToken t = cx_.snapshot();
    Flow f = take_branch(s, node, i);
    if (branch_cond(s, node, i)) {
      cx_.discard(t);
      r.took_condition_branch = true;
      r.flow = f;
      return r;
    }
    cx_.restore(t);
  }
  if (node.else_body) r.flow = take_branch(s, node, -1);
  return r;
}

Machine::ChainResult Machine::chain_shadow(const Stmt& s, const If& node) {
  ChainResult r;
  if (branch_cond(s, node, 0)) {
    r.took_condition_branch = true;
    r.flow = take_branch(s, node, 0);
    return r;
  }
  const auto& stmts = node.branches[0].body.stmts;
  std::optional<SnapshotToken> entry;
  if (h_.sel_cond_eval == CE::kShadowRestart) entry = cx_.snapshot();

  std::size_t start = stmts.size();
  for (std::size_t j = 0; j < stmts.size(); ++j) {
    if (j > 0 && branch_cond(s, node, 0)) {
      start = j;
      break;
    }
    ++shadow_depth_;
    Flow f = exec_at(stmts, j);
    --shadow_depth_;
    if (f != Flow::kNormal) {
      if (entry) cx_.discard(*entry);
      r.flow = f;
      return r;
    }
  }

  if (start == stmts.size()) {
    if (entry) cx_.discard(*entry);
    if (node.else_body) r.flow = take_branch(s, node, -1);
    return r;
  }

  r.took_condition_branch = true;
  Event e;
  e.node = s.id;
  e.kind = EventKind::kBranchTaken;
  e.branch = 0;
  switch (h_.sel_cond_eval) {
    case CE::kShadowRestart:
      cx_.restore(*entry);
      r.flow = take_branch(s, node, 0);
      break;
    case CE::kShadowToEnd:
      cx_.emit(std::move(e));
      for (std::size_t j = start; j < stmts.size() && r.flow == Flow::kNormal; ++j) r.flow = exec_at(stmts, j);
      break;
    default:
      cx_.emit(std::move(e));
      for (std::size_t j = start; j < stmts.size() && r.flow == Flow::kNormal; ++j) {
        if (j > start && !branch_cond(s, node, 0)) break;
        r.flow = exec_at(stmts, j);
      }
      break;
  }
  return r;
}

void Machine::arm_watcher(const Stmt& s) {
  if (std::find(watchers_.begin(), watchers_.end(), &s) == watchers_.end()) watchers_.push_back(&s);
}

void Machine::check_watchers() {
  if (in_watcher_ || shadow_depth_ > 0) return;
  for (std::size_t i = 0; i < watchers_.size();) {
    const Stmt* w = watchers_[i];
    const If& node = std::get<If>(w->node);
    bool hit = false;
    try {
      hit = branch_cond(*w, node, 0);
    } catch (const RuntimeFault&) {
      hit = false;
    }
    if (!hit) {
      ++i;
      continue;
    }
    watchers_.erase(watchers_.begin() + static_cast<std::ptrdiff_t>(i));
    fired_.insert(w->id);
    in_watcher_ = true;
    take_branch(*w, node, 0);
    in_watcher_ = false;
  }
}

}  // namespace tracewise::detail
