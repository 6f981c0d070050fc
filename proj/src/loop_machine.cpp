#include <algorithm>

#include "machine_impl.hpp"
#include "tracewise/features.hpp"

namespace tracewise::detail {

using H = HookTable;

namespace {

BinaryOp swapped(BinaryOp op, H::LoopCondEval mode) {
  if (mode == H::LoopCondEval::kSwapStrictness) {
    switch (op) {
      case BinaryOp::kLt: return BinaryOp::kLe;
      case BinaryOp::kLe: return BinaryOp::kLt;
      case BinaryOp::kGt: return BinaryOp::kGe;
      case BinaryOp::kGe: return BinaryOp::kGt;
      default: return op;
    }
  }
  switch (op) {
    case BinaryOp::kLt: return BinaryOp::kGt;
    case BinaryOp::kGt: return BinaryOp::kLt;
    case BinaryOp::kLe: return BinaryOp::kGe;
    case BinaryOp::kGe: return BinaryOp::kLe;
    default: return op;
  }
}

ExprPtr swap_relations(const ExprPtr& e, H::LoopCondEval mode) {
  if (auto u = as<Unary>(*e)) {
    return make_expr(e->id, e->loc, Unary{u->op, swap_relations(u->operand, mode)});
  }
  if (auto b = as<Binary>(*e)) {
    return make_expr(e->id, e->loc,
                     Binary{swapped(b->op, mode), swap_relations(b->lhs, mode), swap_relations(b->rhs, mode)});
  }
  return e;
}

// Additive reading of an update statement: the signed step it applies to its
// target, if it has one.
struct Step {
  std::string target;
  std::optional<ExprPtr> delta;  // nullopt: not additive
  bool negate = false;
  bool incdec = false;
};

Step classify(const Stmt& u) {
  Step st;
  if (auto d = as<IncDec>(u)) {
    st.target = d->target;
    st.incdec = true;
    st.negate = !is_increment(d->form);
    return st;
  }
  auto a = as<Assign>(u);
  if (!a) return st;
  st.target = a->target;
  if (a->op == AssignOp::kAdd || a->op == AssignOp::kSub) {
    st.delta = a->value;
    st.negate = a->op == AssignOp::kSub;
  } else if (a->op == AssignOp::kSet) {
    if (auto b = as<Binary>(*a->value)) {
      auto is_target = [&](const ExprPtr& x) {
        auto v = as<VarRef>(*x);
        return v && v->name == a->target;
      };
      if (b->op == BinaryOp::kAdd && is_target(b->lhs)) {
        st.delta = b->rhs;
      } else if (b->op == BinaryOp::kAdd && is_target(b->rhs)) {
        st.delta = b->lhs;
      } else if (b->op == BinaryOp::kSub && is_target(b->lhs)) {
        st.delta = b->rhs;
        st.negate = true;
      }
    }
  }
  return st;
}

}  // namespace

const LoopInfo& Machine::loop_info(const Stmt& s, const Loop& loop) {
  auto it = loop_info_.find(s.id);
  if (it != loop_info_.end()) return it->second;
  LoopInfo info;
  info.control = control_variable(loop);
  info.constant_trip = has_constant_trip_count(loop);
  info.has_nested_loop = contains_loop(loop.body.stmts);
  for (const auto& u : loop.update) {
    if (auto d = as<IncDec>(*u); d && is_prefix(d->form)) info.prefix_update = true;
  }
  info.body_written = vars_written(loop.body.stmts);
  info.cond = loop.cond;
  if (info.cond && h_.loop_cond_eval != H::LoopCondEval::kStandard)
    info.cond = swap_relations(info.cond, h_.loop_cond_eval);
  return loop_info_.emplace(s.id, std::move(info)).first->second;
}

void Machine::phase(const Stmt& s, Phase p) {
  Event e;
  e.node = s.id;
  e.kind = EventKind::kPhaseEnter;
  e.phase = p;
  cx_.emit(std::move(e));
}

bool Machine::loop_cond(const Stmt& s, const LoopInfo& info) {
  Value v = info.cond ? eval(*info.cond) : Value::of_bool(true);
  Event e;
  e.node = s.id;
  e.kind = EventKind::kCondCheck;
  e.value = v;
  cx_.emit(std::move(e));
  return v.truthy();
}

void Machine::run_header(const std::vector<StmtPtr>& stmts) {
  for (const auto& u : stmts) exec_simple(*u);
}

void Machine::run_update(const Stmt& s, const Loop& loop, std::size_t applications) {
  (void)s;
  if (h_.update == H::UpdateSemantics::kStandard) {
    run_header(loop.update);
    return;
  }
  for (const auto& u : loop.update) {
    Step st = classify(*u);
    bool additive = st.incdec || st.delta.has_value();
    if (st.target.empty() || (h_.update == H::UpdateSemantics::kDoubleStep && !st.incdec) ||
        (h_.update == H::UpdateSemantics::kAlternatingSign && !additive)) {
      exec_simple(*u);
      continue;
    }
    try {
      std::int64_t delta = 1;
      if (st.delta) {
        Value d = eval(**st.delta);
        if (!d.is_int()) throw RuntimeFault(ErrorKind::kTypeError, "update step needs an integer");
        delta = d.as_int();
      }
      if (st.negate) delta = checked_sub(0, delta);
      switch (h_.update) {
        case H::UpdateSemantics::kAlternatingSign:
          if (applications % 2 == 1) delta = checked_sub(0, delta);
          break;
        case H::UpdateSemantics::kUnitStep: delta = additive && delta < 0 ? -1 : 1; break;
        case H::UpdateSemantics::kDoubleStep: delta = checked_mul(delta, 2); break;
        case H::UpdateSemantics::kStandard: break;
      }
      Value cur = read(st.target);
      if (!cur.is_int()) throw RuntimeFault(ErrorKind::kTypeError, "update needs an integer variable");
      cx_.write(u->id, st.target, Value::of_int(checked_add(cur.as_int(), delta)));
    } catch (const RuntimeFault& f) {
      if (f.node() == 0) throw RuntimeFault(f.kind(), f.what(), u->id);
      throw;
    }
  }
}

Flow Machine::exec_loop(const Stmt& s, const Loop& loop, const Stmt* next) {
  const LoopInfo& info = loop_info(s, loop);
  const bool is_for = loop.kind == LoopKind::kFor;
  if (h_.body_schedule == H::BodySchedule::kUnbundled && is_for && info.control)
    return exec_unbundled(s, loop, info);

  const bool deferred = h_.loop_entry == H::LoopEntry::kDeferredInit && is_for && !loop.init.empty();
  if (is_for) {
    phase(s, Phase::kInit);
    if (!deferred && h_.phase_skip != H::PhaseSkip::kInit) run_header(loop.init);
  }

  // Views over the state for the state-view rules.
  State& st = cx_.state();
  const std::size_t base_overlays = st.overlay_count();
  std::optional<std::size_t> cond_view;
  std::optional<std::size_t> body_view;
  if (info.control) {
    const std::string& ctl = *info.control;
    if (h_.state_view == H::StateView::kShadowConditionControl) {
      Overlay o;
      o.values[ctl] = st.get(ctl);
      cond_view = st.push_overlay(std::move(o));
    } else if (h_.state_view == H::StateView::kFrozenBodyControl) {
      Overlay o;
      o.values[ctl] = st.get(ctl);
      body_view = st.push_overlay(std::move(o));
    }
  }
  if (h_.state_view == H::StateView::kFrozenLoopState) {
    Overlay o;
    for (const auto& v : info.body_written) {
      if (v == info.control) continue;
      if (auto cur = st.get(v)) o.values[v] = cur;
    }
    body_view = st.push_overlay(std::move(o));
  }
  auto sync_shadow = [&] {
    if (cond_view) st.overlay(*cond_view).values[*info.control] = st.get(*info.control);
  };
  auto pop_views = [&] {
    while (st.overlay_count() > base_overlays) st.pop_overlay();
  };

  // Phase ring.
  std::vector<Phase> ring;
  bool update_first_cycle = is_for && (h_.loop_cycle == H::LoopCycle::kUpdateBeforeBody ||
                                       (h_.loop_cycle == H::LoopCycle::kUpdateBeforeBodyPrefixOnly &&
                                        info.prefix_update));
  if (update_first_cycle) {
    ring = {Phase::kCond, Phase::kUpdate, Phase::kBody};
  } else if (is_for) {
    ring = {Phase::kCond, Phase::kBody, Phase::kUpdate};
  } else {
    ring = {Phase::kCond, Phase::kBody};
  }
  auto drop = [&](Phase p) { std::erase(ring, p); };
  switch (h_.phase_skip) {
    case H::PhaseSkip::kBody: drop(Phase::kBody); break;
    case H::PhaseSkip::kCond: drop(Phase::kCond); break;
    case H::PhaseSkip::kUpdate: drop(Phase::kUpdate); break;
    default: break;
  }

  const bool as_if = h_.loop_entry == H::LoopEntry::kLoopIsIf ||
                     (h_.loop_nesting == H::LoopNesting::kIgnoreOuter && info.has_nested_loop);
  Phase entry = loop.kind == LoopKind::kDoWhile ? Phase::kBody : Phase::kCond;
  if (as_if) {
    entry = Phase::kCond;
  } else if (h_.loop_entry == H::LoopEntry::kBodyFirst) {
    entry = Phase::kBody;
  } else if (h_.loop_entry == H::LoopEntry::kUpdateFirst && is_for) {
    entry = Phase::kUpdate;
  }
  auto found = std::find(ring.begin(), ring.end(), entry);
  std::size_t pos = found == ring.end() ? 0 : static_cast<std::size_t>(found - ring.begin());

  const bool counted = h_.body_schedule == H::BodySchedule::kCountedStatements && info.constant_trip;
  const bool recheck = h_.cond_semantics == H::CondSemantics::kRecheckEachStatement;
  const bool inner = loop_depth_ > 0;
  bool first_check = true;
  bool inverted = false;
  bool seeking = false;
  bool skip_body = false;
  int overrun = -1;
  std::size_t bodies = 0;
  std::size_t updates = 0;
  bool init_pending = deferred;

  auto check = [&]() {
    if (cond_view) st.overlay(*cond_view).active = true;
    bool v = loop_cond(s, info);
    if (cond_view) st.overlay(*cond_view).active = false;
    return v;
  };

  // Decides whether a condition result lets the cycle continue.
  auto decide = [&](bool raw) {
    bool first = first_check;
    first_check = false;
    switch (h_.cond_semantics) {
      case H::CondSemantics::kStandard:
      case H::CondSemantics::kRecheckEachStatement: return raw;
      case H::CondSemantics::kExtraIterations:
        if (overrun >= 0) {
          if (overrun == 0) return false;
          --overrun;
          return true;
        }
        if (!raw) overrun = h_.extra_iterations - 1;
        return true;
      case H::CondSemantics::kUntilIfFirstFalse:
        if (first) inverted = !raw;
        return inverted ? !raw : raw;
      case H::CondSemantics::kUntilAlways: return !raw;
      case H::CondSemantics::kIterateUntilTrue:
      case H::CondSemantics::kSkipUntilTrue:
        if (first && !raw) seeking = true;
        if (!seeking) return raw;
        if (raw) {
          seeking = false;
        } else if (h_.cond_semantics == H::CondSemantics::kSkipUntilTrue) {
          skip_body = true;
        }
        return true;
    }
    return raw;
  };

  auto finish = [&](bool normal) {
    phase(s, Phase::kExit);
    pop_views();
    if (normal && h_.loop_post == H::LoopPost::kHaltAfterLoop) halt(s.id, "program ends after the loop");
    return Flow::kNormal;
  };

  while (true) {
    Phase p = ring[pos];
    if (p == Phase::kCond) {
      bool first = first_check;
      bool go = decide(check());
      if (!go) {
        if (first && inner && h_.loop_nesting == H::LoopNesting::kAbandonOuterIteration) {
          finish(false);
          return Flow::kContinued;
        }
        if (h_.loop_post == H::LoopPost::kIterativeIfElse && next) {
          Flow f = exec_stmt(*next, nullptr);
          if (f == Flow::kBroke) return finish(false);
          continue;  // re-check
        }
        return finish(true);
      }
    } else if (p == Phase::kBody) {
      if (skip_body) {
        skip_body = false;
      } else {
        phase(s, Phase::kBody);
        if (body_view) st.overlay(*body_view).active = true;
        ++loop_depth_;
        Flow f = Flow::kNormal;
        bool leave = false;
        const auto& stmts = loop.body.stmts;
        if (counted) {
          if (!stmts.empty()) f = exec_at(stmts, bodies % stmts.size());
        } else if (recheck) {
          for (std::size_t j = 0; j < stmts.size() && f == Flow::kNormal; ++j) {
            f = exec_at(stmts, j);
            if (f != Flow::kNormal) break;
            if (body_view) st.overlay(*body_view).active = false;
            bool ok = check();
            if (body_view) st.overlay(*body_view).active = true;
            if (!ok) {
              leave = true;
              break;
            }
          }
        } else {
          f = exec_list(stmts);
        }
        --loop_depth_;
        if (body_view) st.overlay(*body_view).active = false;
        ++bodies;
        if (f == Flow::kBroke) return finish(false);
        if (leave || as_if) return finish(true);
      }
    } else if (p == Phase::kUpdate) {
      phase(s, Phase::kUpdate);
      if (cond_view) st.overlay(*cond_view).active = true;
      if (init_pending) {
        init_pending = false;
        run_header(loop.init);
      } else {
        run_update(s, loop, updates++);
      }
      if (cond_view) st.overlay(*cond_view).active = false;
      sync_shadow();
    }
    pos = (pos + 1) % ring.size();
  }
}

Flow Machine::exec_unbundled(const Stmt& s, const Loop& loop, const LoopInfo& info) {
  const std::string& ctl = *info.control;
  phase(s, Phase::kInit);
  if (h_.phase_skip != H::PhaseSkip::kInit) run_header(loop.init);

  // Control sequence from the header alone.
  State dry = cx_.state();
  dry.clear_overlays();
  VarReader dry_read = [&](const std::string& n) { return dry.read(n); };
  std::vector<Value> values;
  while (true) {
    if (loop.cond && !eval_expr(*info.cond, dry_read).truthy()) break;
    if (values.size() >= cx_.limits().max_events) throw Stop{ExecStatus::kStepCap, "event limit reached"};
    values.push_back(dry.read(ctl));
    for (const auto& u : loop.update) {
      if (auto a = as<Assign>(*u)) {
        Value v = eval_expr(*a->value, dry_read);
        if (a->op != AssignOp::kSet) {
          Value cur = dry.read(a->target);
          if (!cur.is_int() || !v.is_int()) throw RuntimeFault(ErrorKind::kTypeError, "update needs integers", u->id);
          std::int64_t x = cur.as_int();
          std::int64_t y = v.as_int();
          v = Value::of_int(a->op == AssignOp::kAdd   ? checked_add(x, y)
                            : a->op == AssignOp::kSub ? checked_sub(x, y)
                                                      : checked_mul(x, y));
        }
        dry.set(a->target, v);
      } else if (auto d = as<IncDec>(*u)) {
        Value cur = dry.read(d->target);
        if (!cur.is_int()) throw RuntimeFault(ErrorKind::kTypeError, "++/-- needs an integer", u->id);
        dry.set(d->target, Value::of_int(is_increment(d->form) ? checked_add(cur.as_int(), 1)
                                                               : checked_sub(cur.as_int(), 1)));
      }
    }
  }
  std::optional<Value> final_value = dry.get(ctl);

  ++loop_depth_;
  for (std::size_t j = 0; j < loop.body.stmts.size(); ++j) {
    for (const Value& v : values) {
      cx_.write(s.id, ctl, v);
      phase(s, Phase::kBody);
      Flow f = exec_at(loop.body.stmts, j);
      if (f == Flow::kBroke) {
        --loop_depth_;
        phase(s, Phase::kExit);
        return Flow::kNormal;
      }
    }
  }
  --loop_depth_;
  if (final_value) cx_.write(s.id, ctl, *final_value);
  phase(s, Phase::kExit);
  if (h_.loop_post == H::LoopPost::kHaltAfterLoop) halt(s.id, "program ends after the loop");
  return Flow::kNormal;
}

}  // namespace tracewise::detail
