#include "machine_impl.hpp"

#include "tracewise/features.hpp"

namespace tracewise {
namespace detail {

Machine::Machine(const Program& program, const HookTable& hooks, ExecContext& cx)
    : program_(program), h_(hooks), cx_(cx) {
  reader_ = [this](const std::string& name) { return cx_.state().read(name); };
}

void Machine::run() {
  if (h_.sel_trigger == HookTable::SelTrigger::kWholeProgram) {
    walk(program_.statements, [&](const Stmt& s) {
      if (auto i = as<If>(s); i && is_simple_if(*i)) watchers_.push_back(&s);
    });
  }
  while (true) {
    try {
      // Jumps that escape every loop are dropped.
      for (std::size_t i = 0; i < program_.statements.size(); ++i) exec_at(program_.statements, i);
      return;
    } catch (const RestartProgram&) {
      cx_.state().clear_overlays();
      cx_.clear_snapshots();
      loop_depth_ = 0;
      shadow_depth_ = 0;
      in_watcher_ = false;
    }
  }
}

Flow Machine::exec_list(const std::vector<StmtPtr>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    Flow f = exec_at(list, i);
    if (f != Flow::kNormal) return f;
  }
  return Flow::kNormal;
}

Flow Machine::exec_at(const std::vector<StmtPtr>& list, std::size_t index) {
  const Stmt* next = index + 1 < list.size() ? list[index + 1].get() : nullptr;
  return exec_stmt(*list[index], next);
}

Flow Machine::exec_stmt(const Stmt& s, const Stmt* next) {
  Flow f = Flow::kNormal;
  switch (s.node.index()) {
    case 0:  // Assign
    case 1:  // IncDec
      exec_simple(s);
      break;
    case 2: exec_print(s, std::get<Print>(s.node)); break;
    case 3: f = exec_if(s, std::get<If>(s.node)); break;
    case 4: f = exec_loop(s, std::get<Loop>(s.node), next); break;
    case 5: f = exec_break(s); break;
    case 6: f = exec_continue(s); break;
    case 7: f = exec_list(std::get<Block>(s.node).stmts); break;
  }
  if (!watchers_.empty()) check_watchers();
  return f;
}

void Machine::exec_simple(const Stmt& s) {
  try {
    if (auto a = as<Assign>(s)) {
      Value v = eval(*a->value);
      if (a->op != AssignOp::kSet) {
        Value cur = read(a->target);
        if (!cur.is_int() || !v.is_int())
          throw RuntimeFault(ErrorKind::kTypeError, "operator " + std::string(op_text(a->op)) + " needs integers");
        std::int64_t x = cur.as_int();
        std::int64_t y = v.as_int();
        v = Value::of_int(a->op == AssignOp::kAdd   ? checked_add(x, y)
                          : a->op == AssignOp::kSub ? checked_sub(x, y)
                                                    : checked_mul(x, y));
      }
      cx_.write(s.id, a->target, v);
    } else if (auto d = as<IncDec>(s)) {
      Value cur = read(d->target);
      if (!cur.is_int()) throw RuntimeFault(ErrorKind::kTypeError, "++/-- needs an integer");
      std::int64_t n = is_increment(d->form) ? checked_add(cur.as_int(), 1) : checked_sub(cur.as_int(), 1);
      cx_.write(s.id, d->target, Value::of_int(n));
    }
  } catch (const RuntimeFault& f) {
    if (f.node() == 0) throw RuntimeFault(f.kind(), f.what(), s.id);
    throw;
  }
}

void Machine::exec_print(const Stmt& s, const Print& p) {
  std::string text;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (i) text += ' ';
    if (auto str = std::get_if<std::string>(&p.args[i])) {
      text += *str;
    } else {
      text += eval(*std::get<ExprPtr>(p.args[i])).to_string();
    }
  }
  if (shadow_depth_ > 0) return;
  cx_.output(s.id, std::move(text));
}

Flow Machine::exec_break(const Stmt& s) {
  Event e;
  e.node = s.id;
  e.kind = EventKind::kJump;
  switch (h_.break_mode) {
    case HookTable::BreakMode::kStandard:
      e.is_break = true;
      cx_.emit(std::move(e));
      return Flow::kBroke;
    case HookTable::BreakMode::kAsContinue:
      e.is_break = false;
      cx_.emit(std::move(e));
      return Flow::kContinued;
    case HookTable::BreakMode::kHalt: halt(s.id, "break ends the program");
    case HookTable::BreakMode::kIgnore: return Flow::kNormal;
  }
  return Flow::kNormal;
}

Flow Machine::exec_continue(const Stmt& s) {
  if (h_.continue_mode == HookTable::ContinueMode::kIgnore) return Flow::kNormal;
  Event e;
  e.node = s.id;
  e.kind = EventKind::kJump;
  e.is_break = false;
  cx_.emit(std::move(e));
  return Flow::kContinued;
}

void Machine::halt(NodeId node, const std::string& reason) {
  Event e;
  e.node = node;
  e.kind = EventKind::kHalt;
  e.text = reason;
  cx_.emit(std::move(e));
  throw Stop{ExecStatus::kHaltedByVariant, reason};
}

}  // namespace detail

ExecResult execute(const Program& program, const HookTable& hooks, const Limits& limits,
                   const RunOptions& options) {
  ExecContext cx(limits, options.record_trace);
  if (options.observer) cx.set_output_observer(options.observer, options.observer_ctx);
  ExecResult r;
  try {
    detail::Machine m(program, hooks, cx);
    m.run();
    r.status = ExecStatus::kCompleted;
  } catch (const Stop& s) {
    r.status = s.status;
    r.message = s.reason;
  } catch (const RuntimeFault& f) {
    r.status = ExecStatus::kRuntimeError;
    r.error = f.kind();
    r.message = f.what();
  } catch (const Abandoned&) {
    r.status = ExecStatus::kHaltedByVariant;
    r.abandoned = true;
    r.message = "abandoned";
  }
  r.transcript = std::move(cx.transcript());
  r.trace = std::move(cx.trace());
  r.event_count = cx.event_count();
  return r;
}

ExecResult run_reference(const Program& program, const Limits& limits) {
  static const HookTable kReference;
  return execute(program, kReference, limits);
}

}  // namespace tracewise
