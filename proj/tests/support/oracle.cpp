#include "oracle.hpp"

#include <limits>
#include <map>
#include <optional>

namespace oracle {

using namespace tracewise;

namespace {

struct Val {
  bool boolean = false;
  std::int64_t n = 0;
  bool b = false;

  bool truth() const { return boolean ? b : n != 0; }
  Value lib() const { return boolean ? Value::of_bool(b) : Value::of_int(n); }
  std::string text() const { return boolean ? (b ? "true" : "false") : std::to_string(n); }
};

struct Fault {
  std::string kind;
};
struct Cap {
  std::string status;
};
enum class Jump { kNone, kBreak, kContinue };

class Interp {
 public:
  explicit Interp(Limits l) : limits_(l) {}

  Result run(const Program& p) {
    Result r;
    try {
      for (const auto& s : p.statements) exec(*s);
      r.status = "completed";
    } catch (const Fault& f) {
      r.status = "runtime_error(" + f.kind + ")";
    } catch (const Cap& c) {
      r.status = c.status;
    }
    r.transcript = out_;
    r.trace = trace_;
    return r;
  }

 private:
  void event(Event e) {
    if (trace_.size() >= limits_.max_events) throw Cap{"step_cap"};
    e.seq = trace_.size();
    trace_.push_back(std::move(e));
  }

  static std::int64_t num(const Val& v) {
    if (v.boolean) throw Fault{"type-error"};
    return v.n;
  }

  static Val I(std::int64_t n) { return Val{false, n, false}; }
  static Val B(bool b) { return Val{true, 0, b}; }

  Val eval(const Expr& e) {
    if (auto x = as<IntLit>(e)) return I(x->value);
    if (auto x = as<BoolLit>(e)) return B(x->value);
    if (auto x = as<VarRef>(e)) {
      auto it = vars_.find(x->name);
      if (it == vars_.end()) throw Fault{"uninitialized-read"};
      return it->second;
    }
    if (auto u = as<Unary>(e)) {
      Val v = eval(*u->operand);
      if (u->op == UnaryOp::kNot) return B(!v.truth());
      std::int64_t n = num(v);
      if (n == std::numeric_limits<std::int64_t>::min()) throw Fault{"overflow"};
      return I(-n);
    }
    const auto& b = std::get<Binary>(e.node);
    if (b.op == BinaryOp::kAnd) return B(eval(*b.lhs).truth() && eval(*b.rhs).truth());
    if (b.op == BinaryOp::kOr) return B(eval(*b.lhs).truth() || eval(*b.rhs).truth());
    Val l = eval(*b.lhs);
    Val r = eval(*b.rhs);
    if (b.op == BinaryOp::kEq || b.op == BinaryOp::kNe) {
      if (l.boolean != r.boolean) throw Fault{"type-error"};
      bool same = l.boolean ? l.b == r.b : l.n == r.n;
      return B(b.op == BinaryOp::kEq ? same : !same);
    }
    std::int64_t x = num(l);
    std::int64_t y = num(r);
    return arith(b.op, x, y);
  }

  static Val arith(BinaryOp op, std::int64_t x, std::int64_t y) {
    std::int64_t out = 0;
    switch (op) {
      case BinaryOp::kAdd:
        if (__builtin_add_overflow(x, y, &out)) throw Fault{"overflow"};
        return I(out);
      case BinaryOp::kSub:
        if (__builtin_sub_overflow(x, y, &out)) throw Fault{"overflow"};
        return I(out);
      case BinaryOp::kMul:
        if (__builtin_mul_overflow(x, y, &out)) throw Fault{"overflow"};
        return I(out);
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (y == 0) throw Fault{"div-by-zero"};
        if (x == std::numeric_limits<std::int64_t>::min() && y == -1) throw Fault{"overflow"};
        return I(op == BinaryOp::kDiv ? x / y : x % y);
      case BinaryOp::kLt: return B(x < y);
      case BinaryOp::kLe: return B(x <= y);
      case BinaryOp::kGt: return B(x > y);
      case BinaryOp::kGe: return B(x >= y);
      default: return I(0);
    }
  }

  void assign(const Stmt& s, const std::string& name, Val v) {
    Event e;
    e.node = s.id;
    e.kind = EventKind::kVarWrite;
    e.text = name;
    e.value = v.lib();
    event(std::move(e));
    vars_[name] = v;
  }

  Val current(const std::string& name) {
    auto it = vars_.find(name);
    if (it == vars_.end()) throw Fault{"uninitialized-read"};
    return it->second;
  }

  void simple(const Stmt& s) {
    if (auto a = as<Assign>(s)) {
      Val v = eval(*a->value);
      switch (a->op) {
        case AssignOp::kSet: break;
        case AssignOp::kAdd: v = arith(BinaryOp::kAdd, num(current(a->target)), num(v)); break;
        case AssignOp::kSub: v = arith(BinaryOp::kSub, num(current(a->target)), num(v)); break;
        case AssignOp::kMul: v = arith(BinaryOp::kMul, num(current(a->target)), num(v)); break;
      }
      assign(s, a->target, v);
    } else if (auto d = as<IncDec>(s)) {
      std::int64_t n = num(current(d->target));
      assign(s, d->target, arith(is_increment(d->form) ? BinaryOp::kAdd : BinaryOp::kSub, n, 1));
    }
  }

  Jump block(const std::vector<StmtPtr>& list) {
    for (const auto& s : list) {
      Jump j = exec(*s);
      if (j != Jump::kNone) return j;
    }
    return Jump::kNone;
  }

  void phase(const Stmt& s, Phase p) {
    Event e;
    e.node = s.id;
    e.kind = EventKind::kPhaseEnter;
    e.phase = p;
    event(std::move(e));
  }

  bool test(const Stmt& s, const Expr* cond, int branch) {
    Val v = cond ? eval(*cond) : B(true);
    Event e;
    e.node = s.id;
    e.kind = EventKind::kCondCheck;
    e.value = v.lib();
    e.branch = branch;
    event(std::move(e));
    return v.truth();
  }

  Jump exec(const Stmt& s) {
    if (as<Assign>(s) || as<IncDec>(s)) {
      simple(s);
      return Jump::kNone;
    }
    if (auto p = as<Print>(s)) {
      std::string line;
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (i > 0) line += " ";
        if (auto str = std::get_if<std::string>(&p->args[i])) {
          line += *str;
        } else {
          line += eval(*std::get<ExprPtr>(p->args[i])).text();
        }
      }
      if (out_.size() >= limits_.max_outputs) throw Cap{"output_cap"};
      Event e;
      e.node = s.id;
      e.kind = EventKind::kOutput;
      e.text = line;
      event(std::move(e));
      out_.push_back(line);
      return Jump::kNone;
    }
    if (auto i = as<If>(s)) {
      for (std::size_t k = 0; k < i->branches.size(); ++k) {
        if (test(s, i->branches[k].cond.get(), static_cast<int>(k))) return take(s, static_cast<int>(k), i->branches[k].body);
      }
      if (i->else_body) return take(s, -1, *i->else_body);
      return Jump::kNone;
    }
    if (auto l = as<Loop>(s)) return loop(s, *l);
    if (as<Break>(s) || as<Continue>(s)) {
      Event e;
      e.node = s.id;
      e.kind = EventKind::kJump;
      bool brk = as<Break>(s) != nullptr;
      e.is_break = brk;
      event(std::move(e));
      return brk ? Jump::kBreak : Jump::kContinue;
    }
    if (auto b = as<Block>(s)) return block(b->stmts);
    return Jump::kNone;
  }

  Jump take(const Stmt& s, int branch, const Body& body) {
    Event e;
    e.node = s.id;
    e.kind = EventKind::kBranchTaken;
    e.branch = branch;
    event(std::move(e));
    return block(body.stmts);
  }

  Jump loop(const Stmt& s, const Loop& l) {
    switch (l.kind) {
      case LoopKind::kWhile:
        while (test(s, l.cond.get(), 0)) {
          phase(s, Phase::kBody);
          if (block(l.body.stmts) == Jump::kBreak) break;
        }
        break;
      case LoopKind::kDoWhile:
        do {
          phase(s, Phase::kBody);
          if (block(l.body.stmts) == Jump::kBreak) break;
        } while (test(s, l.cond.get(), 0));
        break;
      case LoopKind::kFor:
        phase(s, Phase::kInit);
        for (const auto& x : l.init) simple(*x);
        while (test(s, l.cond.get(), 0)) {
          phase(s, Phase::kBody);
          if (block(l.body.stmts) == Jump::kBreak) break;
          phase(s, Phase::kUpdate);
          for (const auto& x : l.update) simple(*x);
        }
        break;
    }
    phase(s, Phase::kExit);
    return Jump::kNone;
  }

  Limits limits_;
  std::map<std::string, Val> vars_;
  std::vector<std::string> out_;
  std::vector<Event> trace_;
};

}  // namespace

Result run(const Program& program, const Limits& limits) { return Interp(limits).run(program); }

}  // namespace oracle
