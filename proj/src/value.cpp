#include "tracewise/value.hpp"

#include <limits>

namespace tracewise {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUninitializedRead: return "uninitialized-read";
    case ErrorKind::kDivByZero: return "div-by-zero";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kTypeError: return "type-error";
  }
  return "?";
}

std::string Value::to_string() const {
  if (is_bool()) return as_bool() ? "true" : "false";
  return std::to_string(as_int());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw RuntimeFault(ErrorKind::kOverflow, "integer overflow in +");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw RuntimeFault(ErrorKind::kOverflow, "integer overflow in -");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw RuntimeFault(ErrorKind::kOverflow, "integer overflow in *");
  return r;
}

namespace {

std::int64_t want_int(const Value& v, const Expr& e, std::string_view op) {
  if (!v.is_int())
    throw RuntimeFault(ErrorKind::kTypeError, "operator " + std::string(op) + " needs integers", e.id);
  return v.as_int();
}

Value binary(const Binary& b, const Expr& e, const VarReader& read) {
  if (b.op == BinaryOp::kAnd) {
    if (!eval_expr(*b.lhs, read).truthy()) return Value::of_bool(false);
    return Value::of_bool(eval_expr(*b.rhs, read).truthy());
  }
  if (b.op == BinaryOp::kOr) {
    if (eval_expr(*b.lhs, read).truthy()) return Value::of_bool(true);
    return Value::of_bool(eval_expr(*b.rhs, read).truthy());
  }
  Value l = eval_expr(*b.lhs, read);
  Value r = eval_expr(*b.rhs, read);
  std::string_view op = op_text(b.op);
  if (b.op == BinaryOp::kEq || b.op == BinaryOp::kNe) {
    if (l.is_int() != r.is_int())
      throw RuntimeFault(ErrorKind::kTypeError, "comparing integer with boolean", e.id);
    return Value::of_bool((l == r) == (b.op == BinaryOp::kEq));
  }
  std::int64_t x = want_int(l, e, op);
  std::int64_t y = want_int(r, e, op);
  try {
    switch (b.op) {
      case BinaryOp::kAdd: return Value::of_int(checked_add(x, y));
      case BinaryOp::kSub: return Value::of_int(checked_sub(x, y));
      case BinaryOp::kMul: return Value::of_int(checked_mul(x, y));
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (y == 0) throw RuntimeFault(ErrorKind::kDivByZero, "division by zero", e.id);
        if (x == std::numeric_limits<std::int64_t>::min() && y == -1)
          throw RuntimeFault(ErrorKind::kOverflow, "integer overflow in " + std::string(op), e.id);
        return Value::of_int(b.op == BinaryOp::kDiv ? x / y : x % y);
      case BinaryOp::kLt: return Value::of_bool(x < y);
      case BinaryOp::kLe: return Value::of_bool(x <= y);
      case BinaryOp::kGt: return Value::of_bool(x > y);
      case BinaryOp::kGe: return Value::of_bool(x >= y);
      default: break;
    }
  } catch (const RuntimeFault& f) {
    if (f.node() == 0) throw RuntimeFault(f.kind(), f.what(), e.id);
    throw;
  }
  return Value();
}

}  // namespace

Value eval_expr(const Expr& e, const VarReader& read) {
  switch (e.node.index()) {
    case 0: return Value::of_int(std::get<IntLit>(e.node).value);
    case 1: return Value::of_bool(std::get<BoolLit>(e.node).value);
    case 2: return read(std::get<VarRef>(e.node).name);
    case 3: {
      const auto& u = std::get<Unary>(e.node);
      Value v = eval_expr(*u.operand, read);
      if (u.op == UnaryOp::kNot) return Value::of_bool(!v.truthy());
      std::int64_t x = want_int(v, e, "-");
      if (x == std::numeric_limits<std::int64_t>::min())
        throw RuntimeFault(ErrorKind::kOverflow, "integer overflow in unary -", e.id);
      return Value::of_int(-x);
    }
    default: return binary(std::get<Binary>(e.node), e, read);
  }
}

}  // namespace tracewise
