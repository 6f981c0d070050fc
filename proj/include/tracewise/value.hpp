#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tracewise/ast.hpp"

namespace tracewise {

enum class ErrorKind { kUninitializedRead, kDivByZero, kOverflow, kTypeError };

std::string_view to_string(ErrorKind kind);

/// Raised inside the interpreter; the run boundary turns it into a status.
class RuntimeFault : public std::runtime_error {
 public:
  RuntimeFault(ErrorKind kind, const std::string& message, NodeId node = 0)
      : std::runtime_error(message), kind_(kind), node_(node) {}
  ErrorKind kind() const { return kind_; }
  NodeId node() const { return node_; }

 private:
  ErrorKind kind_;
  NodeId node_;
};

class Value {
 public:
  Value() = default;
  static Value of_int(std::int64_t v) { return Value(v); }
  static Value of_bool(bool b) { return Value(b); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  /// Nonzero integers and `true` are true.
  bool truthy() const { return is_bool() ? as_bool() : as_int() != 0; }
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  explicit Value(std::int64_t v) : v_(v) {}
  explicit Value(bool b) : v_(b) {}
  std::variant<std::int64_t, bool> v_{std::int64_t{0}};
};

/// Variable lookup used by evaluation; throws RuntimeFault when unbound.
using VarReader = std::function<Value(const std::string&)>;

/// Strict evaluation with short-circuit && and ||.
Value eval_expr(const Expr& expr, const VarReader& read);

/// Checked arithmetic shared with the interpreter's compound assignments.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace tracewise
