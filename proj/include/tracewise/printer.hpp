#pragma once

#include <string>

#include "tracewise/ast.hpp"

namespace tracewise {

/// Canonical source text. parse(pretty_print(p)) is structurally equal to p.
std::string pretty_print(const Program& program);
std::string pretty_print(const Expr& expr);
std::string pretty_print(const Stmt& stmt);

/// String literal with quotes and escapes.
std::string quote_string(const std::string& text);

}  // namespace tracewise
