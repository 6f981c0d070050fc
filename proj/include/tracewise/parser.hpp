#pragma once

#include <string_view>

#include "tracewise/ast.hpp"

namespace tracewise {

/// Parses a minilang source file. Throws SyntaxError with the offending
/// location. `else` binds to the nearest `if`; else-if chains become one If
/// node. `for` headers accept comma-separated init/update lists so that
/// rewritten programs can be printed and re-read.
Program parse(std::string_view source);

}  // namespace tracewise
