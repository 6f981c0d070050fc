#pragma once

#include <string>
#include <vector>

#include "tracewise/ast.hpp"
#include "tracewise/trace.hpp"

namespace oracle {

struct Result {
  std::vector<std::string> transcript;
  std::vector<tracewise::Event> trace;
  std::string status;
};

/// Straightforward recursive interpreter for correct semantics, written
/// separately from the phase machine. Emits the same event vocabulary so that
/// traces can be compared event by event.
Result run(const tracewise::Program& program, const tracewise::Limits& limits = {});

}  // namespace oracle
