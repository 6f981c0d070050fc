#pragma once

#include "tracewise/ast.hpp"
#include "tracewise/hooks.hpp"
#include "tracewise/state.hpp"
#include "tracewise/trace.hpp"

namespace tracewise {

struct RunOptions {
  bool record_trace = true;
  /// See ExecContext::set_output_observer. A rejected output ends the run and
  /// sets ExecResult::abandoned.
  ExecContext::OutputObserver observer = nullptr;
  void* observer_ctx = nullptr;
};

/// Reference semantics. Never throws for runtime problems; they end up in the
/// result status.
ExecResult run_reference(const Program& program, const Limits& limits = {});

/// Runs `program` with the given runtime hooks installed.
ExecResult execute(const Program& program, const HookTable& hooks, const Limits& limits,
                   const RunOptions& options = {});

}  // namespace tracewise
