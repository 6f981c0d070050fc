#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracewise/ast.hpp"
#include "tracewise/value.hpp"

namespace tracewise {

enum class Phase { kInit, kCond, kBody, kUpdate, kExit };
std::string_view to_string(Phase p);

enum class EventKind { kCondCheck, kPhaseEnter, kBranchTaken, kOutput, kVarWrite, kJump, kHalt, kRolledBack };
std::string_view to_string(EventKind k);

/// One step of an execution. Only the fields relevant to `kind` are set:
///   CondCheck   value
///   PhaseEnter  phase
///   BranchTaken branch (-1 for else)
///   Output      text
///   VarWrite    text (name), value
///   Jump        is_break
///   Halt        text (reason)
///   RolledBack  from_seq
struct Event {
  std::uint64_t seq = 0;
  NodeId node = 0;
  EventKind kind = EventKind::kOutput;
  Value value;
  Phase phase = Phase::kInit;
  int branch = 0;
  std::string text;
  bool is_break = false;
  std::uint64_t from_seq = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Limits {
  std::uint64_t max_events = 10000;
  std::uint64_t max_outputs = 1000;

  friend bool operator==(const Limits&, const Limits&) = default;
};

enum class ExecStatus { kCompleted, kStepCap, kOutputCap, kHaltedByVariant, kRuntimeError };

struct ExecResult {
  std::vector<std::string> transcript;
  std::vector<Event> trace;  // empty when trace recording was off
  std::uint64_t event_count = 0;
  ExecStatus status = ExecStatus::kCompleted;
  std::optional<ErrorKind> error;
  std::string message;
  bool abandoned = false;  // stopped early by an output observer

  bool capped() const { return status == ExecStatus::kStepCap || status == ExecStatus::kOutputCap; }
};

/// "completed", "step_cap", ..., "runtime_error(div-by-zero)".
std::string status_text(const ExecResult& r);
std::string status_text(ExecStatus s, std::optional<ErrorKind> e = std::nullopt);

/// Output texts of the trace, excluding rolled-back segments.
std::vector<std::string> project_transcript(const std::vector<Event>& trace);

/// JSON lines: {"seq","nodeId","kind","payload"} per event.
std::string trace_jsonl(const std::vector<Event>& trace);
/// JSON array of strings.
std::string transcript_json(const std::vector<std::string>& transcript);

}  // namespace tracewise
