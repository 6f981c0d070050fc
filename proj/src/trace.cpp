#include "tracewise/trace.hpp"

#include "json.hpp"

namespace tracewise {

using nlohmann::ordered_json;

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kInit: return "init";
    case Phase::kCond: return "cond";
    case Phase::kBody: return "body";
    case Phase::kUpdate: return "update";
    case Phase::kExit: return "exit";
  }
  return "?";
}

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::kCondCheck: return "CondCheck";
    case EventKind::kPhaseEnter: return "PhaseEnter";
    case EventKind::kBranchTaken: return "BranchTaken";
    case EventKind::kOutput: return "Output";
    case EventKind::kVarWrite: return "VarWrite";
    case EventKind::kJump: return "Jump";
    case EventKind::kHalt: return "Halt";
    case EventKind::kRolledBack: return "RolledBack";
  }
  return "?";
}

std::string status_text(ExecStatus s, std::optional<ErrorKind> e) {
  switch (s) {
    case ExecStatus::kCompleted: return "completed";
    case ExecStatus::kStepCap: return "step_cap";
    case ExecStatus::kOutputCap: return "output_cap";
    case ExecStatus::kHaltedByVariant: return "halted_by_variant";
    case ExecStatus::kRuntimeError:
      return "runtime_error(" + std::string(e ? to_string(*e) : "unknown") + ")";
  }
  return "?";
}

std::string status_text(const ExecResult& r) { return status_text(r.status, r.error); }

std::vector<std::string> project_transcript(const std::vector<Event>& trace) {
  std::vector<std::pair<std::uint64_t, std::string>> outputs;
  for (const auto& e : trace) {
    if (e.kind == EventKind::kOutput) {
      outputs.emplace_back(e.seq, e.text);
    } else if (e.kind == EventKind::kRolledBack) {
      while (!outputs.empty() && outputs.back().first >= e.from_seq) outputs.pop_back();
    }
  }
  std::vector<std::string> out;
  out.reserve(outputs.size());
  for (auto& o : outputs) out.push_back(std::move(o.second));
  return out;
}

namespace {

ordered_json value_json(const Value& v) {
  if (v.is_bool()) return v.as_bool();
  return v.as_int();
}

ordered_json payload(const Event& e) {
  switch (e.kind) {
    case EventKind::kCondCheck: return {{"value", value_json(e.value)}};
    case EventKind::kPhaseEnter: return {{"phase", to_string(e.phase)}};
    case EventKind::kBranchTaken:
      if (e.branch < 0) return {{"branch", "else"}};
      return {{"branch", e.branch}};
    case EventKind::kOutput: return {{"text", e.text}};
    case EventKind::kVarWrite: return {{"name", e.text}, {"value", value_json(e.value)}};
    case EventKind::kJump: return {{"jump", e.is_break ? "break" : "continue"}};
    case EventKind::kHalt: return {{"reason", e.text}};
    case EventKind::kRolledBack: return {{"fromSeq", e.from_seq}};
  }
  return ordered_json::object();
}

}  // namespace

std::string trace_jsonl(const std::vector<Event>& trace) {
  std::string out;
  for (const auto& e : trace) {
    ordered_json j;
    j["seq"] = e.seq;
    j["nodeId"] = e.node;
    j["kind"] = to_string(e.kind);
    j["payload"] = payload(e);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string transcript_json(const std::vector<std::string>& transcript) {
  return ordered_json(transcript).dump();
}

}  // namespace tracewise
