#include "tracewise/state.hpp"

namespace tracewise {

Value State::read(const std::string& name) const {
  for (auto it = overlays_.rbegin(); it != overlays_.rend(); ++it) {
    if (!it->active) continue;
    auto found = it->values.find(name);
    if (found == it->values.end()) continue;
    if (!found->second) break;
    return *found->second;
  }
  auto it = vars_.find(name);
  if (it == vars_.end()) throw RuntimeFault(ErrorKind::kUninitializedRead, "read of unbound variable " + name);
  return it->second;
}

std::optional<Value> State::get(const std::string& name) const {
  auto it = vars_.find(name);
  if (it == vars_.end()) return std::nullopt;
  return it->second;
}

std::size_t State::push_overlay(Overlay o) {
  overlays_.push_back(std::move(o));
  return overlays_.size() - 1;
}

void State::pop_overlay() { overlays_.pop_back(); }

void ExecContext::emit(Event e) {
  if (count_ >= limits_.max_events) throw Stop{ExecStatus::kStepCap, "event limit reached"};
  e.seq = count_++;
  if (record_) trace_.push_back(std::move(e));
}

void ExecContext::output(NodeId node, std::string text) {
  if (transcript_.size() >= limits_.max_outputs) throw Stop{ExecStatus::kOutputCap, "output limit reached"};
  Event e;
  e.node = node;
  e.kind = EventKind::kOutput;
  e.text = text;
  emit(std::move(e));
  transcript_.push_back(std::move(text));
  if (observer_ && saved_.empty() && !observer_(observer_ctx_, transcript_.size() - 1, transcript_.back()))
    throw Abandoned{};
}

void ExecContext::write(NodeId node, const std::string& name, Value v) {
  Event e;
  e.node = node;
  e.kind = EventKind::kVarWrite;
  e.text = name;
  e.value = v;
  emit(std::move(e));
  state_.set(name, v);
}

SnapshotToken ExecContext::snapshot() {
  SnapshotToken t{next_serial_++};
  saved_.push_back(Saved{t.serial, state_, transcript_.size(), count_});
  return t;
}

void ExecContext::check_top(SnapshotToken token) const {
  if (saved_.empty() || saved_.back().serial != token.serial)
    throw SnapshotError("stale snapshot token");
}

void ExecContext::restore(SnapshotToken token) {
  check_top(token);
  Saved s = std::move(saved_.back());
  saved_.pop_back();
  state_ = std::move(s.state);
  transcript_.resize(s.transcript_size);
  Event e;
  e.kind = EventKind::kRolledBack;
  e.from_seq = s.seq;
  emit(std::move(e));
}

void ExecContext::discard(SnapshotToken token) {
  check_top(token);
  saved_.pop_back();
}

}  // namespace tracewise
