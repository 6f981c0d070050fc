#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracewise/trace.hpp"
#include "tracewise/value.hpp"

namespace tracewise {

/// Alternative view of some variables, consulted before the real bindings
/// while `active`. A nullopt entry reads as unbound.
struct Overlay {
  std::map<std::string, std::optional<Value>> values;
  bool active = false;

  friend bool operator==(const Overlay&, const Overlay&) = default;
};

class State {
 public:
  /// Reads through active overlays (most recent first), then the variables.
  /// Throws RuntimeFault(uninitialized-read).
  Value read(const std::string& name) const;
  std::optional<Value> get(const std::string& name) const;
  void set(const std::string& name, Value v) { vars_[name] = v; }

  std::size_t push_overlay(Overlay o);
  void pop_overlay();
  Overlay& overlay(std::size_t i) { return overlays_.at(i); }
  std::size_t overlay_count() const { return overlays_.size(); }
  void clear_overlays() { overlays_.clear(); }

  const std::map<std::string, Value>& vars() const { return vars_; }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::map<std::string, Value> vars_;
  std::vector<Overlay> overlays_;
};

class SnapshotError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Terminates a run early with a non-error status.
struct Stop {
  ExecStatus status;
  std::string reason;
};

/// Thrown when the output observer rejects an output.
struct Abandoned {};

struct SnapshotToken {
  std::uint64_t serial = 0;
};

/// Everything one run mutates: state, transcript, event trace, and the
/// snapshot stack used for speculative execution.
class ExecContext {
 public:
  explicit ExecContext(Limits limits, bool record_trace = true)
      : limits_(limits), record_(record_trace) {}

  State& state() { return state_; }
  const State& state() const { return state_; }
  const Limits& limits() const { return limits_; }
  const std::vector<std::string>& transcript() const { return transcript_; }
  std::vector<std::string>& transcript() { return transcript_; }
  const std::vector<Event>& trace() const { return trace_; }
  std::vector<Event>& trace() { return trace_; }
  std::uint64_t event_count() const { return count_; }

  /// Appends an event, or throws Stop{step_cap} if the trace is full.
  void emit(Event e);
  /// Output event plus transcript entry; throws Stop{output_cap} when full.
  void output(NodeId node, std::string text);
  void write(NodeId node, const std::string& name, Value v);

  SnapshotToken snapshot();
  /// Restores variables, overlays and transcript length to the snapshot and
  /// records a RolledBack event. Tokens must be used in LIFO order.
  void restore(SnapshotToken token);
  /// Drops a snapshot without restoring.
  void discard(SnapshotToken token);
  void clear_snapshots() { saved_.clear(); }

  /// Optional observer consulted on each output; returning false stops the
  /// run (used to abandon simulations that already diverged).
  using OutputObserver = bool (*)(void* ctx, std::size_t index, const std::string& text);
  void set_output_observer(OutputObserver fn, void* ctx) {
    observer_ = fn;
    observer_ctx_ = ctx;
  }

 private:
  struct Saved {
    std::uint64_t serial;
    State state;
    std::size_t transcript_size;
    std::uint64_t seq;
  };
  void check_top(SnapshotToken token) const;

  Limits limits_;
  bool record_;
  State state_;
  std::vector<std::string> transcript_;
  std::vector<Event> trace_;
  std::uint64_t count_ = 0;
  std::vector<Saved> saved_;
  std::uint64_t next_serial_ = 1;
  OutputObserver observer_ = nullptr;
  void* observer_ctx_ = nullptr;
};

}  // namespace tracewise
