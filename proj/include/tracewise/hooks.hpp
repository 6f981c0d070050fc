#pragma once

#include <cstdint>

namespace tracewise {

/// Runtime decision points of the interpreter. A default-constructed table
/// yields the reference semantics; each field is overridden by at most one
/// active variant.
struct HookTable {
  enum class BranchSelect {
    kStandard,
    kAllBranches,
    kForced,
    kAllTrue,
    kStopAtFirstFalse,
    kNegated,
    kElseAlways,
    kPermuted,
    kRecheckForElse,
    kIgnoreInLoops,
  };
  enum class SelPost { kNone, kRestart, kHalt };
  enum class SelRepeat { kNone, kUntilFalse, kFixedTimes };
  enum class SelTrigger { kNone, kWatchAfter, kWholeProgram };
  enum class SelCondEval { kNone, kHindsight, kShadowToEnd, kShadowWhileTrue, kShadowRestart };
  enum class LoopEntry { kStandard, kBodyFirst, kDeferredInit, kLoopIsIf, kUpdateFirst };
  enum class LoopCycle { kStandard, kUpdateBeforeBody, kUpdateBeforeBodyPrefixOnly };
  enum class PhaseSkip { kNone, kBody, kCond, kUpdate, kInit };
  enum class CondSemantics {
    kStandard,
    kRecheckEachStatement,
    kExtraIterations,
    kUntilIfFirstFalse,
    kUntilAlways,
    kIterateUntilTrue,
    kSkipUntilTrue,
  };
  enum class LoopCondEval { kStandard, kSwapStrictness, kSwapDirection };
  enum class BodySchedule { kStandard, kCountedStatements, kUnbundled };
  enum class UpdateSemantics { kStandard, kAlternatingSign, kUnitStep, kDoubleStep };
  enum class StateView { kNone, kShadowConditionControl, kFrozenBodyControl, kFrozenLoopState };
  enum class LoopPost { kNone, kHaltAfterLoop, kIterativeIfElse };
  enum class LoopNesting { kNone, kIgnoreOuter, kAbandonOuterIteration };
  enum class BreakMode { kStandard, kAsContinue, kHalt, kIgnore };
  enum class ContinueMode { kStandard, kIgnore };

  BranchSelect branch_select = BranchSelect::kStandard;
  int forced_branch = -1;  // -1: else if present, otherwise the first branch
  int chain_order = 0;     // 0 reverse, 1 rotate left, 2 rotate right
  SelPost sel_post = SelPost::kNone;
  SelRepeat sel_repeat = SelRepeat::kNone;
  int repeat_times = 2;
  SelTrigger sel_trigger = SelTrigger::kNone;
  SelCondEval sel_cond_eval = SelCondEval::kNone;

  LoopEntry loop_entry = LoopEntry::kStandard;
  LoopCycle loop_cycle = LoopCycle::kStandard;
  PhaseSkip phase_skip = PhaseSkip::kNone;
  CondSemantics cond_semantics = CondSemantics::kStandard;
  int extra_iterations = 1;
  LoopCondEval loop_cond_eval = LoopCondEval::kStandard;
  BodySchedule body_schedule = BodySchedule::kStandard;
  UpdateSemantics update = UpdateSemantics::kStandard;
  StateView state_view = StateView::kNone;
  LoopPost loop_post = LoopPost::kNone;
  LoopNesting loop_nesting = LoopNesting::kNone;
  BreakMode break_mode = BreakMode::kStandard;
  ContinueMode continue_mode = ContinueMode::kStandard;

  friend bool operator==(const HookTable&, const HookTable&) = default;
};

}  // namespace tracewise
