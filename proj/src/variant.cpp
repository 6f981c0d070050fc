#include "tracewise/variant.hpp"

#include <functional>
#include <unordered_map>

#include "tracewise/rewrite.hpp"

namespace tracewise {

namespace {

using H = HookTable;
using Install = std::function<void(const ParamMap&, H&)>;

std::int64_t param(const ParamMap& p, const char* name, std::int64_t def) {
  auto it = p.find(name);
  return it == p.end() ? def : it->second;
}

const std::unordered_map<std::string, Install>& hook_table() {
  static const std::unordered_map<std::string, Install> table = {
      {"SEL.1.a.i", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kAllBranches; }},
      {"SEL.1.a.ii",
       [](const ParamMap& p, H& h) {
         h.branch_select = H::BranchSelect::kForced;
         h.forced_branch = static_cast<int>(param(p, "branch", -1));
       }},
      {"SEL.1.b.i", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kAllTrue; }},
      {"SEL.1.b.ii", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kStopAtFirstFalse; }},
      {"SEL.1.c", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kNegated; }},
      {"SEL.3.b.i", [](const ParamMap&, H& h) { h.sel_post = H::SelPost::kRestart; }},
      {"SEL.3.b.ii", [](const ParamMap&, H& h) { h.sel_post = H::SelPost::kHalt; }},
      {"SEL.3.c.i", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kElseAlways; }},
      {"SEL.4.a.ii.A", [](const ParamMap&, H& h) { h.sel_repeat = H::SelRepeat::kUntilFalse; }},
      {"SEL.4.a.ii.B",
       [](const ParamMap& p, H& h) {
         h.sel_repeat = H::SelRepeat::kFixedTimes;
         h.repeat_times = static_cast<int>(param(p, "n", 2));
       }},
      {"SEL.4.b.i", [](const ParamMap&, H& h) { h.sel_trigger = H::SelTrigger::kWatchAfter; }},
      {"SEL.4.b.ii", [](const ParamMap&, H& h) { h.sel_trigger = H::SelTrigger::kWholeProgram; }},
      {"SEL.4.c.i", [](const ParamMap&, H& h) { h.sel_cond_eval = H::SelCondEval::kHindsight; }},
      {"SEL.4.c.ii.A.I", [](const ParamMap&, H& h) { h.sel_cond_eval = H::SelCondEval::kShadowToEnd; }},
      {"SEL.4.c.ii.A.II", [](const ParamMap&, H& h) { h.sel_cond_eval = H::SelCondEval::kShadowWhileTrue; }},
      {"SEL.4.c.ii.B", [](const ParamMap&, H& h) { h.sel_cond_eval = H::SelCondEval::kShadowRestart; }},
      {"SEL.4.d.i",
       [](const ParamMap& p, H& h) {
         h.branch_select = H::BranchSelect::kPermuted;
         h.chain_order = static_cast<int>(param(p, "order", 0));
       }},
      {"SEL.4.d.ii.A", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kRecheckForElse; }},
      {"SEL.5.b", [](const ParamMap&, H& h) { h.branch_select = H::BranchSelect::kIgnoreInLoops; }},

      {"ITER.1.b", [](const ParamMap&, H& h) { h.loop_entry = H::LoopEntry::kLoopIsIf; }},
      {"ITER.1.d", [](const ParamMap&, H& h) { h.body_schedule = H::BodySchedule::kCountedStatements; }},
      {"ITER.2.b.i", [](const ParamMap&, H& h) { h.loop_post = H::LoopPost::kHaltAfterLoop; }},
      {"ITER.2.b.ii", [](const ParamMap&, H& h) { h.loop_post = H::LoopPost::kIterativeIfElse; }},
      {"ITER.3.a.i", [](const ParamMap&, H& h) { h.phase_skip = H::PhaseSkip::kBody; }},
      {"ITER.3.a.ii", [](const ParamMap&, H& h) { h.loop_entry = H::LoopEntry::kBodyFirst; }},
      {"ITER.3.a.iii", [](const ParamMap&, H& h) { h.phase_skip = H::PhaseSkip::kCond; }},
      {"ITER.3.a.iv", [](const ParamMap&, H& h) { h.phase_skip = H::PhaseSkip::kUpdate; }},
      {"ITER.3.a.v", [](const ParamMap&, H& h) { h.phase_skip = H::PhaseSkip::kInit; }},
      {"ITER.3.b.i", [](const ParamMap&, H& h) { h.loop_entry = H::LoopEntry::kDeferredInit; }},
      {"ITER.3.b.ii.A", [](const ParamMap&, H& h) { h.loop_cycle = H::LoopCycle::kUpdateBeforeBody; }},
      {"ITER.3.b.ii.B", [](const ParamMap&, H& h) { h.loop_cycle = H::LoopCycle::kUpdateBeforeBodyPrefixOnly; }},
      {"ITER.3.b.iii", [](const ParamMap&, H& h) { h.loop_entry = H::LoopEntry::kUpdateFirst; }},
      {"ITER.3.b.iv", [](const ParamMap&, H& h) { h.cond_semantics = H::CondSemantics::kRecheckEachStatement; }},
      {"ITER.3.b.v", [](const ParamMap&, H& h) { h.body_schedule = H::BodySchedule::kUnbundled; }},
      {"ITER.4.a.i.A", [](const ParamMap&, H& h) { h.update = H::UpdateSemantics::kAlternatingSign; }},
      {"ITER.4.a.i.B", [](const ParamMap&, H& h) { h.update = H::UpdateSemantics::kUnitStep; }},
      {"ITER.4.a.i.C", [](const ParamMap&, H& h) { h.update = H::UpdateSemantics::kDoubleStep; }},
      {"ITER.4.a.ii.A", [](const ParamMap&, H& h) { h.state_view = H::StateView::kShadowConditionControl; }},
      {"ITER.4.a.ii.B", [](const ParamMap&, H& h) { h.state_view = H::StateView::kFrozenBodyControl; }},
      {"ITER.4.b", [](const ParamMap&, H& h) { h.state_view = H::StateView::kFrozenLoopState; }},
      {"ITER.5.a.i",
       [](const ParamMap& p, H& h) {
         h.cond_semantics = H::CondSemantics::kExtraIterations;
         h.extra_iterations = static_cast<int>(param(p, "k", 1));
       }},
      {"ITER.5.a.ii.A", [](const ParamMap&, H& h) { h.cond_semantics = H::CondSemantics::kUntilIfFirstFalse; }},
      {"ITER.5.a.ii.B", [](const ParamMap&, H& h) { h.cond_semantics = H::CondSemantics::kUntilAlways; }},
      {"ITER.5.a.iii.A", [](const ParamMap&, H& h) { h.cond_semantics = H::CondSemantics::kIterateUntilTrue; }},
      {"ITER.5.a.iii.B", [](const ParamMap&, H& h) { h.cond_semantics = H::CondSemantics::kSkipUntilTrue; }},
      {"ITER.5.b.i.A", [](const ParamMap&, H& h) { h.loop_cond_eval = H::LoopCondEval::kSwapStrictness; }},
      {"ITER.5.b.i.B", [](const ParamMap&, H& h) { h.loop_cond_eval = H::LoopCondEval::kSwapDirection; }},
      {"ITER.6.d", [](const ParamMap&, H& h) { h.loop_nesting = H::LoopNesting::kIgnoreOuter; }},
      {"ITER.6.f", [](const ParamMap&, H& h) { h.loop_nesting = H::LoopNesting::kAbandonOuterIteration; }},
      {"ITER.7.a.i", [](const ParamMap&, H& h) { h.break_mode = H::BreakMode::kAsContinue; }},
      {"ITER.7.a.ii", [](const ParamMap&, H& h) { h.break_mode = H::BreakMode::kHalt; }},
      {"ITER.7.a.iii", [](const ParamMap&, H& h) { h.break_mode = H::BreakMode::kIgnore; }},
      {"ITER.7.b.i", [](const ParamMap&, H& h) { h.continue_mode = H::ContinueMode::kIgnore; }},
  };
  return table;
}

}  // namespace

bool install_runtime_hook(const MisconceptionCode& code, const ParamMap& params, HookTable& hooks) {
  auto it = hook_table().find(code.str());
  if (it == hook_table().end()) return false;
  it->second(params, hooks);
  return true;
}

ExecResult run_variant(const Program& program, const SemanticProfile& profile, const Limits& limits,
                       const RunOptions& options) {
  if (profile.rewrites.empty()) return execute(program, profile.hooks, limits, options);
  Program rewritten = rewrite_structural(program, profile);
  return execute(rewritten, profile.hooks, limits, options);
}

std::vector<std::vector<std::size_t>> equivalence_classes(const Program& program,
                                                          const std::vector<SemanticProfile>& profiles,
                                                          const Limits& limits) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::pair<std::vector<std::string>, std::string>> keys;
  RunOptions quiet;
  quiet.record_trace = false;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    ExecResult r = run_variant(program, profiles[i], limits, quiet);
    std::pair<std::vector<std::string>, std::string> key{r.transcript, status_text(r)};
    std::size_t k = 0;
    while (k < keys.size() && keys[k] != key) ++k;
    if (k == keys.size()) {
      keys.push_back(std::move(key));
      classes.emplace_back();
    }
    classes[k].push_back(i);
  }
  return classes;
}

}  // namespace tracewise
