#pragma once

#include <optional>
#include <set>
#include <tuple>

#include "pcm/instances.hpp"

namespace pcm {

/// A ghost transition: guarded update acting on the self component only.
/// Interference by other threads is its transposition.
struct Transition {
  std::string name;
  std::function<bool(const PcmStructure&, const SubjState&)> guard;
  std::function<SubjState(const PcmStructure&, const SubjState&)> update;
};

/// Draw the least undrawn ticket (as wait), while it fits the bound.
Transition tr_taketx(int bound);
/// Serve the displayed ticket when we hold it as wait.
Transition tr_lock();
/// Retire the displayed ticket when we hold it as serve.
Transition tr_unlock();

/// Mutants for negative testing. `nowait` serves its own smallest wait
/// ticket without consulting the display; `blind` serves at the display
/// position without checking ownership or label (inserting if absent).
Transition tr_lock_nowait();
Transition tr_lock_blind(int bound);

/// Swaps the roles of self and other before and after the transition,
/// modeling the same step taken by the environment. An involution.
Transition transpose(const Transition& t);

/// The ticket-lock state transition system: ticket maps, the state space
/// requiring the combined map ordered and gap-free, and the three
/// transitions.
struct Resource {
  PcmPtr pcm;
  int bound = 0;
  std::function<bool(const PcmStructure&, const SubjState&)> statespace;
  std::vector<Transition> transitions;
};

Resource resource_TL(int bound);

/// Same system over a caller-supplied carrier (used to re-base exploration
/// onto the quotient by the alpha relation).
Resource resource_TL_on(PcmPtr pcm, int bound);

/// Every transition and transposed transition maps state-space members to
/// state-space members.
LawReport check_statespace_preservation(const Resource& r);

/// Appendix-style stability: the alpha relation between self and other is
/// preserved by all transitions and transpositions (single steps and
/// closure under sequences), and a held wait ticket bounds the display
/// against interference.
LawReport check_stability(const Resource& r);

/// The side condition for re-basing onto the quotient: transitions preserve
/// the alpha relation; additionally runs the exploration on both carriers
/// and compares the reachable ownership abstractions.
LawReport check_simulation_to_quotient(const Resource& r);

/// Thread-local registers: drawn ticket x, display reads y, the display
/// snapshot t taken at unlock entry, and the frame k (self at lock entry).
struct ThreadRegs {
  int x = 0;
  int y = 0;
  int t = 0;
  Element k = empty_map();

  friend bool operator==(const ThreadRegs& a, const ThreadRegs& b) {
    return a.x == b.x && a.y == b.y && a.t == b.t && a.k == b.k;
  }
  friend bool operator<(const ThreadRegs& a, const ThreadRegs& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.t != b.t) return a.t < b.t;
    return a.k < b.k;
  }
};

/// What a program step or assertion sees: the thread's subjective state,
/// the combined map, the display value derived from it, and the registers.
struct StepView {
  const PcmStructure& pcm;
  SubjState state;
  Element joint;
  int display = 0;
  ThreadRegs regs;
};

struct NamedAssert {
  std::string name;
  std::function<bool(const StepView&)> pred;
};

/// One program point: the proof-outline assertions that hold whenever
/// control is here, and the single atomic step leaving it. The step yields
/// the new self, new registers and the next point, or nothing when the
/// guard is disabled.
struct ProgramPoint {
  std::string name;
  std::vector<NamedAssert> asserts;
  std::string step_name;
  std::function<std::optional<std::tuple<Element, ThreadRegs, int>>(
      const StepView&)>
      step;
  bool done = false;
};

struct Program {
  std::string name;
  std::vector<ProgramPoint> points;
};

/// lock: draw a ticket, spin on the display, serve. Annotated with the
/// framed proof-outline assertions.
Program prog_lock(int bound);

/// unlock: snapshot the display, retire the served ticket.
Program prog_unlock();

/// `rounds` repetitions of lock followed by unlock.
Program prog_lock_unlock(int bound, int rounds);

/// Mutant workloads; `mutant` is "lock-nowait" or "lock-blind". These skip
/// the spin loop and carry no outline assertions.
Program prog_lock_unlock_mutant(int bound, int rounds,
                                const std::string& mutant);

struct ThreadState {
  int pc = 0;
  ThreadRegs regs;
  Element self = empty_map();

  friend bool operator==(const ThreadState& a, const ThreadState& b) {
    return a.pc == b.pc && a.regs == b.regs && a.self == b.self;
  }
  friend bool operator<(const ThreadState& a, const ThreadState& b) {
    if (a.pc != b.pc) return a.pc < b.pc;
    if (!(a.regs == b.regs)) return a.regs < b.regs;
    return a.self < b.self;
  }
};

struct GlobalConfig {
  std::vector<ThreadState> threads;

  friend bool operator==(const GlobalConfig& a, const GlobalConfig& b) {
    return a.threads == b.threads;
  }
  friend bool operator<(const GlobalConfig& a, const GlobalConfig& b) {
    return a.threads < b.threads;
  }
};

struct TraceStep {
  int thread = -1;  // -1 marks the initial configuration
  std::string step;
  GlobalConfig config;
};

struct ExplorationResult {
  bool passed = true;
  std::string violated_check;
  std::string detail;
  std::vector<TraceStep> trace;
  std::uint64_t states = 0;
  std::uint64_t steps = 0;
};

struct ExploreOptions {
  bool mutex = true;
  bool statespace = true;
  bool seprel = true;
  bool outline = true;
};

GlobalConfig initial_config(int n_threads);

/// The single enabled step of `thread` in `config`, if any.
std::optional<std::pair<GlobalConfig, std::string>> apply_thread_step(
    const Resource& r, const std::vector<Program>& programs,
    const GlobalConfig& config, int thread);

/// First violated check of `config` in canonical order (disjointness,
/// mutex, statespace, seprel, outline), or nothing.
std::optional<std::pair<std::string, std::string>> config_violation(
    const Resource& r, const std::vector<Program>& programs,
    const GlobalConfig& config, const ExploreOptions& opts);

/// Breadth-first fixpoint over all interleavings of single atomic steps,
/// evaluating the requested checks at every reachable configuration.
/// Violations carry a minimal-length replayable trace; ties are broken by
/// thread id. Refuses workloads whose total ticket demand exceeds the
/// carrier bound.
ExplorationResult explore(const Resource& r,
                          const std::vector<Program>& programs,
                          const ExploreOptions& opts);

/// Reachable ownership abstractions: the set over reachable configurations
/// of the per-thread alpha values ("own"/"ownbar", "undef" if the global
/// map degenerates).
std::set<std::vector<std::string>> reachable_alpha_abstractions(
    const Resource& r, const std::vector<Program>& programs);

}  // namespace pcm
