#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcm/subpcm.hpp"
#include "pcm/ticketlock.hpp"

using namespace pcm;

namespace {

Element tmap(Element::MapEntries e) { return Element::map(std::move(e)); }

// Re-executes a violation trace step by step and confirms the final
// configuration indeed violates the reported check.
void replay(const Resource& r, const std::vector<Program>& programs,
            const ExplorationResult& result, const ExploreOptions& opts) {
  REQUIRE_FALSE(result.trace.empty());
  REQUIRE(result.trace.front().thread == -1);
  GlobalConfig current = initial_config(static_cast<int>(programs.size()));
  REQUIRE(current == result.trace.front().config);
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    const TraceStep& step = result.trace[i];
    auto next = apply_thread_step(r, programs, current, step.thread);
    REQUIRE(next.has_value());
    CHECK(next->second == step.step);
    CHECK(next->first == step.config);
    current = next->first;
  }
  auto violation = config_violation(r, programs, current, opts);
  REQUIRE(violation.has_value());
  CHECK(violation->first == result.violated_check);
}

}  // namespace

TEST_CASE("transitions follow the ticket workflow") {
  auto r = resource_TL(3);
  const auto& p = *r.pcm;
  Transition take = tr_taketx(3), lock = tr_lock(), unlock = tr_unlock();

  SubjState s0{empty_map(), empty_map()};
  REQUIRE(take.guard(p, s0));
  SubjState s1 = take.update(p, s0);
  CHECK(s1.self == tmap({{1, kWait}}));

  REQUIRE(lock.guard(p, s1));
  SubjState s2 = lock.update(p, s1);
  CHECK(s2.self == tmap({{1, kServe}}));
  CHECK_FALSE(lock.guard(p, s2));

  REQUIRE(unlock.guard(p, s2));
  SubjState s3 = unlock.update(p, s2);
  CHECK(s3.self == tmap({{1, kUsed}}));
  CHECK(psi_value(s3.self) == 2);
  CHECK_FALSE(unlock.guard(p, s3));

  // The dispenser guard respects the bound.
  SubjState full{tmap({{1, kUsed}, {2, kUsed}, {3, kWait}}), empty_map()};
  CHECK_FALSE(take.guard(p, full));
}

TEST_CASE("transposition swaps roles and is an involution") {
  auto r = resource_TL(2);
  const auto& p = *r.pcm;
  Transition take_other = transpose(tr_taketx(2));

  SubjState s{empty_map(), empty_map()};
  REQUIRE(take_other.guard(p, s));
  SubjState after = take_other.update(p, s);
  CHECK(after.self == empty_map());
  CHECK(after.other == tmap({{1, kWait}}));

  Transition twice = transpose(take_other);
  for (const auto& st : all_subj_states(p)) {
    CHECK(twice.guard(p, st) == tr_taketx(2).guard(p, st));
    if (twice.guard(p, st)) {
      SubjState a = twice.update(p, st);
      SubjState b = tr_taketx(2).update(p, st);
      CHECK(a == b);
    }
  }
}

TEST_CASE("state space membership") {
  auto r = resource_TL(3);
  const auto& p = *r.pcm;
  CHECK(r.statespace(p, {empty_map(), empty_map()}));
  CHECK_FALSE(r.statespace(p, {tmap({{2, kWait}}), empty_map()}));
  CHECK(r.statespace(p, {tmap({{1, kServe}}), tmap({{2, kWait}})}));
  CHECK_FALSE(r.statespace(p, {tmap({{1, kWait}}), tmap({{2, kUsed}})}));
  CHECK_FALSE(r.statespace(p, {tmap({{1, kWait}}), tmap({{1, kWait}})}));
}

TEST_CASE("statespace preservation at bound 3") {
  LawReport r = check_statespace_preservation(resource_TL(3));
  CHECK(r.all_passed());
  CHECK(r.stats.at("statespace-members") > 0);
}

TEST_CASE("blind lock mutant breaks the state space") {
  Resource mutated = resource_TL(3);
  mutated.transitions[1] = tr_lock_blind(3);
  LawReport r = check_statespace_preservation(mutated);
  CHECK_FALSE(r.all_passed());
  const LawCheck* broken = r.find("preserves/lock-blind");
  REQUIRE(broken != nullptr);
  CHECK_FALSE(broken->passed);
  REQUIRE(broken->witness.size() == 2);
  // Replay: the witness state steps outside the state space.
  SubjState s{broken->witness[0], broken->witness[1]};
  Transition blind = tr_lock_blind(3);
  REQUIRE(blind.guard(*mutated.pcm, s));
  CHECK_FALSE(mutated.statespace(*mutated.pcm, blind.update(*mutated.pcm, s)));
}

TEST_CASE("stability suite at bound 3") {
  LawReport r = check_stability(resource_TL(3));
  CHECK(r.all_passed());
  CHECK(r.find("seprel-stable/transposition-closure") != nullptr);
  CHECK(r.find("wait-display-bound/ticket-1") != nullptr);
}

TEST_CASE("nowait mutant is not alpha-stable") {
  Resource mutated = resource_TL(3);
  mutated.transitions[1] = tr_lock_nowait();
  LawReport r = check_stability(mutated);
  const LawCheck* broken = r.find("seprel-stable/lock-nowait");
  REQUIRE(broken != nullptr);
  CHECK_FALSE(broken->passed);
}

TEST_CASE("simulation side condition and rebased agreement") {
  LawReport r = check_simulation_to_quotient(resource_TL(3));
  CHECK(r.all_passed());
  CHECK(r.find("rebased-abstraction-agreement")->passed);

  Resource mutated = resource_TL(3);
  mutated.transitions[1] = tr_lock_nowait();
  LawReport bad = check_simulation_to_quotient(mutated);
  const LawCheck* broken = bad.find("preserves-alpha/lock-nowait");
  REQUIRE(broken != nullptr);
  CHECK_FALSE(broken->passed);
  REQUIRE(broken->witness.size() == 2);
  // The witness grants a second serve ticket.
  Transition nowait = tr_lock_nowait();
  SubjState s{broken->witness[0], broken->witness[1]};
  SubjState after = nowait.update(*mutated.pcm, s);
  CHECK(count_serve_value(after.self) + count_serve_value(after.other) > 1);
}

TEST_CASE("single thread runs lock then unlock deterministically") {
  Resource r = resource_TL(2);
  std::vector<Program> programs{prog_lock_unlock(2, 1)};
  ExplorationResult result = explore(r, programs, ExploreOptions{});
  CHECK(result.passed);

  // Deterministic single-thread run: walk to the final configuration.
  GlobalConfig c = initial_config(1);
  int guard = 0;
  while (auto next = apply_thread_step(r, programs, c, 0)) {
    c = next->first;
    REQUIRE(++guard < 32);
  }
  CHECK(c.threads[0].self == tmap({{1, kUsed}}));
  CHECK(programs[0].points[c.threads[0].pc].done);
}

TEST_CASE("lock alone ends owning the lock") {
  Resource r = resource_TL(2);
  std::vector<Program> programs{prog_lock(2)};
  CHECK(explore(r, programs, ExploreOptions{}).passed);
  GlobalConfig c = initial_config(1);
  while (auto next = apply_thread_step(r, programs, c, 0)) c = next->first;
  CHECK(count_serve_value(c.threads[0].self) == 1);
  CHECK(c.threads[0].self == tmap({{1, kServe}}));
}

TEST_CASE("unlock from a non-serving state is disabled") {
  Resource r = resource_TL(2);
  std::vector<Program> programs{prog_unlock()};
  GlobalConfig c = initial_config(1);
  // The snapshot step is always enabled; the unlock guard then blocks
  // because no serve ticket is held.
  auto next = apply_thread_step(r, programs, c, 0);
  REQUIRE(next.has_value());
  CHECK_FALSE(apply_thread_step(r, programs, next->first, 0).has_value());
}

TEST_CASE("two threads, one round each, all checks pass") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock(4, 1));
  ExplorationResult result = explore(r, programs, ExploreOptions{});
  CHECK(result.passed);
  CHECK(result.states > 10);
}

TEST_CASE("two threads, two rounds each") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock(4, 2));
  ExplorationResult result = explore(r, programs, ExploreOptions{});
  CHECK(result.passed);
}

TEST_CASE("ticket demand beyond the bound is refused") {
  Resource r = resource_TL(2);
  std::vector<Program> programs(2, prog_lock_unlock(2, 2));
  CHECK_THROWS_AS((void)explore(r, programs, ExploreOptions{}), UsageError);
}

TEST_CASE("guard-dropped lock mutant violates mutual exclusion") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock_mutant(4, 1,
                                                           "lock-nowait"));
  ExploreOptions mutex_only{true, false, false, false};
  ExplorationResult result = explore(r, programs, mutex_only);
  REQUIRE_FALSE(result.passed);
  CHECK(result.violated_check == "mutex");
  CHECK(result.trace.size() == 5);  // minimal: two draws and two serves
  replay(r, programs, result, mutex_only);
}

TEST_CASE("blind lock mutant collides or breaks the state space") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock_mutant(4, 1,
                                                           "lock-blind"));
  ExplorationResult result = explore(r, programs, ExploreOptions{});
  REQUIRE_FALSE(result.passed);
  replay(r, programs, result, ExploreOptions{});
}

TEST_CASE("seprel check trips when mutex does not run") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock_mutant(4, 1,
                                                           "lock-nowait"));
  ExploreOptions seprel_only{false, false, true, false};
  ExplorationResult result = explore(r, programs, seprel_only);
  REQUIRE_FALSE(result.passed);
  CHECK(result.violated_check == "seprel");
  replay(r, programs, result, seprel_only);
}

TEST_CASE("every thread view agrees on the combined map and display") {
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock(4, 2));

  // Walk all reachable configurations and compare the two views.
  std::set<GlobalConfig> visited;
  std::deque<GlobalConfig> frontier;
  frontier.push_back(initial_config(2));
  visited.insert(frontier.front());
  while (!frontier.empty()) {
    GlobalConfig c = frontier.front();
    frontier.pop_front();
    Element joint0 = r.pcm->join(c.threads[0].self, c.threads[1].self);
    Element joint1 = r.pcm->join(c.threads[1].self, c.threads[0].self);
    REQUIRE(joint0 == joint1);
    REQUIRE(psi_value(joint0) == psi_value(joint1));
    for (int i = 0; i < 2; ++i) {
      auto next = apply_thread_step(r, programs, c, i);
      if (next && visited.insert(next->first).second)
        frontier.push_back(next->first);
    }
  }
  CHECK(visited.size() > 10);
}

TEST_CASE("abstractions of the quotient run match the base run") {
  Resource base = resource_TL(3);
  std::vector<Program> programs(2, prog_lock_unlock(3, 1));
  auto abs_base = reachable_alpha_abstractions(base, programs);

  SubPcmWitness w = quotient(base.pcm, seprel_alpha(3));
  Resource rebased = resource_TL_on(w.sub, 3);
  auto abs_sub = reachable_alpha_abstractions(rebased, programs);
  CHECK(abs_base == abs_sub);

  // Sanity: both runs actually visit owned and unowned configurations.
  bool some_own = false;
  for (const auto& a : abs_base)
    for (const auto& v : a)
      if (v == "own") some_own = true;
  CHECK(some_own);
}
