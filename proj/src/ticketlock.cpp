#include "pcm/ticketlock.hpp"

#include <algorithm>
#include <deque>

#include "pcm/subpcm.hpp"

namespace pcm {

namespace {

Element map_set(const Element& m, int key, const std::string& label) {
  Element::MapEntries entries = m.entries();
  entries[key] = label;
  return Element::map(std::move(entries));
}

std::optional<std::string> label_at(const Element& m, int key) {
  auto it = m.entries().find(key);
  if (it == m.entries().end()) return std::nullopt;
  return it->second;
}

bool joint_ok(const PcmStructure& p, const SubjState& s, Element& joint) {
  if (!is_separate(p, s.self, s.other)) return false;
  joint = p.join(s.self, s.other);
  return true;
}

}  // namespace

Transition tr_taketx(int bound) {
  return Transition{
      "taketx",
      [bound](const PcmStructure& p, const SubjState& s) {
        Element joint;
        return joint_ok(p, s, joint) && fresh(joint) <= bound;
      },
      [](const PcmStructure& p, const SubjState& s) {
        const Element joint = p.join(s.self, s.other);
        return SubjState{map_set(s.self, fresh(joint), kWait), s.other};
      }};
}

Transition tr_lock() {
  return Transition{
      "lock",
      [](const PcmStructure& p, const SubjState& s) {
        Element joint;
        if (!joint_ok(p, s, joint)) return false;
        return label_at(s.self, psi_value(joint)) == std::string(kWait);
      },
      [](const PcmStructure& p, const SubjState& s) {
        const Element joint = p.join(s.self, s.other);
        return SubjState{map_set(s.self, psi_value(joint), kServe), s.other};
      }};
}

Transition tr_unlock() {
  return Transition{
      "unlock",
      [](const PcmStructure& p, const SubjState& s) {
        Element joint;
        if (!joint_ok(p, s, joint)) return false;
        return label_at(s.self, psi_value(joint)) == std::string(kServe);
      },
      [](const PcmStructure& p, const SubjState& s) {
        const Element joint = p.join(s.self, s.other);
        return SubjState{map_set(s.self, psi_value(joint), kUsed), s.other};
      }};
}

Transition tr_lock_nowait() {
  auto own_wait = [](const Element& self) -> std::optional<int> {
    for (const auto& [k, v] : self.entries())
      if (v == kWait) return k;
    return std::nullopt;
  };
  return Transition{
      "lock-nowait",
      [own_wait](const PcmStructure&, const SubjState& s) {
        return own_wait(s.self).has_value();
      },
      [own_wait](const PcmStructure&, const SubjState& s) {
        return SubjState{map_set(s.self, *own_wait(s.self), kServe), s.other};
      }};
}

Transition tr_lock_blind(int bound) {
  return Transition{
      "lock-blind",
      [bound](const PcmStructure& p, const SubjState& s) {
        Element joint;
        return joint_ok(p, s, joint) && psi_value(joint) <= bound;
      },
      [](const PcmStructure& p, const SubjState& s) {
        const Element joint = p.join(s.self, s.other);
        return SubjState{map_set(s.self, psi_value(joint), kServe), s.other};
      }};
}

Transition transpose(const Transition& t) {
  auto guard = t.guard;
  auto update = t.update;
  return Transition{
      t.name + "^",
      [guard](const PcmStructure& p, const SubjState& s) {
        return guard(p, SubjState{s.other, s.self});
      },
      [update](const PcmStructure& p, const SubjState& s) {
        SubjState swapped = update(p, SubjState{s.other, s.self});
        return SubjState{swapped.other, swapped.self};
      }};
}

Resource resource_TL(int bound) {
  return resource_TL_on(pcm_tickets(bound), bound);
}

Resource resource_TL_on(PcmPtr pcm, int bound) {
  auto statespace = [](const PcmStructure& p, const SubjState& s) {
    if (!is_separate(p, s.self, s.other)) return false;
    const Element joint = p.join(s.self, s.other);
    return pred_ordered(joint) && pred_no_gaps(joint);
  };
  return Resource{std::move(pcm), bound, statespace,
                  {tr_taketx(bound), tr_lock(), tr_unlock()}};
}

namespace {

std::vector<SubjState> statespace_members(const Resource& r) {
  std::vector<SubjState> out;
  for (const auto& s : all_subj_states(*r.pcm))
    if (r.statespace(*r.pcm, s)) out.push_back(s);
  return out;
}

std::vector<Transition> with_transposed(const std::vector<Transition>& ts) {
  std::vector<Transition> all = ts;
  for (const auto& t : ts) all.push_back(transpose(t));
  return all;
}

bool alpha_related(const PcmStructure& p, const SubjState& s) {
  return is_separate(p, s.self, s.other) &&
         count_serve_value(s.self) + count_serve_value(s.other) <= 1;
}

}  // namespace

LawReport check_statespace_preservation(const Resource& r) {
  LawReport report;
  report.suite = "statespace-preservation(TL)";
  const auto states = statespace_members(r);
  report.stats["statespace-members"] = states.size();

  for (const auto& t : with_transposed(r.transitions)) {
    auto& check = report.add("preserves/" + t.name);
    std::uint64_t fired = 0;
    for (const auto& s : states) {
      if (!t.guard(*r.pcm, s)) continue;
      ++fired;
      const SubjState next = t.update(*r.pcm, s);
      if (!r.statespace(*r.pcm, next))
        report.fail(check, {s.self, s.other},
                    t.name + " leaves the state space");
    }
    report.stats["fired/" + t.name] = fired;
  }
  return report;
}

LawReport check_stability(const Resource& r) {
  LawReport report;
  report.suite = "stability(TL)";
  const auto states = statespace_members(r);
  report.stats["statespace-members"] = states.size();

  // Alpha relation preserved by every single step, own or interfering.
  for (const auto& t : with_transposed(r.transitions)) {
    auto& check = report.add("seprel-stable/" + t.name);
    for (const auto& s : states) {
      if (!alpha_related(*r.pcm, s)) continue;
      if (!t.guard(*r.pcm, s)) continue;
      const SubjState next = t.update(*r.pcm, s);
      if (!alpha_related(*r.pcm, next))
        report.fail(check, {s.self, s.other},
                    t.name + " breaks the alpha relation");
    }
  }

  // ... and by arbitrary sequences of transposed steps (fixpoint closure).
  std::vector<Transition> transposed;
  for (const auto& t : r.transitions) transposed.push_back(transpose(t));

  auto closure_check = [&](const char* law,
                           const std::function<bool(const SubjState&)>& prop) {
    auto& check = report.add(law);
    for (const auto& s : states) {
      if (!prop(s)) continue;
      std::set<SubjState> visited{s};
      std::deque<SubjState> frontier{s};
      while (!frontier.empty() && check.passed) {
        const SubjState cur = frontier.front();
        frontier.pop_front();
        for (const auto& t : transposed) {
          if (!t.guard(*r.pcm, cur)) continue;
          const SubjState next = t.update(*r.pcm, cur);
          if (!visited.insert(next).second) continue;
          if (!prop(next)) {
            report.fail(check, {s.self, s.other, next.self, next.other},
                        "property lost after a transposed sequence");
            break;
          }
          frontier.push_back(next);
        }
      }
      if (!check.passed) break;
    }
  };

  closure_check("seprel-stable/transposition-closure",
                [&](const SubjState& s) { return alpha_related(*r.pcm, s); });

  // A held wait ticket bounds the display under interference.
  for (int ticket = 1; ticket <= r.bound; ++ticket) {
    auto prop = [&, ticket](const SubjState& s) {
      if (!is_separate(*r.pcm, s.self, s.other)) return false;
      const Element joint = r.pcm->join(s.self, s.other);
      return label_at(s.self, ticket) == std::string(kWait) &&
             psi_value(joint) <= ticket;
    };
    auto& check = report.add("wait-display-bound/ticket-" +
                             std::to_string(ticket));
    for (const auto& t : transposed) {
      for (const auto& s : states) {
        if (!prop(s)) continue;
        if (!t.guard(*r.pcm, s)) continue;
        if (!prop(t.update(*r.pcm, s)))
          report.fail(check, {s.self, s.other},
                      t.name + " moves the display past a held wait ticket");
      }
    }
    closure_check(
        ("wait-display-bound/closure-ticket-" + std::to_string(ticket))
            .c_str(),
        prop);
  }
  return report;
}

Program prog_lock(int bound) {
  Program p = prog_lock_unlock(bound, 1);
  p.name = "lock";
  p.points.resize(5);
  ProgramPoint done;
  done.name = "lock.done";
  done.done = true;
  done.asserts = p.points[4].asserts;
  p.points[4] = std::move(done);
  return p;
}

namespace {

NamedAssert assert_no_serve(std::string name) {
  return {std::move(name), [](const StepView& v) {
            return count_serve_value(v.state.self) == 0;
          }};
}

NamedAssert assert_seprel(std::string name) {
  return {std::move(name), [](const StepView& v) {
            return count_serve_value(v.state.self) +
                       count_serve_value(v.state.other) <=
                   1;
          }};
}

NamedAssert assert_self_is_frame_plus(std::string name,
                                      const std::string& label) {
  return {std::move(name), [label](const StepView& v) {
            Element::MapEntries expected = v.regs.k.entries();
            if (!expected.emplace(v.regs.x, label).second) return false;
            return v.state.self == Element::map(std::move(expected));
          }};
}

}  // namespace

Program prog_unlock() {
  Program p;
  p.name = "unlock";

  ProgramPoint ready;
  ready.name = "unlock.ready";
  ready.asserts = {
      {"pre.own",
       [](const StepView& v) { return count_serve_value(v.state.self) > 0; }},
      {"pre.unique-serve",
       [](const StepView& v) { return count_serve_value(v.state.self) == 1; }},
      {"pre.serve-at-display",
       [](const StepView& v) {
         return label_at(v.state.self, v.display) == std::string(kServe);
       }},
      assert_seprel("pre.seprel-alpha")};
  ready.step_name = "snapshot";
  ready.step = [](const StepView& v)
      -> std::optional<std::tuple<Element, ThreadRegs, int>> {
    ThreadRegs regs = v.regs;
    regs.t = v.display;
    return std::make_tuple(v.state.self, regs, 1);
  };
  p.points.push_back(std::move(ready));

  ProgramPoint snapped;
  snapped.name = "unlock.snapshotted";
  snapped.asserts = {
      {"snap.serve-at-t",
       [](const StepView& v) {
         return label_at(v.state.self, v.regs.t) == std::string(kServe);
       }},
      {"snap.display-is-t",
       [](const StepView& v) { return v.display == v.regs.t; }}};
  snapped.step_name = "unlock";
  snapped.step = [](const StepView& v)
      -> std::optional<std::tuple<Element, ThreadRegs, int>> {
    if (label_at(v.state.self, v.display) != std::string(kServe))
      return std::nullopt;
    return std::make_tuple(map_set(v.state.self, v.display, kUsed), v.regs, 2);
  };
  p.points.push_back(std::move(snapped));

  ProgramPoint done;
  done.name = "unlock.done";
  done.done = true;
  done.asserts = {{"post.used-at-t",
                   [](const StepView& v) {
                     return label_at(v.state.self, v.regs.t) ==
                            std::string(kUsed);
                   }},
                  assert_no_serve("post.no-serve"),
                  assert_seprel("post.seprel-alpha")};
  p.points.push_back(std::move(done));
  return p;
}

Program prog_lock_unlock(int bound, int rounds) {
  if (rounds < 1) throw UsageError("programs need at least one round");
  Program p;
  p.name = "lock-unlock×" + std::to_string(rounds);

  for (int round = 0; round < rounds; ++round) {
    const int base = round * 6;

    ProgramPoint ready;
    ready.name = "lock.ready";
    if (round > 0)
      ready.asserts.push_back({"unlock.post.used-at-t", [](const StepView& v) {
                                 return label_at(v.state.self, v.regs.t) ==
                                        std::string(kUsed);
                               }});
    ready.asserts.push_back(assert_no_serve("lock.pre.no-serve"));
    ready.asserts.push_back(assert_seprel("lock.pre.seprel-alpha"));
    ready.step_name = "taketx";
    ready.step = [bound, base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      const int ticket = fresh(v.joint);
      if (ticket > bound) return std::nullopt;
      ThreadRegs regs = v.regs;
      regs.k = v.state.self;
      regs.x = ticket;
      return std::make_tuple(map_set(v.state.self, ticket, kWait), regs,
                             base + 1);
    };
    p.points.push_back(std::move(ready));

    ProgramPoint drawn;
    drawn.name = "lock.drawn";
    drawn.asserts = {
        assert_self_is_frame_plus("lock.drawn.self-shape", kWait),
        {"lock.drawn.display-bound",
         [](const StepView& v) { return v.display <= v.regs.x; }}};
    drawn.step_name = "observe";
    drawn.step = [base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      ThreadRegs regs = v.regs;
      regs.y = v.display;
      return std::make_tuple(v.state.self, regs, base + 2);
    };
    p.points.push_back(std::move(drawn));

    ProgramPoint tested;
    tested.name = "lock.tested";
    tested.asserts = {
        assert_self_is_frame_plus("lock.loop.self-shape", kWait),
        {"lock.loop.display-bounds",
         [](const StepView& v) {
           return v.regs.y <= v.display && v.display <= v.regs.x;
         }}};
    tested.step_name = "test";
    tested.step = [base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      const int next = (v.regs.x == v.regs.y) ? base + 3 : base + 1;
      return std::make_tuple(v.state.self, v.regs, next);
    };
    p.points.push_back(std::move(tested));

    ProgramPoint called;
    called.name = "lock.called";
    called.asserts = {
        assert_self_is_frame_plus("lock.exit.self-shape", kWait),
        {"lock.exit.display-equal",
         [](const StepView& v) {
           return v.regs.y == v.display && v.display == v.regs.x;
         }}};
    called.step_name = "lock";
    called.step = [base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      if (label_at(v.state.self, v.display) != std::string(kWait))
        return std::nullopt;
      return std::make_tuple(map_set(v.state.self, v.display, kServe), v.regs,
                             base + 4);
    };
    p.points.push_back(std::move(called));

    ProgramPoint locked;
    locked.name = "lock.locked";
    locked.asserts = {
        {"lock.post.self-shape",
         [](const StepView& v) {
           Element::MapEntries expected = v.regs.k.entries();
           if (!expected.emplace(v.display, kServe).second) return false;
           return v.state.self == Element::map(std::move(expected));
         }},
        {"lock.post.own",
         [](const StepView& v) {
           return count_serve_value(v.state.self) > 0;
         }},
        assert_seprel("lock.post.seprel-alpha"),
        {"unlock.pre.unique-serve",
         [](const StepView& v) {
           return count_serve_value(v.state.self) == 1;
         }},
        {"unlock.pre.serve-at-display", [](const StepView& v) {
           return label_at(v.state.self, v.display) == std::string(kServe);
         }}};
    locked.step_name = "snapshot";
    locked.step = [base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      ThreadRegs regs = v.regs;
      regs.t = v.display;
      return std::make_tuple(v.state.self, regs, base + 5);
    };
    p.points.push_back(std::move(locked));

    ProgramPoint snapped;
    snapped.name = "unlock.snapshotted";
    snapped.asserts = {
        {"unlock.snap.serve-at-t",
         [](const StepView& v) {
           return label_at(v.state.self, v.regs.t) == std::string(kServe);
         }},
        {"unlock.snap.display-is-t",
         [](const StepView& v) { return v.display == v.regs.t; }}};
    snapped.step_name = "unlock";
    snapped.step = [base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      if (label_at(v.state.self, v.display) != std::string(kServe))
        return std::nullopt;
      return std::make_tuple(map_set(v.state.self, v.display, kUsed), v.regs,
                             base + 6);
    };
    p.points.push_back(std::move(snapped));
  }

  ProgramPoint done;
  done.name = "done";
  done.done = true;
  done.asserts = {{"unlock.post.used-at-t",
                   [](const StepView& v) {
                     return label_at(v.state.self, v.regs.t) ==
                            std::string(kUsed);
                   }},
                  assert_no_serve("unlock.post.no-serve"),
                  assert_seprel("unlock.post.seprel-alpha")};
  p.points.push_back(std::move(done));
  return p;
}

Program prog_lock_unlock_mutant(int bound, int rounds,
                                const std::string& mutant) {
  Transition lock_step;
  if (mutant == "lock-nowait")
    lock_step = tr_lock_nowait();
  else if (mutant == "lock-blind")
    lock_step = tr_lock_blind(bound);
  else
    throw UsageError("unknown mutant '" + mutant +
                     "' (available: lock-nowait, lock-blind)");

  Program p;
  p.name = "mutant-" + mutant + "×" + std::to_string(rounds);
  for (int round = 0; round < rounds; ++round) {
    const int base = round * 2;

    ProgramPoint ready;
    ready.name = "lock.ready";
    ready.step_name = "taketx";
    ready.step = [bound, base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      const int ticket = fresh(v.joint);
      if (ticket > bound) return std::nullopt;
      ThreadRegs regs = v.regs;
      regs.k = v.state.self;
      regs.x = ticket;
      return std::make_tuple(map_set(v.state.self, ticket, kWait), regs,
                             base + 1);
    };
    p.points.push_back(std::move(ready));

    ProgramPoint serve;
    serve.name = "lock.mutant";
    serve.step_name = lock_step.name;
    auto tr = lock_step;
    serve.step = [tr, base](const StepView& v)
        -> std::optional<std::tuple<Element, ThreadRegs, int>> {
      if (!tr.guard(v.pcm, v.state)) return std::nullopt;
      return std::make_tuple(tr.update(v.pcm, v.state).self, v.regs, base + 2);
    };
    p.points.push_back(std::move(serve));
  }

  ProgramPoint done;
  done.name = "done";
  done.done = true;
  p.points.push_back(std::move(done));
  return p;
}

GlobalConfig initial_config(int n_threads) {
  GlobalConfig c;
  c.threads.resize(n_threads);
  return c;
}

namespace {

// Join of every self but `skip`; nullopt when some join is undefined.
std::optional<Element> join_others(const PcmStructure& p,
                                   const GlobalConfig& c, int skip) {
  Element acc = p.unit();
  for (int i = 0; i < static_cast<int>(c.threads.size()); ++i) {
    if (i == skip) continue;
    acc = p.join(acc, c.threads[i].self);
    if (!p.defined(acc)) return std::nullopt;
  }
  return acc;
}

std::optional<StepView> view_of(const Resource& r, const GlobalConfig& c,
                                int thread) {
  auto other = join_others(*r.pcm, c, thread);
  if (!other) return std::nullopt;
  SubjState state{c.threads[thread].self, *other};
  if (!is_separate(*r.pcm, state.self, state.other)) return std::nullopt;
  Element joint = r.pcm->join(state.self, state.other);
  return StepView{*r.pcm, std::move(state), joint, psi_value(joint),
                  c.threads[thread].regs};
}

}  // namespace

std::optional<std::pair<GlobalConfig, std::string>> apply_thread_step(
    const Resource& r, const std::vector<Program>& programs,
    const GlobalConfig& config, int thread) {
  const ThreadState& ts = config.threads[thread];
  const ProgramPoint& point = programs[thread].points[ts.pc];
  if (point.done) return std::nullopt;
  auto view = view_of(r, config, thread);
  if (!view) return std::nullopt;
  auto result = point.step(*view);
  if (!result) return std::nullopt;
  GlobalConfig next = config;
  next.threads[thread].self = std::get<0>(*result);
  next.threads[thread].regs = std::get<1>(*result);
  next.threads[thread].pc = std::get<2>(*result);
  return std::make_pair(std::move(next), point.step_name);
}

std::optional<std::pair<std::string, std::string>> config_violation(
    const Resource& r, const std::vector<Program>& programs,
    const GlobalConfig& config, const ExploreOptions& opts) {
  const int n = static_cast<int>(config.threads.size());

  Element joint = r.pcm->unit();
  for (const auto& ts : config.threads) {
    joint = r.pcm->join(joint, ts.self);
    if (!r.pcm->defined(joint))
      return std::make_pair(std::string("disjointness"),
                            std::string("per-thread self maps collide"));
  }

  if (opts.mutex && count_serve_value(joint) > 1)
    return std::make_pair(std::string("mutex"),
                          "count_serve = " +
                              std::to_string(count_serve_value(joint)) +
                              " at " + joint.str());

  if (opts.statespace && !(pred_ordered(joint) && pred_no_gaps(joint)))
    return std::make_pair(std::string("statespace"),
                          "combined map " + joint.str() +
                              " leaves the state space");

  if (opts.seprel) {
    for (int i = 0; i < n; ++i) {
      auto view = view_of(r, config, i);
      if (!view || !alpha_related(*r.pcm, view->state))
        return std::make_pair(
            std::string("seprel"),
            "thread " + std::to_string(i) + " violates the alpha relation");
    }
  }

  if (opts.outline) {
    for (int i = 0; i < n; ++i) {
      const ProgramPoint& point = programs[i].points[config.threads[i].pc];
      if (point.asserts.empty()) continue;
      auto view = view_of(r, config, i);
      if (!view)
        return std::make_pair(std::string("outline"),
                              "thread " + std::to_string(i) +
                                  " has no well-formed view");
      for (const auto& a : point.asserts) {
        if (!a.pred(*view))
          return std::make_pair(std::string("outline"),
                                "thread " + std::to_string(i) + " at " +
                                    point.name + ": " + a.name);
      }
    }
  }
  return std::nullopt;
}

ExplorationResult explore(const Resource& r,
                          const std::vector<Program>& programs,
                          const ExploreOptions& opts) {
  int demand = 0;
  for (const auto& p : programs) {
    int draws = 0;
    for (const auto& pt : p.points)
      if (pt.step_name == "taketx") ++draws;
    demand += draws;
  }
  if (demand > r.bound)
    throw UsageError("exploration would draw " + std::to_string(demand) +
                     " tickets but the carrier bound is " +
                     std::to_string(r.bound));

  struct Node {
    GlobalConfig config;
    int parent;
    int thread;
    std::string step;
  };
  std::vector<Node> nodes;
  std::set<GlobalConfig> visited;
  std::deque<int> frontier;

  ExplorationResult result;
  auto violation_trace = [&](int node_idx) {
    std::vector<TraceStep> trace;
    for (int i = node_idx; i >= 0; i = nodes[i].parent)
      trace.push_back(TraceStep{nodes[i].thread, nodes[i].step,
                                nodes[i].config});
    std::reverse(trace.begin(), trace.end());
    return trace;
  };
  auto admit = [&](GlobalConfig config, int parent, int thread,
                   std::string step) -> bool {
    if (!visited.insert(config).second) return false;
    nodes.push_back(Node{std::move(config), parent, thread, std::move(step)});
    const int idx = static_cast<int>(nodes.size()) - 1;
    if (auto bad = config_violation(r, programs, nodes[idx].config, opts)) {
      result.passed = false;
      result.violated_check = bad->first;
      result.detail = bad->second;
      result.trace = violation_trace(idx);
      return true;
    }
    frontier.push_back(idx);
    return false;
  };

  if (admit(initial_config(static_cast<int>(programs.size())), -1, -1,
            "init")) {
    result.states = visited.size();
    return result;
  }

  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < static_cast<int>(programs.size()); ++i) {
      auto stepped = apply_thread_step(r, programs, nodes[cur].config, i);
      if (!stepped) continue;
      ++result.steps;
      if (admit(std::move(stepped->first), cur, i, stepped->second)) {
        result.states = visited.size();
        return result;
      }
    }
  }
  result.states = visited.size();
  return result;
}

std::set<std::vector<std::string>> reachable_alpha_abstractions(
    const Resource& r, const std::vector<Program>& programs) {
  std::set<std::vector<std::string>> abstractions;
  std::set<GlobalConfig> visited;
  std::deque<GlobalConfig> frontier;

  auto record = [&](const GlobalConfig& c) {
    std::vector<std::string> abs;
    bool ok = true;
    Element joint = r.pcm->unit();
    for (const auto& ts : c.threads) {
      joint = r.pcm->join(joint, ts.self);
      if (!r.pcm->defined(joint)) ok = false;
      abs.push_back(count_serve_value(ts.self) > 0 ? "own" : "ownbar");
    }
    if (!ok) abs.push_back("undef");
    abstractions.insert(std::move(abs));
  };

  GlobalConfig init = initial_config(static_cast<int>(programs.size()));
  visited.insert(init);
  record(init);
  frontier.push_back(std::move(init));
  while (!frontier.empty()) {
    GlobalConfig cur = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < static_cast<int>(programs.size()); ++i) {
      auto stepped = apply_thread_step(r, programs, cur, i);
      if (!stepped) continue;
      if (!visited.insert(stepped->first).second) continue;
      record(stepped->first);
      frontier.push_back(std::move(stepped->first));
    }
  }
  return abstractions;
}

LawReport check_simulation_to_quotient(const Resource& r) {
  LawReport report;
  report.suite = "simulation-to-quotient(TL)";
  const auto states = statespace_members(r);
  report.stats["statespace-members"] = states.size();

  for (const auto& t : with_transposed(r.transitions)) {
    auto& check = report.add("preserves-alpha/" + t.name);
    for (const auto& s : states) {
      if (!alpha_related(*r.pcm, s)) continue;
      if (!t.guard(*r.pcm, s)) continue;
      if (!alpha_related(*r.pcm, t.update(*r.pcm, s)))
        report.fail(check, {s.self, s.other},
                    t.name + " breaks the alpha relation");
    }
  }

  // Re-base the same workload on the quotient carrier and compare the
  // reachable ownership abstractions.
  auto& agreement = report.add("rebased-abstraction-agreement");
  const int threads = std::min(2, r.bound);
  std::vector<Program> programs(threads, prog_lock_unlock(r.bound, 1));
  auto base_abs = reachable_alpha_abstractions(r, programs);

  SubPcmWitness w = quotient(r.pcm, seprel_alpha(r.bound));
  Resource rebased = resource_TL_on(w.sub, r.bound);
  auto sub_abs = reachable_alpha_abstractions(rebased, programs);
  if (base_abs != sub_abs) {
    // Witness: an abstraction present in only one of the two runs.
    std::vector<Element> witness;
    for (const auto& abs : base_abs)
      if (!sub_abs.count(abs)) {
        for (const auto& v : abs) witness.push_back(Element::sym(v));
        break;
      }
    if (witness.empty())
      for (const auto& abs : sub_abs)
        if (!base_abs.count(abs)) {
          for (const auto& v : abs) witness.push_back(Element::sym(v));
          break;
        }
    report.fail(agreement, witness,
                "reachable abstractions differ between the carrier and its "
                "quotient");
  }
  report.stats["abstractions"] = base_abs.size();
  report.notes.push_back(
      "on the quotient the alpha-relation conjunct coincides with "
      "separateness and can be elided from specs");
  return report;
}

}  // namespace pcm
