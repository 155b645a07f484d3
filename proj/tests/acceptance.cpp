// Acceptance suite: runs every top-level requirement end to end and prints
// one pass/fail line per criterion. Exit code 0 iff all criteria hold.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "pcm/report_io.hpp"
#include "pcm/subpcm.hpp"
#include "pcm/ticketlock.hpp"

using namespace pcm;

namespace {

struct Recorder {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
  void require_suite(const LawReport& report) {
    if (!report.all_passed()) {
      ok = false;
      failures.push_back("suite failed: " + report.suite);
      for (const auto& c : report.checks)
        if (!c.passed) failures.push_back("  check: " + c.law);
    }
  }
};

Element tmap(Element::MapEntries e) { return Element::map(std::move(e)); }

void criterion1(Recorder& rec) {
  const auto start = std::chrono::steady_clock::now();
  rec.require_suite(check_pcm_laws(pcm_O()));
  rec.require_suite(check_pcm_laws(pcm_natmax(5)));
  rec.require_suite(check_pcm_laws(pcm_tickets(3)));
  rec.require_suite(check_pcm_laws(pcm_hist(3)));
  LawReport prod = check_pcm_laws(product(pcm_O(), pcm_O()));
  rec.require_suite(prod);
  bool noted = false;
  for (const auto& n : prod.notes)
    if (n.find("non-normal") != std::string::npos) noted = true;
  rec.require(noted, "non-normality of OxO not detected");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  rec.require(secs < 60.0, "pcm suites exceeded 60 s");
}

void criterion2(Recorder& rec) {
  auto T = pcm_tickets(3);
  Morphism alpha = morph_alpha(3);
  std::vector<SepRel> relations;
  relations.push_back(rel_unit(pcm_O()));
  relations.push_back(rel_trivial(T));
  relations.push_back(rel_intersect(seprel_alpha(3), rel_ordered(3)));
  relations.push_back(rel_join(pcm_O()));
  relations.push_back(seprel_alpha(3));
  relations.push_back(seprel_hist(3));
  relations.push_back(rel_ordered(3));
  relations.push_back(kernel(alpha));
  relations.push_back(equalizer(alpha, morph_const_unit(T, pcm_O())));
  for (const auto& r : relations) {
    LawReport report = check_seprel_laws(r);
    rec.require_suite(report);
    const LawCheck* closure = report.find("unit-closure");
    rec.require(closure && closure->passed,
                "unit closure missing for " + r.name());
  }

  // The no-gaps lift fails associativity and only associativity.
  SepRel upsilon = rel_upsilon(3);
  LawReport ups = check_seprel_laws(upsilon);
  rec.require(!ups.all_passed(), "upsilon unexpectedly passed");
  for (const auto& c : ups.checks)
    rec.require(c.passed == (c.law != "associativity"),
                "upsilon law " + c.law + " has the wrong verdict");
  const LawCheck* assoc = ups.find("associativity");
  rec.require(assoc && assoc->witness.size() == 3,
              "upsilon witness missing");
  if (assoc && assoc->witness.size() == 3)
    rec.require(tern_holds(upsilon, assoc->witness[0], assoc->witness[1],
                           assoc->witness[2]),
                "swept upsilon witness does not replay");

  // The reported exhibit: domains {2}, {1}, {3}.
  Element x = tmap({{2, kWait}});
  Element y = tmap({{1, kWait}});
  Element z = tmap({{3, kWait}});
  rec.require(tern_holds(upsilon, x, y, z),
              "gap exhibit antecedent does not hold");
  rec.require(!upsilon.holds(y, z), "gap exhibit consequent not violated");
}

void criterion3(Recorder& rec) {
  auto O = pcm_O();
  auto OO = product(O, O);
  rec.require_suite(check_morphism_laws(morph_identity(pcm_tickets(3))));
  rec.require_suite(check_morphism_laws(morph_const_unit(O, O)));
  rec.require_suite(check_morphism_laws(morph_proj1(OO, O)));
  rec.require_suite(check_morphism_laws(morph_proj2(OO, O)));
  rec.require_suite(check_morphism_laws(morph_join(O)));
  rec.require_suite(check_morphism_laws(morph_sigma(3)));
  rec.require_suite(check_morphism_laws(morph_psi(3)));
  for (const char* label : {kWait, kServe, kUsed})
    rec.require_suite(check_morphism_laws(morph_filter(3, label)));
  rec.require_suite(check_morphism_laws(morph_count(3)));
  rec.require_suite(check_morphism_laws(morph_count_serve(3)));
  rec.require_suite(check_morphism_laws(morph_alpha(3)));
  rec.require_suite(check_morphism_laws(morph_hist_own(3)));

  Morphism alpha = morph_alpha(3);
  Morphism mistyped = alpha.with_seprel(rel_trivial(alpha.source()));
  LawReport bad = check_morphism_laws(mistyped);
  rec.require(!bad.all_passed(), "mistyped alpha unexpectedly passed");
  const LawCheck* img = bad.find("image-separateness");
  const LawCheck* dist = bad.find("distributivity");
  rec.require(img && !img->passed, "image separateness did not fail");
  rec.require(dist && !dist->passed, "distributivity did not fail");
  if (img && img->witness.size() == 2)
    rec.require(count_serve_value(img->witness[0]) == 1 &&
                    count_serve_value(img->witness[1]) == 1,
                "witness is not a two-serve pair");
  else
    rec.require(false, "two-serve witness missing");
}

void criterion4(Recorder& rec) {
  rec.require_suite(check_invertible_rel(rel_trivial(pcm_tickets(3))));
  rec.require_suite(check_invertible_rel(seprel_alpha(3)));
  rec.require_suite(check_invertible_rel(seprel_hist(3)));

  Morphism alpha = morph_alpha(3);
  rec.require_suite(check_invertible_morph(alpha));
  rec.require_suite(check_invertible_morph(morph_hist_own(3)));
  SubPcmWitness w = quotient(alpha.source(), alpha.seprel());
  rec.require_suite(check_inject_invertibility(alpha, w));

  // Closure under composition and arrow products.
  rec.require_suite(check_invertible_morph(morph_count_serve(2)));
  rec.require_suite(
      check_invertible_morph(arrow_product(morph_alpha(2), morph_alpha(2))));

  // At least one tensor-product instance fails.
  auto O = pcm_O();
  LawReport tensor_report =
      check_invertible_morph(tensor(morph_identity(O), morph_identity(O)));
  rec.require(!tensor_report.all_passed(),
              "diagonal tensor unexpectedly invertible");
  const LawCheck* split = tensor_report.find("split-surjectivity");
  rec.require(split && !split->passed && split->witness.size() == 3,
              "tensor witness missing");

  // Equalizers invert over the cancellative O.
  auto OO = product(O, O);
  rec.require_suite(check_invertible_rel(
      equalizer(morph_proj1(OO, O), morph_proj2(OO, O))));
  rec.require_suite(check_cancellative(O));

  // natmax is not cancellative, with a replayable witness.
  auto N = pcm_natmax(5);
  LawReport cancel = check_cancellative(N);
  rec.require(!cancel.all_passed(), "natmax unexpectedly cancellative");
  const LawCheck* c = cancel.find("cancellativity");
  if (c && c->witness.size() == 3) {
    rec.require(N->join(c->witness[0], c->witness[1]) ==
                        N->join(c->witness[0], c->witness[2]) &&
                    c->witness[1] != c->witness[2],
                "cancellativity witness does not replay");
  } else {
    rec.require(false, "cancellativity witness missing");
  }
}

void criterion5(Recorder& rec) {
  auto U = pcm_tickets(3);
  SepRel alpha = seprel_alpha(3);
  SubPcmWitness w = quotient(U, alpha);
  rec.require_suite(check_subpcm_axioms(w));  // Def axioms + sub PCM laws
  rec.require(w.sub->normal(), "quotient is not normal");
  rec.require_suite(check_quotient_coincidence(w, alpha));

  auto OO = product(pcm_O(), pcm_O());
  SubPcmWitness norm = quotient(OO, rel_trivial(OO));
  rec.require(norm.sub->normal(), "trivial quotient did not normalize OxO");
  rec.require_suite(check_subpcm_axioms(norm));
  for (const auto& e : OO->elements())
    if (OO->defined(e))
      rec.require(norm.sub->contains(e),
                  "normalization dropped a defined element");
}

void criterion6(Recorder& rec) {
  rec.require_suite(check_framing_lemmas(seprel_alpha(2), morph_alpha(2)));

  auto N = pcm_natmax(2);
  auto NN = product(N, N);
  Morphism mutant = morph_proj1(NN, N).with_seprel(
      equalizer(morph_proj1(NN, N), morph_proj2(NN, N)));
  rec.require(!check_invertible_rel(mutant.seprel()).all_passed(),
              "mutant seprel unexpectedly invertible");
  LawReport framing = check_framing_lemmas(mutant.seprel(), mutant);
  const LawCheck* bwd = framing.find("morphism-split-bwd");
  rec.require(bwd && !bwd->passed,
              "non-invertible mutant kept the backward direction");
}

void criterion7(Recorder& rec) {
  const auto start = std::chrono::steady_clock::now();
  Resource r = resource_TL(4);
  std::vector<Program> programs(2, prog_lock_unlock(4, 1));
  ExplorationResult run = explore(r, programs, ExploreOptions{});
  rec.require(run.passed, "exploration violated: " + run.violated_check +
                              " (" + run.detail + ")");

  // Guard-dropped lock: mutual exclusion breaks with a replayable trace.
  std::vector<Program> mutants(2, prog_lock_unlock_mutant(4, 1,
                                                          "lock-nowait"));
  ExploreOptions mutex_only{true, false, false, false};
  ExplorationResult broken = explore(r, mutants, mutex_only);
  rec.require(!broken.passed && broken.violated_check == "mutex",
              "mutant did not violate mutual exclusion");
  if (!broken.passed) {
    GlobalConfig current = initial_config(2);
    bool replayed = !broken.trace.empty() &&
                    broken.trace.front().thread == -1 &&
                    current == broken.trace.front().config;
    for (std::size_t i = 1; replayed && i < broken.trace.size(); ++i) {
      auto next =
          apply_thread_step(r, mutants, current, broken.trace[i].thread);
      replayed = next.has_value() && next->first == broken.trace[i].config &&
                 next->second == broken.trace[i].step;
      if (replayed) current = next->first;
    }
    replayed = replayed &&
               config_violation(r, mutants, current, mutex_only).has_value();
    rec.require(replayed, "mutant trace does not replay");
  }

  // Appendix-style stability over transpositions and their closure.
  rec.require_suite(check_statespace_preservation(r));
  rec.require_suite(check_stability(r));

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  rec.require(secs < 10.0, "exploration criterion exceeded 10 s");
}

void criterion8(Recorder& rec) {
  LawReport sim = check_simulation_to_quotient(resource_TL(3));
  rec.require_suite(sim);
  const LawCheck* agree = sim.find("rebased-abstraction-agreement");
  rec.require(agree && agree->passed,
              "rebased exploration abstractions differ");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Recorder&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "pcm law suites (O, natmax(5), tickets(3), hist(3), OxO)",
       criterion1},
      {2, "seprel suites, unit closure, upsilon fails only associativity",
       criterion2},
      {3, "morphism suites and the mistyped-alpha mutant", criterion3},
      {4, "invertibility suites, tensor and cancellativity exhibits",
       criterion4},
      {5, "quotient axioms, normality, separateness coincidence", criterion5},
      {6, "framing lemmas at tickets(2) and the non-invertible mutant",
       criterion6},
      {7, "ticket-lock exploration, mutant trace, stability", criterion7},
      {8, "simulation side condition and rebased agreement", criterion8},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Recorder rec;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(rec);
    } catch (const std::exception& e) {
      rec.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %d: %s (%.2fs)\n", rec.ok ? "PASS" : "FAIL",
                criterion.id, criterion.title, secs);
    if (!rec.ok) {
      ++failed;
      for (const auto& f : rec.failures)
        std::printf("       - %s\n", f.c_str());
    }
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
