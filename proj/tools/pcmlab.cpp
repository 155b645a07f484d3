// pcmlab: law suites, invertibility checks, quotient validation and
// ticket-lock exploration over the built-in registry of structures.
//
// Exit codes: 0 all checks passed, 1 a violation was found, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pcm/report_io.hpp"
#include "pcm/subpcm.hpp"
#include "pcm/ticketlock.hpp"

using namespace pcm;

namespace {

struct Output {
  std::string format = "text";
  std::string path;
  nlohmann::json json = nlohmann::json::array();
  std::ostringstream text;

  void add(const LawReport& report) {
    print_report(text, report);
    text << "\n";
    json.push_back(report_to_json(report));
  }
  void add_exploration(const ExplorationResult& result) {
    print_exploration(text, result);
    text << "\n";
    json.push_back(exploration_to_json(result));
  }
  int finish(bool ok) {
    std::string body = format == "json" ? json.dump(2) + "\n" : text.str();
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
      }
      out << body;
    }
    return ok ? 0 : 1;
  }
};

using SuiteFn = std::function<LawReport(int bound)>;

Morphism alpha_with_trivial_seprel(int bound) {
  Morphism alpha = morph_alpha(bound);
  return alpha.with_seprel(rel_trivial(alpha.source()));
}

Morphism equalizer_framing_mutant() {
  auto n = pcm_natmax(2);
  auto nn = product(n, n);
  return morph_proj1(nn, n).with_seprel(
      equalizer(morph_proj1(nn, n), morph_proj2(nn, n)));
}

std::map<std::string, SuiteFn> law_suites() {
  std::map<std::string, SuiteFn> suites;
  suites["pcm-O"] = [](int) { return check_pcm_laws(pcm_O()); };
  suites["pcm-natmax"] = [](int b) { return check_pcm_laws(pcm_natmax(b)); };
  suites["pcm-tickets"] = [](int b) { return check_pcm_laws(pcm_tickets(b)); };
  suites["pcm-hist"] = [](int b) { return check_pcm_laws(pcm_hist(b)); };
  suites["pcm-OxO"] = [](int) {
    return check_pcm_laws(product(pcm_O(), pcm_O()));
  };

  suites["seprel-unit"] = [](int) {
    return check_seprel_laws(rel_unit(pcm_O()));
  };
  suites["seprel-trivial"] = [](int b) {
    return check_seprel_laws(rel_trivial(pcm_tickets(b)));
  };
  suites["seprel-intersect"] = [](int b) {
    return check_seprel_laws(rel_intersect(seprel_alpha(b), rel_ordered(b)));
  };
  suites["seprel-join"] = [](int) {
    return check_seprel_laws(rel_join(pcm_O()));
  };
  suites["seprel-alpha"] = [](int b) {
    return check_seprel_laws(seprel_alpha(b));
  };
  suites["seprel-hist"] = [](int b) {
    return check_seprel_laws(seprel_hist(b));
  };
  suites["seprel-ordered"] = [](int b) {
    LawReport r = check_seprel_laws(rel_ordered(b));
    r.merge(check_downward_closed(pcm_tickets(b), pred_ordered, "ordered"),
            "lift");
    return r;
  };
  suites["seprel-upsilon"] = [](int b) {
    return check_seprel_laws(rel_upsilon(b));
  };
  suites["seprel-kernel-alpha"] = [](int b) {
    return check_seprel_laws(kernel(morph_alpha(b)));
  };
  suites["seprel-equalizer-alpha"] = [](int b) {
    Morphism alpha = morph_alpha(b);
    return check_seprel_laws(
        equalizer(alpha, morph_const_unit(alpha.source(), pcm_O())));
  };

  suites["morphism-id"] = [](int b) {
    return check_morphism_laws(morph_identity(pcm_tickets(b)));
  };
  suites["morphism-const-unit"] = [](int) {
    return check_morphism_laws(morph_const_unit(pcm_O(), pcm_O()));
  };
  suites["morphism-proj1"] = [](int) {
    auto O = pcm_O();
    return check_morphism_laws(morph_proj1(product(O, O), O));
  };
  suites["morphism-proj2"] = [](int) {
    auto O = pcm_O();
    return check_morphism_laws(morph_proj2(product(O, O), O));
  };
  suites["morphism-join"] = [](int) {
    return check_morphism_laws(morph_join(pcm_O()));
  };
  suites["morphism-sigma"] = [](int b) {
    return check_morphism_laws(morph_sigma(b));
  };
  suites["morphism-psi"] = [](int b) {
    return check_morphism_laws(morph_psi(b));
  };
  suites["morphism-filter-serve"] = [](int b) {
    return check_morphism_laws(morph_filter(b, kServe));
  };
  suites["morphism-count"] = [](int b) {
    return check_morphism_laws(morph_count(b));
  };
  suites["morphism-count-serve"] = [](int b) {
    return check_morphism_laws(morph_count_serve(b));
  };
  suites["morphism-alpha"] = [](int b) {
    return check_morphism_laws(morph_alpha(b));
  };
  suites["morphism-hist-own"] = [](int b) {
    return check_morphism_laws(morph_hist_own(b));
  };
  suites["morphism-alpha-mutant"] = [](int b) {
    return check_morphism_laws(alpha_with_trivial_seprel(b));
  };

  suites["cancel-O"] = [](int) { return check_cancellative(pcm_O()); };
  suites["cancel-natmax"] = [](int b) {
    return check_cancellative(pcm_natmax(std::max(b, 2)));
  };
  suites["cancel-tickets"] = [](int b) {
    return check_cancellative(pcm_tickets(b));
  };

  suites["category"] = [](int b) {
    std::vector<Morphism> registry;
    registry.push_back(morph_identity(pcm_tickets(b)));
    registry.push_back(morph_sigma(b));
    registry.push_back(morph_filter(b, kServe));
    registry.push_back(morph_filter(b, kWait));
    registry.push_back(morph_count(b));
    registry.push_back(morph_psi(b));
    registry.push_back(morph_alpha(b));
    registry.push_back(morph_const_unit(pcm_O(), pcm_O()));
    return check_category_laws(registry);
  };

  suites["framing-alpha"] = [](int b) {
    const int bound = std::min(b, 2);  // exhaustive split sweeps
    return check_framing_lemmas(seprel_alpha(bound), morph_alpha(bound));
  };
  suites["framing-mutant"] = [](int) {
    Morphism m = equalizer_framing_mutant();
    return check_framing_lemmas(m.seprel(), m);
  };
  return suites;
}

std::map<std::string, SuiteFn> invert_suites() {
  std::map<std::string, SuiteFn> suites;
  suites["rel-trivial"] = [](int b) {
    return check_invertible_rel(rel_trivial(pcm_tickets(b)));
  };
  suites["rel-alpha"] = [](int b) {
    return check_invertible_rel(seprel_alpha(b));
  };
  suites["rel-hist"] = [](int b) {
    return check_invertible_rel(seprel_hist(b));
  };
  suites["rel-ordered"] = [](int b) {
    return check_invertible_rel(rel_ordered(b));
  };
  suites["rel-kernel-alpha"] = [](int b) {
    return check_invertible_rel(kernel(morph_alpha(b)));
  };
  suites["rel-equalizer-O"] = [](int) {
    auto O = pcm_O();
    auto OO = product(O, O);
    return check_invertible_rel(
        equalizer(morph_proj1(OO, O), morph_proj2(OO, O)));
  };
  suites["rel-equalizer-natmax"] = [](int b) {
    auto N = pcm_natmax(std::max(b, 2));
    auto NN = product(N, N);
    return check_invertible_rel(
        equalizer(morph_proj1(NN, N), morph_proj2(NN, N)));
  };

  suites["morph-alpha"] = [](int b) {
    return check_invertible_morph(morph_alpha(b));
  };
  suites["morph-hist-own"] = [](int b) {
    return check_invertible_morph(morph_hist_own(b));
  };
  suites["morph-alpha-iota"] = [](int b) {
    Morphism alpha = morph_alpha(b);
    SubPcmWitness w = quotient(alpha.source(), alpha.seprel());
    return check_inject_invertibility(alpha, w);
  };
  suites["morph-count-serve"] = [](int b) {
    return check_invertible_morph(morph_count_serve(std::min(b, 2)));
  };
  suites["morph-arrow-alpha"] = [](int b) {
    const int bound = std::min(b, 2);
    return check_invertible_morph(
        arrow_product(morph_alpha(bound), morph_alpha(bound)));
  };
  suites["morph-tensor-diag"] = [](int) {
    auto O = pcm_O();
    return check_invertible_morph(
        tensor(morph_identity(O), morph_identity(O)));
  };
  return suites;
}

int list_and_fail(const std::string& kind,
                  const std::map<std::string, SuiteFn>& suites,
                  const std::string& name) {
  std::cerr << "unknown " << kind << " '" << name << "'; available:\n";
  for (const auto& [k, v] : suites) std::cerr << "  " << k << "\n";
  return 2;
}

// Reproduces the gap counterexample with domains {2}, {1}, {3}: the first
// two maps chain, yet the last two do not, so the lifted relation is not
// associative. Verified by evaluation before printing.
LawReport counterexample_upsilon() {
  SepRel upsilon = rel_upsilon(3);
  const auto& p = *upsilon.base();
  Element x = Element::map({{2, kWait}});
  Element y = Element::map({{1, kWait}});
  Element z = Element::map({{3, kWait}});

  LawReport report;
  report.suite = "counterexample(upsilon)";
  auto& assoc = report.add("associativity");
  const bool antecedent = tern_holds(upsilon, x, y, z);
  const bool consequent =
      upsilon.holds(x, p.join(y, z)) && upsilon.holds(y, z);
  if (antecedent && !consequent)
    report.fail(assoc, {x, y, z},
                "x υ y and (x ⊕ y) υ z hold, but y υ z "
                "fails: dom(y ⊕ z) has a gap");
  report.notes.push_back("witness domains: {2}, {1}, {3}");
  return report;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcmlab: exhaustive algebra checking for topped partial "
               "commutative monoids and a bounded ticket-lock explorer"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to a file");

  auto* laws = app.add_subcommand("laws", "Run a law suite by name");
  std::string laws_name;
  int laws_bound = 3;
  laws->add_option("name", laws_name, "Suite name")->required();
  laws->add_option("--bound", laws_bound, "Carrier bound")
      ->check(CLI::Range(1, 6));

  auto* invert = app.add_subcommand("invert", "Run an invertibility check");
  std::string invert_name;
  int invert_bound = 3;
  invert->add_option("name", invert_name, "Check name")->required();
  invert->add_option("--bound", invert_bound, "Carrier bound")
      ->check(CLI::Range(1, 6));

  auto* subpcm = app.add_subcommand(
      "subpcm", "Build a quotient and validate the sub-PCM axioms");
  std::string subpcm_pcm, subpcm_rel;
  int subpcm_bound = 3;
  subpcm->add_option("pcm", subpcm_pcm, "tickets | hist | O | OxO")
      ->required();
  subpcm->add_option("rel", subpcm_rel, "alpha | hist | ordered | trivial")
      ->required();
  subpcm->add_option("--bound", subpcm_bound, "Carrier bound")
      ->check(CLI::Range(1, 6));

  auto* explore_cmd =
      app.add_subcommand("explore", "Exhaustive ticket-lock interleavings");
  int threads = 2, rounds = 1, explore_bound = 4;
  std::string mutate;
  std::string checks_csv = "mutex,statespace,seprel,outline";
  explore_cmd->add_option("--threads", threads, "Thread count")
      ->check(CLI::Range(1, 4));
  explore_cmd->add_option("--rounds", rounds, "Lock/unlock rounds per thread")
      ->check(CLI::Range(1, 4));
  explore_cmd->add_option("--bound", explore_bound, "Ticket carrier bound")
      ->check(CLI::Range(1, 6));
  explore_cmd->add_option("--mutate", mutate,
                          "Replace the lock step: lock-nowait | lock-blind");
  explore_cmd->add_option(
      "--check", checks_csv,
      "Comma list of mutex,statespace,seprel,outline,stability,simulation");

  auto* cex = app.add_subcommand("counterexample",
                                 "Print a curated negative exhibit");
  std::string cex_name;
  cex->add_option("name", cex_name, "upsilon")->required();

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.format = format;
  out.path = out_path;

  try {
    if (*laws) {
      auto suites = law_suites();
      auto it = suites.find(laws_name);
      if (it == suites.end()) return list_and_fail("suite", suites, laws_name);
      LawReport report = it->second(laws_bound);
      out.add(report);
      return out.finish(report.all_passed());
    }

    if (*invert) {
      auto suites = invert_suites();
      auto it = suites.find(invert_name);
      if (it == suites.end())
        return list_and_fail("check", suites, invert_name);
      LawReport report = it->second(invert_bound);
      out.add(report);
      return out.finish(report.all_passed());
    }

    if (*subpcm) {
      PcmPtr base;
      if (subpcm_pcm == "tickets")
        base = pcm_tickets(subpcm_bound);
      else if (subpcm_pcm == "hist")
        base = pcm_hist(subpcm_bound);
      else if (subpcm_pcm == "O")
        base = pcm_O();
      else if (subpcm_pcm == "OxO")
        base = product(pcm_O(), pcm_O());
      else {
        std::cerr << "unknown pcm '" << subpcm_pcm
                  << "' (tickets | hist | O | OxO)\n";
        return 2;
      }

      std::optional<SepRel> rel;
      std::optional<Morphism> abstraction;
      if (subpcm_rel == "alpha" && subpcm_pcm == "tickets") {
        rel = seprel_alpha(subpcm_bound);
        abstraction = morph_alpha(subpcm_bound);
      } else if (subpcm_rel == "hist" && subpcm_pcm == "hist") {
        rel = seprel_hist(subpcm_bound);
        abstraction = morph_hist_own(subpcm_bound);
      } else if (subpcm_rel == "ordered" && subpcm_pcm == "tickets") {
        rel = rel_ordered(subpcm_bound);
      } else if (subpcm_rel == "trivial") {
        rel = rel_trivial(base);
      } else {
        std::cerr << "relation '" << subpcm_rel << "' does not apply to '"
                  << subpcm_pcm << "'\n";
        return 2;
      }

      SubPcmWitness w = quotient(base, *rel);
      LawReport report = check_subpcm_axioms(w);
      report.merge(check_quotient_coincidence(w, *rel), "coincidence");
      out.add(report);
      bool ok = report.all_passed();
      if (abstraction) {
        LawReport inj = check_inject_invertibility(*abstraction, w);
        ok = ok && inj.all_passed();
        out.add(inj);
      }
      return out.finish(ok);
    }

    if (*explore_cmd) {
      bool ok = true;
      ExploreOptions opts{false, false, false, false};
      bool run_explore = false, run_stability = false, run_simulation = false;
      for (const auto& c : split_list(checks_csv)) {
        if (c == "mutex") {
          opts.mutex = run_explore = true;
        } else if (c == "statespace") {
          opts.statespace = run_explore = true;
        } else if (c == "seprel") {
          opts.seprel = run_explore = true;
        } else if (c == "outline") {
          opts.outline = run_explore = true;
        } else if (c == "stability") {
          run_stability = true;
        } else if (c == "simulation") {
          run_simulation = true;
        } else {
          std::cerr << "unknown check '" << c
                    << "' (mutex, statespace, seprel, outline, stability, "
                       "simulation)\n";
          return 2;
        }
      }

      Resource resource = resource_TL(explore_bound);
      if (!mutate.empty()) {
        if (mutate == "lock-nowait")
          resource.transitions[1] = tr_lock_nowait();
        else if (mutate == "lock-blind")
          resource.transitions[1] = tr_lock_blind(explore_bound);
        else {
          std::cerr << "unknown mutant '" << mutate
                    << "' (lock-nowait | lock-blind)\n";
          return 2;
        }
      }

      if (run_explore) {
        std::vector<Program> programs(
            static_cast<std::size_t>(threads),
            mutate.empty()
                ? prog_lock_unlock(explore_bound, rounds)
                : prog_lock_unlock_mutant(explore_bound, rounds, mutate));
        ExplorationResult result = explore(resource, programs, opts);
        ok = ok && result.passed;
        out.add_exploration(result);
      }
      if (run_stability) {
        LawReport preservation = check_statespace_preservation(resource);
        ok = ok && preservation.all_passed();
        out.add(preservation);
        LawReport stability = check_stability(resource);
        ok = ok && stability.all_passed();
        out.add(stability);
      }
      if (run_simulation) {
        LawReport simulation = check_simulation_to_quotient(resource);
        ok = ok && simulation.all_passed();
        out.add(simulation);
      }
      return out.finish(ok);
    }

    if (*cex) {
      if (cex_name != "upsilon") {
        std::cerr << "unknown counterexample '" << cex_name
                  << "' (available: upsilon)\n";
        return 2;
      }
      LawReport report = counterexample_upsilon();
      out.add(report);
      out.finish(false);
      // The exhibit is supposed to find the violation.
      return report.all_passed() ? 2 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
