#include "pcm/report_io.hpp"

#include <ostream>
#include <sstream>

namespace pcm {

namespace {

std::string witness_str(const std::vector<Element>& witness) {
  std::string out;
  for (const auto& e : witness) {
    if (!out.empty()) out += ", ";
    out += e.str();
  }
  return out;
}

}  // namespace

void print_report(std::ostream& out, const LawReport& report) {
  out << "suite: " << report.suite << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.law;
    if (!c.passed) {
      if (!c.witness.empty()) out << "  witness: " << witness_str(c.witness);
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
    }
    out << "\n";
  }
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  if (!report.stats.empty()) {
    out << "  stats:";
    for (const auto& [k, v] : report.stats) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
}

nlohmann::json report_to_json(const LawReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry{{"law", c.law},
                         {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) {
      nlohmann::json witness = nlohmann::json::array();
      for (const auto& e : c.witness) witness.push_back(e.str());
      entry["witness"] = std::move(witness);
      if (!c.detail.empty()) entry["detail"] = c.detail;
    }
    checks.push_back(std::move(entry));
  }
  nlohmann::json out{{"suite", report.suite},
                     {"checks", std::move(checks)},
                     {"stats", report.stats}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

std::string config_to_string(const GlobalConfig& config) {
  std::ostringstream out;
  for (std::size_t i = 0; i < config.threads.size(); ++i) {
    const auto& t = config.threads[i];
    if (i) out << " | ";
    out << "T" << i << " pc=" << t.pc << " self=" << t.self.str()
        << " x=" << t.regs.x << " y=" << t.regs.y << " t=" << t.regs.t;
  }
  // Derived shared counters: the dispenser is the number of drawn tickets,
  // the display the value computed from the combined map.
  Element::MapEntries merged;
  bool clash = false;
  for (const auto& t : config.threads)
    for (const auto& [k, v] : t.self.entries())
      if (!merged.emplace(k, v).second) clash = true;
  if (clash) {
    out << " | tdr=? dsp=? (collision)";
  } else {
    out << " | tdr=" << merged.size()
        << " dsp=" << psi_value(Element::map(std::move(merged)));
  }
  return out.str();
}

void print_exploration(std::ostream& out, const ExplorationResult& result) {
  out << "exploration: states=" << result.states << " steps=" << result.steps
      << "\n";
  if (result.passed) {
    out << "result: PASS\n";
    return;
  }
  out << "violated: " << result.violated_check << " (" << result.detail
      << ")\n";
  out << "trace (" << result.trace.size() - 1 << " steps):\n";
  for (const auto& step : result.trace) {
    if (step.thread < 0)
      out << "  init: ";
    else
      out << "  T" << step.thread << " " << step.step << ": ";
    out << config_to_string(step.config) << "\n";
  }
  out << "result: FAIL\n";
}

nlohmann::json exploration_to_json(const ExplorationResult& result) {
  nlohmann::json out{{"suite", "explore"},
                     {"status", result.passed ? "pass" : "fail"},
                     {"stats",
                      {{"states", result.states}, {"steps", result.steps}}}};
  if (!result.passed) {
    out["violated"] = result.violated_check;
    out["detail"] = result.detail;
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& step : result.trace) {
      nlohmann::json threads = nlohmann::json::array();
      for (const auto& t : step.config.threads)
        threads.push_back({{"pc", t.pc},
                           {"self", t.self.str()},
                           {"x", t.regs.x},
                           {"y", t.regs.y},
                           {"t", t.regs.t}});
      trace.push_back({{"thread", step.thread},
                       {"step", step.step},
                       {"threads", std::move(threads)}});
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

}  // namespace pcm
