#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/element.hpp"

namespace pcm {

/// One law verdict. A failed check always carries the witness elements that
/// reproduce the violation, in the order the law quantifies them.
struct LawCheck {
  std::string law;
  bool passed = true;
  std::vector<Element> witness;
  std::string detail;
};

/// Result of an exhaustive check suite over a finite carrier.
struct LawReport {
  std::string suite;
  // deque: `add` hands out references that must survive later additions
  std::deque<LawCheck> checks;
  std::vector<std::string> notes;
  std::map<std::string, std::uint64_t> stats;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const LawCheck* find(std::string_view law) const {
    for (const auto& c : checks)
      if (c.law == law) return &c;
    return nullptr;
  }

  LawCheck& add(std::string law) {
    checks.emplace_back();
    checks.back().law = std::move(law);
    return checks.back();
  }

  void fail(LawCheck& check, std::vector<Element> witness,
            std::string detail = "") {
    if (check.passed) {
      check.passed = false;
      check.witness = std::move(witness);
      check.detail = std::move(detail);
    }
  }

  /// Absorbs `other`'s checks under `prefix/`, plus its notes and stats.
  void merge(const LawReport& other, const std::string& prefix);
};

}  // namespace pcm
