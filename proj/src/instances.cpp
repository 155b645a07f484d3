#include "pcm/instances.hpp"

namespace pcm {

namespace {

Element map_union(const Element& x, const Element& y, const Element& top) {
  if (x.is_top() || y.is_top()) return top;
  Element::MapEntries merged = x.entries();
  for (const auto& [k, v] : y.entries())
    if (!merged.emplace(k, v).second) return top;
  return Element::map(std::move(merged));
}

void require_map(const Element& x, const char* who) {
  if (!x.is_map()) throw UsageError(std::string(who) + ": map element required");
}

}  // namespace

PcmPtr pcm_O() {
  auto join = [](const Element& x, const Element& y) -> Element {
    if (x.is_top() || y.is_top()) return Element::top();
    if (x.sym() == "own" && y.sym() == "own") return Element::top();
    if (x.sym() == "own" || y.sym() == "own") return own();
    return ownbar();
  };
  return make_pcm("O", {own(), ownbar(), Element::top()}, join, ownbar(),
                  Element::top(),
                  [](const Element& x) { return !x.is_top(); });
}

PcmPtr pcm_natmax(int n) {
  if (n < 1) throw UsageError("pcm_natmax: bound must be positive");
  std::vector<Element> elems;
  for (int i = 1; i <= n; ++i) elems.push_back(Element::nat(i));
  elems.push_back(Element::top());
  auto join = [](const Element& x, const Element& y) -> Element {
    if (x.is_top() || y.is_top()) return Element::top();
    return Element::nat(std::max(x.nat(), y.nat()));
  };
  return make_pcm("natmax(" + std::to_string(n) + ")", std::move(elems), join,
                  Element::nat(1), Element::top(),
                  [](const Element& x) { return !x.is_top(); });
}

PcmPtr pcm_natplus(int cap) {
  if (cap < 0) throw UsageError("pcm_natplus: cap must be non-negative");
  std::vector<Element> elems;
  for (int i = 0; i <= cap; ++i) elems.push_back(Element::nat(i));
  elems.push_back(Element::top());
  auto join = [cap](const Element& x, const Element& y) -> Element {
    if (x.is_top() || y.is_top()) return Element::top();
    const std::uint64_t sum = x.nat() + y.nat();
    if (sum > static_cast<std::uint64_t>(cap)) return Element::top();
    return Element::nat(sum);
  };
  return make_pcm("natplus(" + std::to_string(cap) + ")", std::move(elems),
                  join, Element::nat(0), Element::top(),
                  [](const Element& x) { return !x.is_top(); });
}

PcmPtr pcm_finmap(const std::vector<int>& keys,
                  const std::vector<std::string>& labels, std::string name) {
  if (keys.empty() || labels.empty())
    throw UsageError("pcm_finmap: keys and labels must be non-empty");
  // All maps over the key set: per key, absent or one of the labels.
  std::vector<Element::MapEntries> partial{{}};
  for (int k : keys) {
    std::vector<Element::MapEntries> next;
    for (const auto& m : partial) {
      next.push_back(m);
      for (const auto& l : labels) {
        auto extended = m;
        extended[k] = l;
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<Element> elems;
  elems.reserve(partial.size() + 1);
  for (auto& m : partial) elems.push_back(Element::map(std::move(m)));
  elems.push_back(Element::top());

  auto join = [](const Element& x, const Element& y) {
    return map_union(x, y, Element::top());
  };
  return make_pcm(std::move(name), std::move(elems), join, empty_map(),
                  Element::top(),
                  [](const Element& x) { return !x.is_top(); });
}

PcmPtr pcm_tickets(int bound) {
  if (bound < 1 || bound > 6)
    throw UsageError("pcm_tickets: bound must be in 1..6");
  std::vector<int> keys;
  for (int k = 1; k <= bound; ++k) keys.push_back(k);
  return pcm_finmap(keys, {kWait, kServe, kUsed},
                    "tickets(" + std::to_string(bound) + ")");
}

PcmPtr pcm_hist(int bound) {
  if (bound < 1 || bound > 8)
    throw UsageError("pcm_hist: bound must be in 1..8");
  std::vector<int> keys;
  for (int k = 1; k <= bound; ++k) keys.push_back(k);
  return pcm_finmap(keys, {kOpLock, kOpUnlock},
                    "hist(" + std::to_string(bound) + ")");
}

int fresh(const Element& map) {
  require_map(map, "fresh");
  int candidate = 1;
  for (const auto& [k, v] : map.entries()) {
    if (k != candidate) break;
    ++candidate;
  }
  return candidate;
}

int last_key(const Element& map) {
  require_map(map, "last_key");
  if (map.entries().empty()) return 0;
  return map.entries().rbegin()->first;
}

int count_serve_value(const Element& map) {
  require_map(map, "count_serve_value");
  int count = 0;
  for (const auto& [k, v] : map.entries())
    if (v == kServe) ++count;
  return count;
}

int psi_value(const Element& map) {
  require_map(map, "psi_value");
  int max_used = 0;
  for (const auto& [k, v] : map.entries())
    if (v == kUsed && k > max_used) max_used = k;
  return max_used + 1;
}

bool pred_ordered(const Element& map) {
  require_map(map, "pred_ordered");
  // used < serve < wait over key sets; comparing extrema suffices.
  int max_used = 0, max_serve = 0;
  int min_serve = 0, min_wait = 0;
  for (const auto& [k, v] : map.entries()) {
    if (v == kUsed) {
      max_used = std::max(max_used, k);
    } else if (v == kServe) {
      max_serve = std::max(max_serve, k);
      if (min_serve == 0) min_serve = k;
    } else {
      if (min_wait == 0) min_wait = k;
    }
  }
  if (min_serve != 0 && max_used != 0 && max_used >= min_serve) return false;
  if (min_wait != 0 && max_serve != 0 && max_serve >= min_wait) return false;
  if (min_wait != 0 && max_used != 0 && max_used >= min_wait) return false;
  return true;
}

bool pred_no_gaps(const Element& map) {
  require_map(map, "pred_no_gaps");
  int expected = 1;
  for (const auto& [k, v] : map.entries()) {
    if (k != expected) return false;
    ++expected;
  }
  return true;
}

bool pred_alternating(const Element& hist) {
  require_map(hist, "pred_alternating");
  if (!pred_no_gaps(hist)) return false;
  for (const auto& [k, v] : hist.entries()) {
    const bool odd = (k % 2) == 1;
    if (odd && v != kOpLock) return false;
    if (!odd && v != kOpUnlock) return false;
  }
  return true;
}

Morphism morph_sigma(int bound) {
  return morph_identity(pcm_tickets(bound), "sigma");
}

Morphism morph_psi(int bound) {
  PcmPtr src = pcm_tickets(bound);
  PcmPtr tgt = pcm_natmax(bound + 1);
  return Morphism(src, tgt, "psi",
                  [](const Element& x) -> Element {
                    if (x.is_top()) return Element::top();
                    return Element::nat(psi_value(x));
                  },
                  rel_trivial(src));
}

Morphism morph_filter(int bound, const std::string& label) {
  PcmPtr p = pcm_tickets(bound);
  return Morphism(p, p, "filter-" + label,
                  [label](const Element& x) -> Element {
                    if (x.is_top()) return Element::top();
                    Element::MapEntries kept;
                    for (const auto& [k, v] : x.entries())
                      if (v == label) kept[k] = v;
                    return Element::map(std::move(kept));
                  },
                  rel_trivial(p));
}

Morphism morph_count(int bound) {
  PcmPtr src = pcm_tickets(bound);
  PcmPtr tgt = pcm_natplus(bound);
  return Morphism(src, tgt, "count",
                  [](const Element& x) -> Element {
                    if (x.is_top()) return Element::top();
                    return Element::nat(x.entries().size());
                  },
                  rel_trivial(src));
}

Morphism morph_count_serve(int bound) {
  Morphism composed = compose(morph_count(bound), morph_filter(bound, kServe));
  return Morphism(composed.source(), composed.target(), "count-serve",
                  [&composed](const Element& x) { return composed.apply(x); },
                  composed.seprel());
}

SepRel seprel_alpha(int bound) {
  PcmPtr p = pcm_tickets(bound);
  auto pl = p;
  return SepRel(p, "⊥α",
                [pl](const Element& x, const Element& y) {
                  return is_separate(*pl, x, y) &&
                         count_serve_value(x) + count_serve_value(y) <= 1;
                });
}

Morphism morph_alpha(int bound) {
  PcmPtr src = pcm_tickets(bound);
  return Morphism(src, pcm_O(), "alpha",
                  [](const Element& x) -> Element {
                    if (x.is_top()) return Element::top();
                    return count_serve_value(x) > 0 ? own() : ownbar();
                  },
                  seprel_alpha(bound));
}

SepRel rel_ordered(int bound) {
  return rel_lift_downclosed(pcm_tickets(bound), pred_ordered, "ordered");
}

SepRel rel_upsilon(int bound) {
  return rel_lift_downclosed(pcm_tickets(bound), pred_no_gaps, "upsilon");
}

SepRel seprel_hist(int bound) {
  PcmPtr p = pcm_hist(bound);
  auto pl = p;
  auto one_side = [](const Element& mine, const Element& joint) {
    for (const auto& [t, op] : mine.entries()) {
      if (op != kOpLock) continue;
      if (last_key(joint) <= t) continue;
      auto next = mine.entries().find(t + 1);
      if (next != mine.entries().end() && next->second == kOpUnlock) continue;
      return false;
    }
    return true;
  };
  return SepRel(p, "⊥ω",
                [pl, one_side](const Element& x, const Element& y) {
                  if (!is_separate(*pl, x, y)) return false;
                  const Element joint = pl->join(x, y);
                  return one_side(x, joint) && one_side(y, joint);
                });
}

Morphism morph_hist_own(int bound) {
  PcmPtr src = pcm_hist(bound);
  return Morphism(src, pcm_O(), "hist-own",
                  [](const Element& h) -> Element {
                    if (h.is_top()) return Element::top();
                    const int last = last_key(h);
                    if (last > 0 && h.entries().at(last) == kOpLock)
                      return own();
                    return ownbar();
                  },
                  seprel_hist(bound));
}

}  // namespace pcm
