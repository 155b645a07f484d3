#include "pcm/structure.hpp"

#include <algorithm>
#include <set>

namespace pcm {

void LawReport::merge(const LawReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back(c);
    checks.back().law = prefix + "/" + c.law;
  }
  for (const auto& n : other.notes) notes.push_back(prefix + ": " + n);
  for (const auto& [k, v] : other.stats) stats[prefix + "/" + k] += v;
}

PcmStructure::PcmStructure(std::string name, std::vector<Element> elements,
                           const JoinFn& join, Element unit, Element top,
                           const DefinedFn& defined)
    : name_(std::move(name)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (int i = 0; i < size(); ++i) index_[elements_[i]] = i;

  auto unit_it = index_.find(unit);
  auto top_it = index_.find(top);
  if (unit_it == index_.end() || top_it == index_.end())
    throw UsageError("carrier of '" + name_ + "' must contain unit and top");
  unit_i_ = unit_it->second;
  top_i_ = top_it->second;

  const int n = size();
  table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Element r = join(elements_[a], elements_[b]);
      auto it = index_.find(r);
      if (it == index_.end())
        throw UsageError("join of '" + name_ + "' escapes the carrier at " +
                         elements_[a].str() + " ⊕ " + elements_[b].str());
      table_[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }

  defined_.resize(n);
  for (int i = 0; i < n; ++i) defined_[i] = defined(elements_[i]) ? 1 : 0;
}

bool PcmStructure::contains(const Element& x) const {
  return index_.count(x) != 0;
}

int PcmStructure::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw UsageError("element " + x.str() + " is not in the carrier of '" +
                     name_ + "'");
  return it->second;
}

const Element& PcmStructure::join(const Element& x, const Element& y) const {
  return elements_[join_index(index_of(x), index_of(y))];
}

bool PcmStructure::normal() const {
  for (int i = 0; i < size(); ++i)
    if (!defined_index(i) && i != top_i_) return false;
  return true;
}

PcmPtr make_pcm(std::string name, std::vector<Element> elements,
                const PcmStructure::JoinFn& join, Element unit, Element top,
                const PcmStructure::DefinedFn& defined) {
  return std::make_shared<const PcmStructure>(
      std::move(name), std::move(elements), join, std::move(unit),
      std::move(top), defined);
}

bool is_separate(const PcmStructure& p, const Element& x, const Element& y) {
  return p.defined_index(p.join_index(p.index_of(x), p.index_of(y)));
}

PcmPtr product(const PcmPtr& p, const PcmPtr& q) {
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(p->size()) * q->size());
  for (const auto& a : p->elements())
    for (const auto& b : q->elements()) elems.push_back(Element::pair(a, b));

  auto pl = p;
  auto ql = q;
  auto join = [pl, ql](const Element& x, const Element& y) {
    return Element::pair(pl->join(x.first(), y.first()),
                         ql->join(x.second(), y.second()));
  };
  auto defined = [pl, ql](const Element& x) {
    return pl->defined(x.first()) && ql->defined(x.second());
  };
  return make_pcm(p->name() + "×" + q->name(), std::move(elems), join,
                  Element::pair(p->unit(), q->unit()),
                  Element::pair(p->top(), q->top()), defined);
}

bool same_structure(const PcmStructure& p, const PcmStructure& q) {
  if (&p == &q) return true;
  if (p.size() != q.size()) return false;
  if (p.elements() != q.elements()) return false;
  if (p.unit_index() != q.unit_index() || p.top_index() != q.top_index())
    return false;
  for (int a = 0; a < p.size(); ++a) {
    if (p.defined_index(a) != q.defined_index(a)) return false;
    for (int b = 0; b < p.size(); ++b)
      if (p.join_index(a, b) != q.join_index(a, b)) return false;
  }
  return true;
}

bool subj_state_ok(const PcmStructure& p, const SubjState& s) {
  return is_separate(p, s.self, s.other);
}

std::vector<SubjState> all_subj_states(const PcmStructure& p) {
  std::vector<SubjState> out;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.separate_index(a, b)) out.push_back({p.element(a), p.element(b)});
  return out;
}

std::vector<std::pair<SubjState, SubjState>> star_split(const PcmStructure& p,
                                                        const SubjState& s) {
  const int self = p.index_of(s.self);
  const int other = p.index_of(s.other);
  std::set<std::pair<SubjState, SubjState>> seen;
  std::vector<std::pair<SubjState, SubjState>> out;
  for (int a1 = 0; a1 < p.size(); ++a1) {
    for (int a2 = 0; a2 < p.size(); ++a2) {
      if (!p.separate_index(a1, a2)) continue;
      if (p.join_index(a1, a2) != self) continue;
      SubjState s1{p.element(a1), p.element(p.join_index(a2, other))};
      SubjState s2{p.element(a2), p.element(p.join_index(a1, other))};
      if (seen.emplace(s1, s2).second) out.emplace_back(s1, s2);
    }
  }
  return out;
}

LawReport check_pcm_laws(const PcmPtr& p) {
  LawReport report;
  report.suite = "pcm-laws(" + p->name() + ")";
  const int n = p->size();
  report.stats["elements"] = static_cast<std::uint64_t>(n);

  auto& comm = report.add("commutativity");
  auto& assoc = report.add("associativity");
  auto& unit = report.add("unit");
  auto& unit_def = report.add("unit-defined");
  auto& top_undef = report.add("top-undefined");
  auto& top_abs = report.add("top-absorbing");
  auto& closure = report.add("definedness-closure");

  if (p->defined_index(p->top_index()))
    report.fail(top_undef, {p->top()}, "top is in the defined set");
  if (!p->defined_index(p->unit_index()))
    report.fail(unit_def, {p->unit()}, "unit is not in the defined set");

  const int ui = p->unit_index();
  const int ti = p->top_index();
  for (int a = 0; a < n; ++a) {
    if (p->join_index(a, ui) != a || p->join_index(ui, a) != a)
      report.fail(unit, {p->element(a)}, "x ⊕ \U0001d7d9 ≠ x");
    if (p->join_index(a, ti) != ti || p->join_index(ti, a) != ti)
      report.fail(top_abs, {p->element(a)}, "x ⊕ top ≠ top");
  }

  std::uint64_t pairs = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ++pairs;
      if (p->join_index(a, b) != p->join_index(b, a))
        report.fail(comm, {p->element(a), p->element(b)});
      if (p->defined_index(p->join_index(a, b)) &&
          !(p->defined_index(a) && p->defined_index(b)))
        report.fail(closure, {p->element(a), p->element(b)},
                    "x ⊕ y defined but a factor is not");
    }
  }
  report.stats["pairs"] = pairs;

  std::uint64_t triples = 0;
  for (int a = 0; a < n && assoc.passed; ++a) {
    for (int b = 0; b < n && assoc.passed; ++b) {
      const int ab = p->join_index(a, b);
      for (int c = 0; c < n; ++c) {
        ++triples;
        if (p->join_index(ab, c) != p->join_index(a, p->join_index(b, c))) {
          report.fail(assoc, {p->element(a), p->element(b), p->element(c)});
          break;
        }
      }
    }
  }
  report.stats["triples"] = triples;

  if (!p->normal()) {
    int undefined_count = 0;
    for (int i = 0; i < n; ++i)
      if (!p->defined_index(i) && i != p->top_index()) ++undefined_count;
    report.notes.push_back("non-normal: " + std::to_string(undefined_count) +
                           " undefined element(s) besides top");
  }
  return report;
}

}  // namespace pcm
