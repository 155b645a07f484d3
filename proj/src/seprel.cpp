#include "pcm/seprel.hpp"

namespace pcm {

SepRel::SepRel(PcmPtr base, std::string name, const HoldsFn& holds)
    : base_(std::move(base)), name_(std::move(name)) {
  const int n = base_->size();
  bits_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (!base_->defined_index(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!base_->defined_index(b)) continue;
      if (holds(base_->element(a), base_->element(b)))
        bits_[static_cast<std::size_t>(a) * n + b] = 1;
    }
  }
}

bool SepRel::holds(const Element& x, const Element& y) const {
  return holds_index(base_->index_of(x), base_->index_of(y));
}

SepRel rel_unit(const PcmPtr& p) {
  const Element unit = p->unit();
  return SepRel(p, "unit-rel(" + p->name() + ")",
                [unit](const Element& x, const Element& y) {
                  return x == unit && y == unit;
                });
}

SepRel rel_trivial(const PcmPtr& p) {
  auto pl = p;
  return SepRel(p, "trivial(" + p->name() + ")",
                [pl](const Element& x, const Element& y) {
                  return is_separate(*pl, x, y);
                });
}

SepRel rel_intersect(const SepRel& r1, const SepRel& r2) {
  if (!same_structure(*r1.base(), *r2.base()))
    throw UsageError("rel_intersect: relations have different bases");
  const SepRel* a = &r1;
  const SepRel* b = &r2;
  return SepRel(r1.base(), r1.name() + "∩" + r2.name(),
                [a, b](const Element& x, const Element& y) {
                  return a->holds(x, y) && b->holds(x, y);
                });
}

SepRel rel_join_on(const PcmPtr& pp, const PcmPtr& p) {
  auto pl = p;
  return SepRel(pp, "join-rel(" + p->name() + ")",
                [pl](const Element& x, const Element& y) {
                  Element left = pl->join(x.first(), x.second());
                  Element right = pl->join(y.first(), y.second());
                  return is_separate(*pl, left, right);
                });
}

SepRel rel_join(const PcmPtr& p) { return rel_join_on(product(p, p), p); }

SepRel rel_lift_downclosed(const PcmPtr& p,
                           const std::function<bool(const Element&)>& pred,
                           std::string name) {
  if (!pred(p->unit()))
    throw UsageError("rel_lift_downclosed: predicate must hold of the unit");
  auto pl = p;
  return SepRel(p, std::move(name),
                [pl, pred](const Element& x, const Element& y) {
                  return is_separate(*pl, x, y) && pred(pl->join(x, y));
                });
}

bool tern_holds(const SepRel& r, const Element& x, const Element& y,
                const Element& z) {
  return r.holds(x, y) && r.holds(r.base()->join(x, y), z);
}

LawReport check_seprel_laws(const SepRel& r) {
  const PcmStructure& p = *r.base();
  const int n = p.size();
  LawReport report;
  report.suite = "seprel-laws(" + r.name() + ")";
  report.stats["elements"] = static_cast<std::uint64_t>(n);

  auto& definedness = report.add("definedness");
  auto& strengthening = report.add("strengthening");
  auto& unit = report.add("unit");
  auto& symmetry = report.add("symmetry");
  auto& assoc = report.add("associativity");
  auto& unit_closure = report.add("unit-closure");

  const int ui = p.unit_index();
  if (!r.holds_index(ui, ui))
    report.fail(unit, {p.unit()}, "\U0001d7d9 R \U0001d7d9 does not hold");

  std::uint64_t pairs = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!r.holds_index(a, b)) continue;
      ++pairs;
      if (!(p.defined_index(a) && p.defined_index(b)))
        report.fail(definedness, {p.element(a), p.element(b)});
      if (!p.separate_index(a, b))
        report.fail(strengthening, {p.element(a), p.element(b)},
                    "x R y but x ⊕ y undefined");
      if (!r.holds_index(b, a))
        report.fail(symmetry, {p.element(a), p.element(b)});
      if (!r.holds_index(p.join_index(a, b), ui))
        report.fail(unit_closure, {p.element(a), p.element(b)},
                    "x R y but not (x ⊕ y) R \U0001d7d9");
    }
  }
  report.stats["related-pairs"] = pairs;

  std::uint64_t triples = 0;
  for (int a = 0; a < n && assoc.passed; ++a) {
    for (int b = 0; b < n && assoc.passed; ++b) {
      if (!r.holds_index(a, b)) continue;
      const int ab = p.join_index(a, b);
      for (int c = 0; c < n; ++c) {
        if (!r.holds_index(ab, c)) continue;
        ++triples;
        if (!(r.holds_index(a, p.join_index(b, c)) && r.holds_index(b, c))) {
          report.fail(assoc, {p.element(a), p.element(b), p.element(c)},
                      "x R y and (x ⊕ y) R z but not x R (y ⊕ z) "
                      "and y R z");
          break;
        }
      }
    }
  }
  report.stats["triples"] = triples;
  return report;
}

LawReport check_downward_closed(
    const PcmPtr& p, const std::function<bool(const Element&)>& pred,
    const std::string& name) {
  LawReport report;
  report.suite = "downward-closed(" + name + ")";
  auto& check = report.add("downward-closure");
  std::uint64_t pairs = 0;
  for (int a = 0; a < p->size(); ++a) {
    for (int b = 0; b < p->size(); ++b) {
      if (!p->separate_index(a, b)) continue;
      ++pairs;
      if (pred(p->element(p->join_index(a, b))) && !pred(p->element(a))) {
        report.fail(check, {p->element(a), p->element(b)},
                    "pred(x ⊕ y) holds but pred(x) does not");
        break;
      }
    }
    if (!check.passed) break;
  }
  report.stats["pairs"] = pairs;
  report.notes.push_back("assumes pred(\U0001d7d9) = true, validated by the "
                         "lift constructor");
  return report;
}

LawReport check_invertible_rel(const SepRel& r) {
  const PcmStructure& p = *r.base();
  const int n = p.size();
  LawReport report;
  report.suite = "invertible-rel(" + r.name() + ")";
  auto& inv = report.add("rel-invertibility");

  std::uint64_t triples = 0;
  for (int a1 = 0; a1 < n && inv.passed; ++a1) {
    for (int a2 = 0; a2 < n && inv.passed; ++a2) {
      for (int ap = 0; ap < n; ++ap) {
        if (!r.holds_index(a1, p.join_index(a2, ap))) continue;
        if (!r.holds_index(a2, p.join_index(a1, ap))) continue;
        ++triples;
        if (!(r.holds_index(a1, a2) &&
              r.holds_index(p.join_index(a1, a2), ap))) {
          report.fail(inv, {p.element(a1), p.element(a2), p.element(ap)},
                      "a1 R (a2 ⊕ a') and a2 R (a1 ⊕ a') but not "
                      "a1 R a2 R a'");
          break;
        }
      }
    }
  }
  report.stats["triples"] = triples;
  return report;
}

}  // namespace pcm
