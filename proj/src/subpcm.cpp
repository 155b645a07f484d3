#include "pcm/subpcm.hpp"

namespace pcm {

SubPcmWitness quotient(const PcmPtr& p, const SepRel& r) {
  if (!same_structure(*r.base(), *p))
    throw UsageError("quotient: relation base differs from the structure");
  LawReport laws = check_seprel_laws(r);
  if (!laws.all_passed()) {
    std::string broken;
    for (const auto& c : laws.checks)
      if (!c.passed) broken += (broken.empty() ? "" : ", ") + c.law;
    throw UsageError("quotient: '" + r.name() +
                     "' is not a separating relation (fails: " + broken + ")");
  }

  const Element unit = p->unit();
  const Element top = p->top();
  std::vector<Element> elems;
  for (int i = 0; i < p->size(); ++i)
    if (r.holds_index(i, p->unit_index())) elems.push_back(p->element(i));
  elems.push_back(top);

  auto pl = p;
  auto rl = r;
  auto join = [pl, rl, top](const Element& x, const Element& y) -> Element {
    if (x.is_top() || y.is_top()) return top;
    if (!rl.holds(x, y)) return top;
    return pl->join(x, y);
  };
  auto defined = [rl, unit, top](const Element& x) {
    return !(x == top) && rl.holds(x, unit);
  };
  PcmPtr sub = make_pcm(p->name() + "/" + r.name(), std::move(elems), join,
                        unit, top, defined);

  Morphism inject(sub, p, "inject", [](const Element& x) { return x; },
                  rel_trivial(sub));
  Morphism retract(p, sub, "retract",
                   [rl, unit, top](const Element& u) -> Element {
                     if (!u.is_top() && rl.holds(u, unit)) return u;
                     return top;
                   },
                   rl);
  return SubPcmWitness{sub, p, std::move(inject), std::move(retract)};
}

SubPcmWitness identity_witness(const PcmPtr& p) {
  return SubPcmWitness{p, p, morph_identity(p, "inject"),
                       morph_identity(p, "retract")};
}

LawReport check_subpcm_axioms(const SubPcmWitness& w) {
  LawReport report;
  report.suite = "subpcm-axioms(" + w.sub->name() + ")";

  auto& ax1 = report.add("retract-inject-identity");
  auto& ax2 = report.add("inject-retract-identity");
  auto& ax3 = report.add("separateness-reflection");
  auto& ax4 = report.add("inject-definedness");

  const PcmStructure& sub = *w.sub;
  const PcmStructure& super = *w.super;

  for (int x = 0; x < sub.size(); ++x) {
    const Element& ex = sub.element(x);
    if (w.retract.apply(w.inject.apply(ex)) != ex)
      report.fail(ax1, {ex}, "ρ(ι x) ≠ x");
    if (is_separate(super, w.inject.apply(ex), super.unit()) &&
        !sub.separate_index(x, sub.unit_index()))
      report.fail(ax4, {ex}, "ι x defined in super but x not in sub");
  }

  const int uu = super.unit_index();
  for (int u = 0; u < super.size(); ++u) {
    const Element& eu = super.element(u);
    if (w.retract.seprel().holds_index(u, uu) &&
        w.inject.apply(w.retract.apply(eu)) != eu)
      report.fail(ax2, {eu}, "ι(ρ u) ≠ u");
    for (int v = 0; v < super.size(); ++v) {
      if (is_separate(sub, w.retract.apply(eu),
                      w.retract.apply(super.element(v))) &&
          !w.retract.seprel().holds_index(u, v))
        report.fail(ax3, {eu, super.element(v)},
                    "ρu ⊥ ρv in sub but not u ⊥_ρ v");
    }
  }

  report.merge(check_pcm_laws(w.sub), "sub");
  report.merge(check_morphism_laws(w.inject), "inject");
  report.merge(check_morphism_laws(w.retract), "retract");
  if (w.sub->normal())
    report.notes.push_back("sub-PCM is normal");
  else
    report.notes.push_back("sub-PCM is not normal");
  return report;
}

LawReport check_quotient_coincidence(const SubPcmWitness& w, const SepRel& r) {
  LawReport report;
  report.suite = "quotient-coincidence(" + w.sub->name() + ")";
  auto& coincide = report.add("separateness-coincides");
  const PcmStructure& sub = *w.sub;
  for (int x = 0; x < sub.size(); ++x) {
    for (int y = 0; y < sub.size(); ++y) {
      const bool in_sub = sub.separate_index(x, y);
      const bool by_rel =
          r.holds(w.inject.apply(sub.element(x)), w.inject.apply(sub.element(y)));
      if (in_sub != by_rel)
        report.fail(coincide, {sub.element(x), sub.element(y)},
                    in_sub ? "separate in sub but not related"
                           : "related but not separate in sub");
    }
  }
  return report;
}

LawReport check_inject_invertibility(const Morphism& m,
                                     const SubPcmWitness& w) {
  if (!same_structure(*m.source(), *w.super))
    throw UsageError(
        "check_inject_invertibility: morphism source is not the super PCM");
  Morphism composed = compose(m, w.inject);
  LawReport report = check_invertible_morph(composed);
  report.suite = "inject-invertibility(" + composed.name() + ")";
  return report;
}

}  // namespace pcm
