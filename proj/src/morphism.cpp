#include "pcm/morphism.hpp"

#include <map>

namespace pcm {

Morphism::Morphism(PcmPtr source, PcmPtr target, std::string name,
                   const MapFn& map, SepRel seprel)
    : source_(std::move(source)),
      target_(std::move(target)),
      name_(std::move(name)),
      seprel_(std::move(seprel)) {
  if (!same_structure(*seprel_.base(), *source_))
    throw UsageError("morphism '" + name_ +
                     "': seprel base differs from the source");
  map_.reserve(source_->size());
  for (const auto& x : source_->elements())
    map_.push_back(target_->index_of(map(x)));
}

const Element& Morphism::apply(const Element& x) const {
  return target_->element(map_[source_->index_of(x)]);
}

Morphism Morphism::with_seprel(SepRel r) const {
  auto self = *this;
  return Morphism(
      source_, target_, name_,
      [&self](const Element& x) { return self.apply(x); }, std::move(r));
}

Morphism morph_identity(const PcmPtr& p, std::string name) {
  return Morphism(
      p, p, std::move(name), [](const Element& x) { return x; },
      rel_trivial(p));
}

Morphism morph_const_unit(const PcmPtr& source, const PcmPtr& target) {
  Element unit = target->unit();
  Element top = target->top();
  return Morphism(
      source, target, "const-unit",
      [unit, top](const Element& x) { return x.is_top() ? top : unit; },
      rel_trivial(source));
}

Morphism morph_proj1(const PcmPtr& prod, const PcmPtr& left) {
  return Morphism(
      prod, left, "proj1", [](const Element& x) { return x.first(); },
      rel_trivial(prod));
}

Morphism morph_proj2(const PcmPtr& prod, const PcmPtr& right) {
  return Morphism(
      prod, right, "proj2", [](const Element& x) { return x.second(); },
      rel_trivial(prod));
}

Morphism morph_join(const PcmPtr& p) {
  PcmPtr pp = product(p, p);
  auto pl = p;
  return Morphism(
      pp, p, "join-" + p->name(),
      [pl](const Element& x) { return pl->join(x.first(), x.second()); },
      rel_join_on(pp, p));
}

Morphism compose(const Morphism& a, const Morphism& b) {
  if (!same_structure(*b.target(), *a.source()))
    throw UsageError("compose: target of '" + b.name() +
                     "' differs from source of '" + a.name() + "'");
  const Morphism* ap = &a;
  const Morphism* bp = &b;
  SepRel rel(b.source(), a.name() + "∘" + b.name(),
             [ap, bp](const Element& x, const Element& y) {
               return bp->seprel().holds(x, y) &&
                      ap->seprel().holds(bp->apply(x), bp->apply(y));
             });
  return Morphism(
      b.source(), a.target(), a.name() + "∘" + b.name(),
      [ap, bp](const Element& x) { return ap->apply(bp->apply(x)); },
      std::move(rel));
}

Morphism tensor(const Morphism& a, const Morphism& b) {
  if (!same_structure(*a.source(), *b.source()))
    throw UsageError("tensor: legs have different sources");
  PcmPtr target = product(a.target(), b.target());
  const Morphism* ap = &a;
  const Morphism* bp = &b;
  return Morphism(a.source(), target, a.name() + "⊗" + b.name(),
                  [ap, bp](const Element& x) {
                    return Element::pair(ap->apply(x), bp->apply(x));
                  },
                  rel_intersect(a.seprel(), b.seprel()));
}

Morphism arrow_product(const Morphism& a, const Morphism& b) {
  PcmPtr source = product(a.source(), b.source());
  PcmPtr target = product(a.target(), b.target());
  const Morphism* ap = &a;
  const Morphism* bp = &b;
  SepRel rel(source, a.name() + "×" + b.name(),
             [ap, bp](const Element& x, const Element& y) {
               return ap->seprel().holds(x.first(), y.first()) &&
                      bp->seprel().holds(x.second(), y.second());
             });
  return Morphism(source, target, a.name() + "×" + b.name(),
                  [ap, bp](const Element& x) {
                    return Element::pair(ap->apply(x.first()),
                                         bp->apply(x.second()));
                  },
                  std::move(rel));
}

Morphism restrict(const Morphism& m, const SepRel& r) {
  if (!same_structure(*r.base(), *m.source()))
    throw UsageError("restrict: relation base differs from morphism source");
  const Morphism* mp = &m;
  const SepRel* rp = &r;
  Element unit = m.source()->unit();
  Element top = m.target()->top();
  SepRel rel(m.source(), m.name() + "/" + r.name(),
             [mp, rp](const Element& x, const Element& y) {
               return mp->seprel().holds(x, y) && rp->holds(x, y);
             });
  return Morphism(m.source(), m.target(), m.name() + "/" + r.name(),
                  [mp, rp, unit, top](const Element& x) -> Element {
                    if (!x.is_top() && rp->holds(x, unit)) return mp->apply(x);
                    return top;
                  },
                  std::move(rel));
}

SepRel kernel(const Morphism& m) {
  const Morphism* mp = &m;
  Element unit = m.target()->unit();
  return SepRel(m.source(), "ker(" + m.name() + ")",
                [mp, unit](const Element& x, const Element& y) {
                  return mp->seprel().holds(x, y) && mp->apply(x) == unit &&
                         mp->apply(y) == unit;
                });
}

SepRel equalizer(const Morphism& a, const Morphism& b) {
  if (!same_structure(*a.source(), *b.source()) ||
      !same_structure(*a.target(), *b.target()))
    throw UsageError("equalizer: morphisms must share source and target");
  const Morphism* ap = &a;
  const Morphism* bp = &b;
  return SepRel(a.source(), "eql(" + a.name() + "," + b.name() + ")",
                [ap, bp](const Element& x, const Element& y) {
                  return ap->seprel().holds(x, y) && bp->seprel().holds(x, y) &&
                         ap->apply(x) == bp->apply(x) &&
                         ap->apply(y) == bp->apply(y);
                });
}

LawReport check_morphism_laws(const Morphism& m) {
  const PcmStructure& src = *m.source();
  const PcmStructure& tgt = *m.target();
  LawReport report;
  report.suite = "morphism-laws(" + m.name() + ")";

  auto& unit = report.add("unit-preservation");
  auto& top = report.add("top-preservation");
  auto& img_sep = report.add("image-separateness");
  auto& distrib = report.add("distributivity");

  if (m.apply_index(src.unit_index()) != tgt.unit_index())
    report.fail(unit, {src.unit()},
                "φ(\U0001d7d9) = " + m.apply(src.unit()).str());
  if (m.apply_index(src.top_index()) != tgt.top_index())
    report.fail(top, {src.top()},
                "φ(top) = " + m.apply(src.top()).str());

  std::uint64_t pairs = 0;
  const int n = src.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!m.seprel().holds_index(a, b)) continue;
      ++pairs;
      const int fa = m.apply_index(a);
      const int fb = m.apply_index(b);
      if (!tgt.separate_index(fa, fb))
        report.fail(img_sep, {src.element(a), src.element(b)},
                    "φx ⊥ φy fails");
      if (m.apply_index(src.join_index(a, b)) != tgt.join_index(fa, fb))
        report.fail(distrib, {src.element(a), src.element(b)},
                    "φ(x ⊕ y) ≠ φx ⊕ φy");
    }
  }
  report.stats["related-pairs"] = pairs;

  report.merge(check_seprel_laws(m.seprel()), "seprel");
  return report;
}

LawReport check_invertible_morph(const Morphism& m) {
  LawReport report;
  report.suite = "invertible-morph(" + m.name() + ")";
  report.merge(check_invertible_rel(m.seprel()), "seprel");

  const PcmStructure& src = *m.source();
  const PcmStructure& tgt = *m.target();
  const int n = src.size();
  const int ui = src.unit_index();
  auto& split = report.add("split-surjectivity");

  std::uint64_t searched = 0;
  for (int a = 0; a < n && split.passed; ++a) {
    if (!m.seprel().holds_index(a, ui)) continue;
    const int fa = m.apply_index(a);
    for (int b1 = 0; b1 < tgt.size() && split.passed; ++b1) {
      for (int b2 = 0; b2 < tgt.size(); ++b2) {
        if (tgt.join_index(b1, b2) != fa) continue;
        if (!tgt.separate_index(b1, b2)) continue;
        ++searched;
        bool found = false;
        for (int a1 = 0; a1 < n && !found; ++a1) {
          if (m.apply_index(a1) != b1) continue;
          for (int a2 = 0; a2 < n; ++a2) {
            if (src.join_index(a1, a2) != a) continue;
            if (!m.seprel().holds_index(a1, a2)) continue;
            if (m.apply_index(a2) != b2) continue;
            found = true;
            break;
          }
        }
        if (!found) {
          report.fail(split,
                      {src.element(a), tgt.element(b1), tgt.element(b2)},
                      "no seprel-related source split realizes the image "
                      "split");
          break;
        }
      }
    }
  }
  report.stats["image-splits"] = searched;
  return report;
}

LawReport check_cancellative(const PcmPtr& p) {
  LawReport report;
  report.suite = "cancellativity(" + p->name() + ")";
  auto& cancel = report.add("cancellativity");
  const int n = p->size();
  std::uint64_t triples = 0;
  for (int a = 0; a < n && cancel.passed; ++a) {
    for (int b = 0; b < n && cancel.passed; ++b) {
      if (!p->separate_index(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p->separate_index(a, c)) continue;
        ++triples;
        if (p->join_index(a, b) == p->join_index(a, c) && b != c) {
          report.fail(cancel, {p->element(a), p->element(b), p->element(c)},
                      "a ⊕ b = a ⊕ c but b ≠ c");
          break;
        }
      }
    }
  }
  report.stats["triples"] = triples;
  return report;
}

namespace {

// (P ∗ Q)(s) over the subjective splits of s.
bool star_holds(const PcmStructure& p, const SubjState& s,
                const std::function<bool(const SubjState&)>& lhs,
                const std::function<bool(const SubjState&)>& rhs) {
  for (const auto& [s1, s2] : star_split(p, s))
    if (lhs(s1) && rhs(s2)) return true;
  return false;
}

}  // namespace

LawReport check_framing_lemmas(const SepRel& r, const Morphism& m) {
  if (!same_structure(*r.base(), *m.source()))
    throw UsageError("check_framing_lemmas: bases differ");
  const PcmStructure& p = *m.source();
  const PcmStructure& tgt = *m.target();
  LawReport report;
  report.suite = "framing(" + r.name() + "," + m.name() + ")";

  auto& dup_fwd = report.add("duplicability-fwd");
  auto& dup_bwd = report.add("duplicability-bwd");
  auto& split_fwd = report.add("morphism-split-fwd");
  auto& split_bwd = report.add("morphism-split-bwd");

  const auto states = all_subj_states(p);
  report.stats["subjective-states"] = states.size();

  auto lifted = [&r](const SubjState& s) { return r.holds(s.self, s.other); };
  for (const auto& s : states) {
    const bool at_s = lifted(s);
    const bool starred = star_holds(p, s, lifted, lifted);
    if (at_s && !starred) report.fail(dup_fwd, {s.self, s.other});
    if (!at_s && starred)
      report.fail(dup_bwd, {s.self, s.other},
                  "(R ∗ R)(s) holds but R(s) does not");
  }

  auto predicate_for = [&m](const Element& b) {
    return [&m, b](const SubjState& s) {
      return m.apply(s.self) == b && m.seprel().holds(s.self, s.other);
    };
  };
  std::uint64_t image_pairs = 0;
  for (int b1 = 0; b1 < tgt.size(); ++b1) {
    for (int b2 = 0; b2 < tgt.size(); ++b2) {
      if (!tgt.separate_index(b1, b2)) continue;
      ++image_pairs;
      auto f1 = predicate_for(tgt.element(b1));
      auto f2 = predicate_for(tgt.element(b2));
      auto fj = predicate_for(tgt.element(tgt.join_index(b1, b2)));
      for (const auto& s : states) {
        const bool joined = fj(s);
        const bool starred = star_holds(p, s, f1, f2);
        if (joined && !starred)
          report.fail(split_fwd,
                      {tgt.element(b1), tgt.element(b2), s.self, s.other});
        if (!joined && starred)
          report.fail(split_bwd,
                      {tgt.element(b1), tgt.element(b2), s.self, s.other},
                      "F(b1) ∗ F(b2) holds but F(b1 ⊕ b2) does not");
      }
    }
  }
  report.stats["image-pairs"] = image_pairs;
  return report;
}

namespace {

// First input on which the two morphisms disagree, as a map or seprel
// mismatch; empty when they are extensionally equal.
std::vector<Element> morphism_mismatch(const Morphism& f, const Morphism& g) {
  const PcmStructure& src = *f.source();
  if (!same_structure(src, *g.source()) ||
      !same_structure(*f.target(), *g.target()))
    return {src.unit()};
  for (int i = 0; i < src.size(); ++i)
    if (f.apply_index(i) != g.apply_index(i)) return {src.element(i)};
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < src.size(); ++j)
      if (f.seprel().holds_index(i, j) != g.seprel().holds_index(i, j))
        return {src.element(i), src.element(j)};
  return {};
}

}  // namespace

LawReport check_category_laws(const std::vector<Morphism>& registry) {
  LawReport report;
  report.suite = "category-laws";
  auto& left_id = report.add("left-identity");
  auto& right_id = report.add("right-identity");
  auto& assoc = report.add("composition-associativity");

  std::uint64_t chains = 0;
  for (const auto& f : registry) {
    auto left = morphism_mismatch(compose(morph_identity(f.target()), f), f);
    if (!left.empty())
      report.fail(left_id, left,
                  "id∘" + f.name() + " ≠ " + f.name());
    auto right = morphism_mismatch(compose(f, morph_identity(f.source())), f);
    if (!right.empty())
      report.fail(right_id, right, f.name() + "∘id ≠ " + f.name());
  }
  for (const auto& f : registry) {
    for (const auto& g : registry) {
      if (!same_structure(*g.target(), *f.source())) continue;
      for (const auto& h : registry) {
        if (!same_structure(*h.target(), *g.source())) continue;
        ++chains;
        auto mismatch = morphism_mismatch(compose(compose(f, g), h),
                                          compose(f, compose(g, h)));
        if (!mismatch.empty())
          report.fail(assoc, mismatch,
                      "(" + f.name() + "∘" + g.name() + ")∘" +
                          h.name() + " ≠ " + f.name() + "∘(" +
                          g.name() + "∘" + h.name() + ")");
      }
    }
  }
  report.stats["registry"] = registry.size();
  report.stats["chains"] = chains;
  return report;
}

}  // namespace pcm
