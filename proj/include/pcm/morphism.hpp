#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcm/seprel.hpp"
#include "pcm/structure.hpp"

namespace pcm {

/// A total function between carriers bundled with the separating relation
/// on which it is expected to distribute over join. The map is stored as a
/// full lookup table; whether it actually is a morphism (preserves unit and
/// top, distributes on related pairs) is decided by `check_morphism_laws`.
class Morphism {
 public:
  using MapFn = std::function<Element(const Element&)>;

  Morphism(PcmPtr source, PcmPtr target, std::string name, const MapFn& map,
           SepRel seprel);

  const PcmPtr& source() const { return source_; }
  const PcmPtr& target() const { return target_; }
  const std::string& name() const { return name_; }
  const SepRel& seprel() const { return seprel_; }

  int apply_index(int i) const { return map_[i]; }
  const Element& apply(const Element& x) const;

  Morphism with_seprel(SepRel r) const;

 private:
  PcmPtr source_;
  PcmPtr target_;
  std::string name_;
  std::vector<int> map_;
  SepRel seprel_;
};

Morphism morph_identity(const PcmPtr& p, std::string name = "id");

/// The always-unit morphism, total.
Morphism morph_const_unit(const PcmPtr& source, const PcmPtr& target);

/// Projections out of a product carrier, total.
Morphism morph_proj1(const PcmPtr& prod, const PcmPtr& left);
Morphism morph_proj2(const PcmPtr& prod, const PcmPtr& right);

/// join_A : A² → A under the join relation J.
Morphism morph_join(const PcmPtr& p);

/// (a ∘ b)(x) = a(b(x)); x R y = x ⊥_b y ∧ b(x) ⊥_a b(y).
Morphism compose(const Morphism& a, const Morphism& b);

/// (a ⊗ b)(x) = (a(x), b(x)); seprel the intersection of the legs'.
Morphism tensor(const Morphism& a, const Morphism& b);

/// (a × b)(x1,x2) = (a(x1), b(x2)); seprel componentwise.
Morphism arrow_product(const Morphism& a, const Morphism& b);

/// (m/r)(x) = m(x) when x R unit, top otherwise; seprel x ⊥_m y ∧ x R y.
Morphism restrict(const Morphism& m, const SepRel& r);

/// x R y = x ⊥_m y ∧ m(x) = m(y) = unit.
SepRel kernel(const Morphism& m);

/// x R y = x ⊥_a y ∧ x ⊥_b y ∧ a(x) = b(x) ∧ a(y) = b(y).
SepRel equalizer(const Morphism& a, const Morphism& b);

/// Unit and top preservation; on every seprel-related pair, separateness of
/// the images and distribution over join; and the seprel's own laws.
LawReport check_morphism_laws(const Morphism& m);

/// Invertibility: the seprel is invertible, and every split of a defined
/// image is realized by a seprel-related split of the argument. Witness
/// searches record the lexicographically least split.
LawReport check_invertible_morph(const Morphism& m);

/// a ⊕ b = a ⊕ c implies b = c, over all a ⊥ b, a ⊥ c.
LawReport check_cancellative(const PcmPtr& p);

/// The two framing lemmas over all subjective states of the base:
/// (i) lifted R is duplicable, R ⟺ R ∗ R;
/// (ii) F(b)(s) = (m(self) = b ∧ self ⊥_m other) satisfies
///      F(b1 ⊕ b2) ⟺ F(b1) ∗ F(b2) for every defined b1 ⊕ b2.
/// Both directions reported separately; ⇐ needs invertibility.
LawReport check_framing_lemmas(const SepRel& r, const Morphism& m);

/// Identity and associativity of composition over every composable chain in
/// the registry, with seprels compared extensionally.
LawReport check_category_laws(const std::vector<Morphism>& registry);

}  // namespace pcm
