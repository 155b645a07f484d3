#pragma once

#include <functional>
#include <string>

#include "pcm/structure.hpp"

namespace pcm {

/// A binary relation over one carrier, candidate separating relation.
/// Every constructor hard-wires `holds(x,y) = false` whenever either
/// argument is undefined, so the definedness law holds by construction;
/// the remaining laws are the business of `check_seprel_laws`.
class SepRel {
 public:
  using HoldsFn = std::function<bool(const Element&, const Element&)>;

  SepRel(PcmPtr base, std::string name, const HoldsFn& holds);

  const PcmPtr& base() const { return base_; }
  const std::string& name() const { return name_; }

  bool holds_index(int a, int b) const {
    return bits_[static_cast<std::size_t>(a) * base_->size() + b] != 0;
  }
  bool holds(const Element& x, const Element& y) const;

 private:
  PcmPtr base_;
  std::string name_;
  std::vector<char> bits_;
};

/// x R y iff x = y = unit.
SepRel rel_unit(const PcmPtr& p);

/// The largest separating relation: x R y iff x ⊥ y.
SepRel rel_trivial(const PcmPtr& p);

/// Conjunction of two relations over the same base.
SepRel rel_intersect(const SepRel& r1, const SepRel& r2);

/// The join relation J over the product carrier p×p:
/// (a1,a2) J (b1,b2) iff a1 ⊕ a2 ⊕ b1 ⊕ b2 is defined.
SepRel rel_join(const PcmPtr& p);
SepRel rel_join_on(const PcmPtr& pp, const PcmPtr& p);

/// Lifts a unary predicate to x R y = pred(x ⊕ y) ∧ x ⊥ y. The lift is a
/// separating relation only when pred is downward closed; run
/// `check_downward_closed` and `check_seprel_laws` to find out. Requires
/// pred(unit) so the unit law can hold.
SepRel rel_lift_downclosed(const PcmPtr& p,
                           const std::function<bool(const Element&)>& pred,
                           std::string name);

/// x R y R z, i.e. x R y ∧ (x ⊕ y) R z.
bool tern_holds(const SepRel& r, const Element& x, const Element& y,
                const Element& z);

/// Exhaustive check of the five separating-relation laws (definedness,
/// strengthening, unit, symmetry, associativity) plus unit closure
/// (x R y implies (x ⊕ y) R unit).
LawReport check_seprel_laws(const SepRel& r);

/// Sweeps pred(x ⊕ y) implies pred(x) over all separate pairs.
LawReport check_downward_closed(const PcmPtr& p,
                                const std::function<bool(const Element&)>& pred,
                                const std::string& name);

/// Invertibility of a relation: whenever a1 R (a2 ⊕ a') and a2 R (a1 ⊕ a'),
/// also a1 R a2 R a'.
LawReport check_invertible_rel(const SepRel& r);

}  // namespace pcm
