#pragma once

#include "pcm/morphism.hpp"

namespace pcm {

/// A sub-PCM presentation: the sub and super structures together with the
/// injection (total) and retraction morphisms between them.
struct SubPcmWitness {
  PcmPtr sub;
  PcmPtr super;
  Morphism inject;
  Morphism retract;
};

/// Mods out `p` by the separating relation `r`: carrier the elements related
/// to the unit plus top, join restricted to related pairs, undefined
/// otherwise. The input relation is validated eagerly; a non-seprel is
/// refused since the quotient laws would silently break. The result is
/// normal, with ι(x) = x under the sub's trivial relation and
/// ρ(u) = u when u R unit (top otherwise) under `r`.
SubPcmWitness quotient(const PcmPtr& p, const SepRel& r);

/// `p` as a sub-PCM of itself: identity injection and retraction.
SubPcmWitness identity_witness(const PcmPtr& p);

/// The four sub-PCM axioms (retract∘inject identity, inject∘retract identity
/// on retract-defined elements, reflection of sub-separateness, reflection
/// of definedness), the PCM laws of the sub, and the morphism laws of both
/// legs.
LawReport check_subpcm_axioms(const SubPcmWitness& w);

/// On the quotient, separateness coincides with the defining relation:
/// x ⊥_sub y iff ι(x) R ι(y).
LawReport check_quotient_coincidence(const SubPcmWitness& w, const SepRel& r);

/// For w = quotient(m.source, m.seprel): composing m with the injection
/// yields an invertible morphism from the quotient.
LawReport check_inject_invertibility(const Morphism& m,
                                     const SubPcmWitness& w);

}  // namespace pcm
