#pragma once

#include "pcm/morphism.hpp"

namespace pcm {

// Ticket labels and history operations.
inline constexpr const char* kWait = "wait";
inline constexpr const char* kServe = "serve";
inline constexpr const char* kUsed = "used";
inline constexpr const char* kOpLock = "L";
inline constexpr const char* kOpUnlock = "U";

inline Element own() { return Element::sym("own"); }
inline Element ownbar() { return Element::sym("ownbar"); }
inline Element empty_map() { return Element::map({}); }

/// Lock-ownership PCM: {own, ownbar, top}; own ⊕ own undefined, ownbar unit.
PcmPtr pcm_O();

/// ({1..n} ∪ {top}, max, 1).
PcmPtr pcm_natmax(int n);

/// ({0..cap} ∪ {top}, +, 0); sums beyond the cap are undefined.
PcmPtr pcm_natplus(int cap);

/// Finite maps from `keys` into `labels` under disjoint union, with the
/// empty map as unit. Carrier: all such maps plus top.
PcmPtr pcm_finmap(const std::vector<int>& keys,
                  const std::vector<std::string>& labels, std::string name);

/// Ticket maps {1..bound} ⇀ {wait, serve, used}.
PcmPtr pcm_tickets(int bound);

/// Locking histories {1..bound} ⇀ {L, U}.
PcmPtr pcm_hist(int bound);

/// Least positive key absent from the map. Coincides with max+1 on gap-free
/// maps, which is how tickets are actually drawn.
int fresh(const Element& map);

/// Largest key of a map, 0 for the empty map.
int last_key(const Element& map);

/// Number of serve-labeled entries.
int count_serve_value(const Element& map);

/// Value of the display computed from a ticket map: largest used key + 1.
int psi_value(const Element& map);

/// All used tickets below all serve tickets below all wait tickets.
bool pred_ordered(const Element& map);

/// Every drawn ticket's predecessor is drawn: dom is a prefix of 1,2,...
bool pred_no_gaps(const Element& map);

/// Keys consecutive from 1, lock at odd and unlock at even positions.
/// A global state-space property of histories, not a separating relation.
bool pred_alternating(const Element& hist);

/// σ: the identity on ticket maps, named for use in specs.
Morphism morph_sigma(int bound);

/// ψ: tickets(B) → natmax(B+1), the display value. Total.
Morphism morph_psi(int bound);

/// Keeps the entries carrying one label. Total.
Morphism morph_filter(int bound, const std::string& label);

/// Domain size, into the additive naturals capped at the key bound. Total.
Morphism morph_count(int bound);

/// #serve = count ∘ filter_serve.
Morphism morph_count_serve(int bound);

/// α: tickets(B) → O; own iff some entry is serve. Partial: distributes
/// only under seprel_alpha.
Morphism morph_alpha(int bound);

/// x R y iff #serve(x) + #serve(y) ≤ 1 and x ⊥ y.
SepRel seprel_alpha(int bound);

/// Lift of `ordered` to a separating relation.
SepRel rel_ordered(int bound);

/// Lift of `no_gaps`; deliberately not a separating relation (fails
/// associativity), kept for negative testing.
SepRel rel_upsilon(int bound);

/// Exclusive-locking histories: an L at time t on one side forces the join
/// to end by t, or an immediate U at t+1 on the same side.
SepRel seprel_hist(int bound);

/// ω: hist(B) → O; own iff the last entry is an L. Partial under seprel_hist.
Morphism morph_hist_own(int bound);

}  // namespace pcm
