#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcm/element.hpp"
#include "pcm/report.hpp"

namespace pcm {

class PcmStructure;
using PcmPtr = std::shared_ptr<const PcmStructure>;

/// A topped PCM over a finite carrier: an ordered element enumeration
/// containing the unit and the absorbing undefined element `top`, a total
/// join closed over the carrier, and the defined-set predicate.
///
/// Construction sorts and deduplicates the carrier, precomputes the join
/// table and defined-set, and rejects joins that escape the carrier. It does
/// not enforce the PCM laws; `check_pcm_laws` is the oracle for those, so
/// deliberately broken structures can be built for negative tests.
class PcmStructure {
 public:
  using JoinFn = std::function<Element(const Element&, const Element&)>;
  using DefinedFn = std::function<bool(const Element&)>;

  PcmStructure(std::string name, std::vector<Element> elements,
               const JoinFn& join, Element unit, Element top,
               const DefinedFn& defined);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(int i) const { return elements_[i]; }

  const Element& unit() const { return elements_[unit_i_]; }
  const Element& top() const { return elements_[top_i_]; }
  int unit_index() const { return unit_i_; }
  int top_index() const { return top_i_; }

  bool contains(const Element& x) const;
  /// Carrier position of `x`; UsageError for out-of-carrier input.
  int index_of(const Element& x) const;

  int join_index(int a, int b) const { return table_[a * size() + b]; }
  const Element& join(const Element& x, const Element& y) const;

  bool defined_index(int i) const { return defined_[i] != 0; }
  bool defined(const Element& x) const { return defined_index(index_of(x)); }

  bool separate_index(int a, int b) const {
    return defined_index(join_index(a, b));
  }

  /// True when `top` is the only undefined element.
  bool normal() const;

 private:
  std::string name_;
  std::vector<Element> elements_;
  std::map<Element, int> index_;
  std::vector<int> table_;
  std::vector<char> defined_;
  int unit_i_ = 0;
  int top_i_ = 0;
};

PcmPtr make_pcm(std::string name, std::vector<Element> elements,
                const PcmStructure::JoinFn& join, Element unit, Element top,
                const PcmStructure::DefinedFn& defined);

/// x ⊥ y: the join is defined.
bool is_separate(const PcmStructure& p, const Element& x, const Element& y);

/// Cartesian product: pairwise carrier, pointwise join/unit/top, defined-set
/// the product of defined-sets. The result is generally not normal.
PcmPtr product(const PcmPtr& p, const PcmPtr& q);

/// Same carrier, join table and defined-set (names ignored). Operations that
/// take two structures use this to reject mismatched bases.
bool same_structure(const PcmStructure& p, const PcmStructure& q);

/// A thread-eye view of a shared state: the thread's private value and the
/// combined value of its environment. Well-formed when self ⊥ other.
struct SubjState {
  Element self;
  Element other;

  friend bool operator==(const SubjState& a, const SubjState& b) {
    return a.self == b.self && a.other == b.other;
  }
  friend bool operator<(const SubjState& a, const SubjState& b) {
    if (a.self != b.self) return a.self < b.self;
    return a.other < b.other;
  }
};

bool subj_state_ok(const PcmStructure& p, const SubjState& s);

/// All well-formed subjective states of `p`, in carrier order.
std::vector<SubjState> all_subj_states(const PcmStructure& p);

/// All two-thread decompositions of `s`: for every split self = a1 ⊕ a2 with
/// the join defined, the pair ((a1, a2 ⊕ other), (a2, a1 ⊕ other)). Each
/// returned pair recombines to `s` under ⋆.
std::vector<std::pair<SubjState, SubjState>> star_split(const PcmStructure& p,
                                                        const SubjState& s);

/// Exhaustive oracle for the topped-PCM laws: commutativity, associativity,
/// unit, definedness of the unit, undefinedness and absorption of top, and
/// closure of the defined-set under join factors. Reports the first
/// counterexample in enumeration order per failing law, and notes
/// non-normality.
LawReport check_pcm_laws(const PcmPtr& p);

}  // namespace pcm
