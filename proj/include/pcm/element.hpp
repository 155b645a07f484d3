#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace pcm {

/// Thrown when an operation is called outside its contract (out-of-carrier
/// argument, mismatched bases, bad bounds). The CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A carrier value. Either the canonical undefined element `top`, or a
/// payload: a named symbol, a natural number, a finite map from positive
/// keys to label names, or a pair of elements (product carriers).
///
/// Equality is structural. The total order sorts by payload kind first
/// (symbols, naturals, maps, pairs) with `top` greatest; it fixes carrier
/// enumeration order and thereby which counterexample a law sweep reports.
class Element {
 public:
  enum class Kind { Sym, Nat, Map, Pair, Top };

  using MapEntries = std::map<int, std::string>;

  Element() : kind_(Kind::Top) {}

  static Element top() { return Element(); }

  static Element sym(std::string name) {
    Element e;
    e.kind_ = Kind::Sym;
    e.sym_ = std::move(name);
    return e;
  }

  static Element nat(std::uint64_t value) {
    Element e;
    e.kind_ = Kind::Nat;
    e.nat_ = value;
    return e;
  }

  static Element map(MapEntries entries) {
    for (const auto& [k, v] : entries)
      if (k < 1) throw UsageError("map element keys must be positive");
    Element e;
    e.kind_ = Kind::Map;
    e.map_ = std::move(entries);
    return e;
  }

  static Element pair(Element first, Element second) {
    Element e;
    e.kind_ = Kind::Pair;
    e.pair_ = std::make_shared<std::pair<Element, Element>>(std::move(first),
                                                            std::move(second));
    return e;
  }

  Kind kind() const { return kind_; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_map() const { return kind_ == Kind::Map; }
  bool is_pair() const { return kind_ == Kind::Pair; }

  const std::string& sym() const {
    require(Kind::Sym);
    return sym_;
  }

  std::uint64_t nat() const {
    require(Kind::Nat);
    return nat_;
  }

  const MapEntries& entries() const {
    require(Kind::Map);
    return map_;
  }

  const Element& first() const {
    require(Kind::Pair);
    return pair_->first;
  }

  const Element& second() const {
    require(Kind::Pair);
    return pair_->second;
  }

  /// Canonical literal: `top`, symbol names and digits verbatim, maps as
  /// sorted `{k↦label,...}` lists, pairs as `(a,b)`.
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Element& a, const Element& b) {
    return compare(a, b) < 0;
  }

  static int compare(const Element& a, const Element& b);

 private:
  void require(Kind k) const {
    if (kind_ != k) throw UsageError("element payload kind mismatch");
  }

  Kind kind_;
  std::string sym_;
  std::uint64_t nat_ = 0;
  MapEntries map_;
  std::shared_ptr<const std::pair<Element, Element>> pair_;
};

}  // namespace pcm
