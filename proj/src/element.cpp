#include "pcm/element.hpp"

#include <sstream>

namespace pcm {

namespace {

int rank(Element::Kind k) {
  switch (k) {
    case Element::Kind::Sym:
      return 0;
    case Element::Kind::Nat:
      return 1;
    case Element::Kind::Map:
      return 2;
    case Element::Kind::Pair:
      return 3;
    case Element::Kind::Top:
      return 4;
  }
  return 5;
}

template <typename T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int Element::compare(const Element& a, const Element& b) {
  if (int c = cmp3(rank(a.kind_), rank(b.kind_)); c != 0) return c;
  switch (a.kind_) {
    case Kind::Top:
      return 0;
    case Kind::Sym:
      return cmp3(a.sym_, b.sym_);
    case Kind::Nat:
      return cmp3(a.nat_, b.nat_);
    case Kind::Map: {
      auto ia = a.map_.begin(), ib = b.map_.begin();
      for (; ia != a.map_.end() && ib != b.map_.end(); ++ia, ++ib) {
        if (int c = cmp3(ia->first, ib->first); c != 0) return c;
        if (int c = cmp3(ia->second, ib->second); c != 0) return c;
      }
      return cmp3(a.map_.size(), b.map_.size());
    }
    case Kind::Pair: {
      if (int c = compare(a.pair_->first, b.pair_->first); c != 0) return c;
      return compare(a.pair_->second, b.pair_->second);
    }
  }
  return 0;
}

std::string Element::str() const {
  switch (kind_) {
    case Kind::Top:
      return "top";
    case Kind::Sym:
      return sym_;
    case Kind::Nat:
      return std::to_string(nat_);
    case Kind::Map: {
      std::ostringstream out;
      out << '{';
      bool sep = false;
      for (const auto& [k, v] : map_) {
        if (sep) out << ',';
        out << k << "↦" << v;
        sep = true;
      }
      out << '}';
      return out.str();
    }
    case Kind::Pair:
      return "(" + pair_->first.str() + "," + pair_->second.str() + ")";
  }
  return "?";
}

}  // namespace pcm
