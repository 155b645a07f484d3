#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcm/instances.hpp"
#include "pcm/structure.hpp"

using namespace pcm;

namespace {

// Test-side oracle for disjoint map union, independent of the carrier join
// tables: merge entries, undefined on key overlap.
std::optional<Element> naive_union(const Element& x, const Element& y) {
  if (x.is_top() || y.is_top()) return std::nullopt;
  Element::MapEntries merged = x.entries();
  for (const auto& [k, v] : y.entries())
    if (!merged.emplace(k, v).second) return std::nullopt;
  return Element::map(merged);
}

Element tmap(Element::MapEntries e) { return Element::map(std::move(e)); }

}  // namespace

TEST_CASE("element ordering and literals") {
  CHECK(Element::top().str() == "top");
  CHECK(own().str() == "own");
  CHECK(Element::nat(3).str() == "3");
  CHECK(tmap({{1, kWait}, {2, kServe}}).str() == "{1↦wait,2↦serve}");
  CHECK(Element::pair(own(), Element::top()).str() == "(own,top)");
  CHECK(empty_map() < tmap({{1, kWait}}));
  CHECK(own() < Element::top());
  CHECK(Element::pair(own(), own()) < Element::top());
}

TEST_CASE("join on O follows the ownership table") {
  auto O = pcm_O();
  CHECK(O->join(own(), ownbar()) == own());
  CHECK(O->join(ownbar(), own()) == own());
  CHECK(O->join(own(), own()) == Element::top());
  CHECK(O->join(ownbar(), ownbar()) == ownbar());
  for (const auto& x : O->elements()) CHECK(O->join(x, O->unit()) == x);
  CHECK_THROWS_AS((void)O->join(Element::sym("bogus"), own()), UsageError);
}

TEST_CASE("separateness") {
  auto O = pcm_O();
  CHECK(is_separate(*O, own(), ownbar()));
  CHECK_FALSE(is_separate(*O, own(), own()));
  for (const auto& y : O->elements())
    CHECK_FALSE(is_separate(*O, Element::top(), y));

  auto T = pcm_tickets(2);
  CHECK_FALSE(is_separate(*T, tmap({{1, kWait}}), tmap({{1, kServe}})));
  CHECK(is_separate(*T, tmap({{1, kWait}}), tmap({{2, kServe}})));

  // x defined iff x separate from the unit.
  for (const auto& x : T->elements())
    CHECK(T->defined(x) == is_separate(*T, x, T->unit()));
}

TEST_CASE("ticket joins agree with the naive union oracle") {
  auto T = pcm_tickets(2);
  for (const auto& x : T->elements()) {
    for (const auto& y : T->elements()) {
      Element joined = T->join(x, y);
      auto expected = naive_union(x, y);
      if (expected) {
        CHECK(joined == *expected);
      } else {
        CHECK(joined == Element::top());
      }
    }
  }
}

TEST_CASE("product is pointwise and non-normal") {
  auto O = pcm_O();
  auto OO = product(O, O);
  CHECK(OO->size() == 9);
  CHECK(OO->unit() == Element::pair(ownbar(), ownbar()));
  CHECK(OO->join(Element::pair(own(), ownbar()),
                 Element::pair(ownbar(), ownbar())) ==
        Element::pair(own(), ownbar()));

  Element half_undef = Element::pair(own(), Element::top());
  CHECK_FALSE(OO->defined(half_undef));
  CHECK(half_undef != OO->top());
  CHECK_FALSE(OO->normal());
  CHECK(O->normal());
}

TEST_CASE("pcm law suites pass for the stock carriers") {
  for (const auto& p :
       {pcm_O(), pcm_natmax(5), pcm_natplus(4), pcm_tickets(3), pcm_hist(3)}) {
    LawReport r = check_pcm_laws(p);
    INFO(r.suite);
    CHECK(r.all_passed());
    CHECK(r.notes.empty());
  }
  LawReport prod = check_pcm_laws(product(pcm_O(), pcm_O()));
  CHECK(prod.all_passed());
  REQUIRE(prod.notes.size() == 1);  // non-normality is reported
  CHECK(prod.notes[0].find("non-normal") != std::string::npos);
}

TEST_CASE("broken join is caught with a witness") {
  // Same carrier as O but the unit law is broken at ownbar ⊕ ownbar.
  auto broken_join = [](const Element& x, const Element& y) -> Element {
    if (x.is_top() || y.is_top()) return Element::top();
    if (x.sym() == "own" && y.sym() == "own") return Element::top();
    return own();
  };
  auto broken = make_pcm("brokenO", {own(), ownbar(), Element::top()},
                         broken_join, ownbar(), Element::top(),
                         [](const Element& x) { return !x.is_top(); });
  LawReport r = check_pcm_laws(broken);
  CHECK_FALSE(r.all_passed());
  const LawCheck* unit = r.find("unit");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->passed);
  REQUIRE_FALSE(unit->witness.empty());
  // The witness replays: witness ⊕ unit ≠ witness.
  CHECK(broken->join(unit->witness[0], broken->unit()) != unit->witness[0]);
  CHECK(r.find("top-absorbing")->passed);
  CHECK(r.find("definedness-closure")->passed);
}

TEST_CASE("subjective state splits") {
  auto O = pcm_O();

  SubjState unit_state{ownbar(), ownbar()};
  auto splits = star_split(*O, unit_state);
  bool has_unit_split = false;
  for (const auto& [s1, s2] : splits)
    if (s1 == unit_state && s2 == unit_state) has_unit_split = true;
  CHECK(has_unit_split);

  SubjState s{own(), ownbar()};
  auto parts = star_split(*O, s);
  SubjState left{own(), ownbar()};
  SubjState right{ownbar(), own()};
  bool found = false;
  for (const auto& [s1, s2] : parts)
    if (s1 == left && s2 == right) found = true;
  CHECK(found);

  // Every returned pair reconstructs s.
  for (const auto& p : {pcm_O(), pcm_tickets(2)}) {
    for (const auto& st : all_subj_states(*p)) {
      for (const auto& [s1, s2] : star_split(*p, st)) {
        CHECK(p->join(s1.self, s2.self) == st.self);
        CHECK(s1.other == p->join(s2.self, st.other));
        CHECK(s2.other == p->join(s1.self, st.other));
        CHECK(subj_state_ok(*p, s1));
        CHECK(subj_state_ok(*p, s2));
      }
    }
  }
}

TEST_CASE("join commutes and associates over full carriers") {
  for (const auto& p : {pcm_O(), pcm_tickets(2)}) {
    const int n = p->size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(p->join_index(a, b) == p->join_index(b, a));
        for (int c = 0; c < n; ++c)
          CHECK(p->join_index(p->join_index(a, b), c) ==
                p->join_index(a, p->join_index(b, c)));
      }
  }
}
