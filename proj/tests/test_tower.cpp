#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tfs/errors.hpp"
#include "tfs/tower.hpp"

using tfs::IntervalSet;
using tfs::Ordinal;
using tfs::PositionBijection;
using tfs::SimpleLabel;
using tfs::TowerGroup;
using tfs::TowerMove;
using tfs::TowerSeries;

namespace {

Ordinal O(const char* s) { return tfs::parse_ordinal(s); }
IntervalSet IS(const char* s) { return tfs::parse_interval_set(s); }

// Pool of interval sets used by the algebra property checks.
std::vector<IntervalSet> sample_sets() {
  return {
      IS(""),
      IS("[0,1)"),
      IS("[0,w)"),
      IS("[3,5) [7,w)"),
      IS("[0,2) [4,w+3)"),
      IS("[w,w*2)"),
      IS("[1,4) [w+1,w+5)"),
      IS("[0,w*2)"),
  };
}

}  // namespace

TEST_CASE("interval set basics") {
  CHECK(set_union(IS("[0,w)"), IS("[w,w+2)")) == IS("[0,w+2)"));
  CHECK(set_intersect(IS("[0,5)"), IS("[3,w)")) == IS("[3,5)"));
  CHECK(set_difference(IS("[0,w+1)"), IS("[2,4)")) == IS("[0,2) [4,w+1)"));
  CHECK(IS("[0,3) [3,6)") == IS("[0,6)"));
  CHECK(IS("").empty());
  CHECK(IS("[2,2)").empty());
  CHECK(IS("[0,w)").contains(Ordinal(5)));
  CHECK_FALSE(IS("[0,w)").contains(O("w")));
  CHECK(IS("[3,5)").is_subset_of(IS("[0,w)")));
  CHECK_FALSE(IS("[3,5)").is_subset_of(IS("[4,w)")));
  CHECK(IS("[0,w) [w*2,w*3)").order_type() == O("w*2"));
  CHECK(IS("[2,4) [7,9)").cardinality() == std::uint64_t{4});
  CHECK_FALSE(IS("[0,w)").cardinality().has_value());
  CHECK(tfs::format(IS("[0,2) [4,w+1)")) == "[0,2) [4,w+1)");
}

TEST_CASE("difference agrees with a pointwise membership oracle") {
  std::vector<Ordinal> probes{Ordinal(0), Ordinal(1), Ordinal(3),  Ordinal(4),
                              Ordinal(6), O("w"),     O("w+1"),    O("w+4"),
                              O("w*2"),   O("w*2+1"), O("w^2"),    Ordinal(9)};
  for (const auto& a : sample_sets())
    for (const auto& b : sample_sets()) {
      IntervalSet d = set_difference(a, b);
      IntervalSet u = set_union(a, b);
      IntervalSet i = set_intersect(a, b);
      for (const auto& q : probes) {
        CHECK(d.contains(q) == (a.contains(q) && !b.contains(q)));
        CHECK(u.contains(q) == (a.contains(q) || b.contains(q)));
        CHECK(i.contains(q) == (a.contains(q) && b.contains(q)));
      }
    }
}

TEST_CASE("interval sets form a boolean algebra relative to a universe") {
  IntervalSet universe = IS("[0,w*3)");
  auto sets = sample_sets();
  for (const auto& a : sets)
    for (const auto& b : sets) {
      CHECK(set_union(a, b) == set_union(b, a));
      CHECK(set_intersect(a, b) == set_intersect(b, a));
      for (const auto& c : sets) {
        CHECK(set_intersect(a, set_union(b, c)) ==
              set_union(set_intersect(a, b), set_intersect(a, c)));
        CHECK(set_union(a, set_intersect(b, c)) ==
              set_intersect(set_union(a, b), set_union(a, c)));
      }
      // De Morgan within the universe.
      auto complement = [&](const IntervalSet& x) { return set_difference(universe, x); };
      CHECK(complement(set_union(a, b)) == set_intersect(complement(a), complement(b)));
      CHECK(complement(set_intersect(a, b)) == set_union(complement(a), complement(b)));
    }
}

TEST_CASE("simple labels") {
  CHECK(SimpleLabel::cyclic(2).name() == "C2");
  CHECK(SimpleLabel::parse("C7") == SimpleLabel::cyclic(7));
  CHECK(SimpleLabel::parse("A5").name() == "A5");
  CHECK_THROWS_AS(SimpleLabel::cyclic(6), tfs::DomainError);
  CHECK_THROWS_AS(SimpleLabel::parse("B2"), tfs::ParseError);
}

TEST_CASE("tower groups carry piecewise labels") {
  TowerGroup g(O("w"), {{{Ordinal(0), Ordinal(1)}, SimpleLabel::cyclic(3)},
                        {{Ordinal(1), O("w")}, SimpleLabel::cyclic(2)}});
  CHECK(g.label_at(Ordinal(0)) == SimpleLabel::cyclic(3));
  CHECK(g.label_at(Ordinal(17)) == SimpleLabel::cyclic(2));
  CHECK_THROWS_AS(g.label_at(O("w")), tfs::DomainError);
  CHECK_THROWS_AS(TowerGroup(O("w"), {{{Ordinal(0), Ordinal(1)}, SimpleLabel::cyclic(2)}}),
                  tfs::DomainError);
  // Adjacent equal labels merge, so equal groups compare equal.
  TowerGroup split(Ordinal(6), {{{Ordinal(0), Ordinal(3)}, SimpleLabel::cyclic(2)},
                                {{Ordinal(3), Ordinal(6)}, SimpleLabel::cyclic(2)}});
  CHECK(split == TowerGroup::constant(Ordinal(6), SimpleLabel::cyclic(2)));
}

TEST_CASE("identity enumeration on bound w") {
  TowerGroup g = TowerGroup::constant(O("w"), SimpleLabel::cyclic(2));
  TowerSeries s = series_from_bijection(g, PositionBijection::identity(O("w")));
  CHECK(s.top_index() == O("w"));
  CHECK(s.term_count() == O("w+1"));
  CHECK(s.support_at(Ordinal(1)).empty());
  CHECK(s.support_at(Ordinal(2)) == IS("[0,1)"));
  CHECK(s.support_at(Ordinal(5)) == IS("[0,4)"));
  CHECK(s.support_at(O("w")) == IS("[0,w)"));
  CHECK(s.increment_at(Ordinal(3)) == IS("[2,3)"));
  CHECK(s.threshold_of(Ordinal(3)) == Ordinal(5));
  CHECK_THROWS_AS(s.threshold_of(O("w")), tfs::DomainError);
}

TEST_CASE("moving position zero to the end lengthens the order") {
  TowerGroup g = TowerGroup::constant(O("w"), SimpleLabel::cyclic(2));
  auto moved = PositionBijection::from_moves(
      O("w"), {tfs::parse_tower_move("[0,1) end")});
  CHECK(moved.order_type() == O("w+1"));
  CHECK(moved.address_of(Ordinal(0)) == O("w"));
  CHECK(moved.address_of(Ordinal(1)) == Ordinal(0));
  CHECK(moved.position_at(O("w")) == Ordinal(0));

  TowerSeries s = series_from_bijection(g, moved);
  CHECK(s.top_index() == O("w+1"));
  CHECK(s.term_count() == O("w+2"));
  CHECK(s.support_at(Ordinal(2)) == IS("[1,2)"));
  CHECK(s.support_at(O("w")) == IS("[1,w)"));
  CHECK(s.support_at(O("w+1")) == IS("[0,w)"));
  CHECK(s.threshold_of(Ordinal(0)) == O("w+1"));
  CHECK(s.step_adding(Ordinal(0)) == O("w"));
  CHECK(s.increment_at(O("w")) == IS("[0,1)"));
}

TEST_CASE("block swap on a finite bound") {
  TowerGroup g = TowerGroup::constant(Ordinal(6), SimpleLabel::cyclic(2));
  auto swapped = PositionBijection::from_moves(
      Ordinal(6), {tfs::parse_tower_move("[0,2) before 4")});
  TowerSeries s = series_from_bijection(g, swapped);
  CHECK(s.top_index() == Ordinal(7));
  // Enumeration order 2,3,0,1,4,5: all seven supports.
  const char* expected[]{"", "[2,3)", "[2,4)", "[0,1) [2,4)",
                         "[0,4)", "[0,5)", "[0,6)"};
  for (std::uint64_t k = 1; k <= 7; ++k) CHECK(s.support_at(Ordinal(k)) == IS(expected[k - 1]));
}

TEST_CASE("moves compose and invert") {
  auto b = PositionBijection::identity(Ordinal(8));
  TowerMove out{{Ordinal(2), Ordinal(4)}, std::nullopt};
  auto moved = b.moved(out);
  CHECK(moved.order_type() == Ordinal(8));
  // Putting the block back before its old right neighbor restores identity.
  TowerMove back{{Ordinal(2), Ordinal(4)}, Ordinal(4)};
  CHECK(moved.moved(back).segments() == b.segments());
  CHECK_THROWS_AS(b.moved(TowerMove{{Ordinal(2), Ordinal(4)}, Ordinal(3)}), tfs::DomainError);
}

TEST_CASE("address arithmetic survives stacked moves") {
  // Two moves on bound w*2: send [0,3) to the end, then [w,w+2) to the front.
  auto b = PositionBijection::from_moves(
      O("w*2"), {tfs::parse_tower_move("[0,3) end"), tfs::parse_tower_move("[w,w+2) before 3")});
  // Enumeration: w, w+1, 3, 4, ..., w+2, w+3, ..., 0, 1, 2.
  CHECK(b.address_of(O("w")) == Ordinal(0));
  CHECK(b.address_of(Ordinal(3)) == Ordinal(2));
  CHECK(b.address_of(O("w+5")) == O("w+3"));
  CHECK(b.address_of(Ordinal(0)) == O("w*2"));
  CHECK(b.order_type() == O("w*2+3"));
  for (const char* addr : {"0", "1", "2", "5", "w", "w+2", "w*2", "w*2+2"}) {
    Ordinal a = O(addr);
    CHECK(b.address_of(b.position_at(a)) == a);
  }
  // Image and preimage of interval sets round-trip.
  IntervalSet probe = IS("[0,2) [4,w+1)");
  CHECK(b.positions_of(b.addresses_of(probe)) == probe);
}

TEST_CASE("explicit support chains") {
  TowerGroup g(O("w"), {{{Ordinal(0), O("w")}, SimpleLabel::cyclic(2)}});
  TowerSeries coarse = series_from_supports(
      g, {IntervalSet(), IS("[0,w)")});
  CHECK(coarse.top_index() == Ordinal(2));
  CHECK(coarse.term_count() == Ordinal(2));
  auto labels = factor_label(coarse, Ordinal(1));
  CHECK_FALSE(labels.is_single_position());
  CHECK(labels.counts.size() == 1);
  CHECK_FALSE(labels.counts[0].second.has_value());  // countably many positions
  CHECK(labels.to_string() == "C2:w");
  CHECK_THROWS_AS(series_from_supports(g, {IS("[0,w+1)")}), tfs::DomainError);
}

TEST_CASE("factor labels follow the enumeration") {
  // Alternating labels on singleton pieces of a finite bound.
  TowerGroup g(Ordinal(4), {{{Ordinal(0), Ordinal(1)}, SimpleLabel::cyclic(2)},
                            {{Ordinal(1), Ordinal(2)}, SimpleLabel::cyclic(3)},
                            {{Ordinal(2), Ordinal(3)}, SimpleLabel::cyclic(2)},
                            {{Ordinal(3), Ordinal(4)}, SimpleLabel::cyclic(3)}});
  auto swapped = PositionBijection::from_moves(
      Ordinal(4), {tfs::parse_tower_move("[0,2) end")});
  TowerSeries s = series_from_bijection(g, swapped);
  // Enumeration: 2, 3, 0, 1.
  const char* expected[]{"C2", "C3", "C2", "C3"};
  for (std::uint64_t i = 1; i <= 4; ++i) {
    auto labels = factor_label(s, Ordinal(i));
    CHECK(labels.is_single_position());
    CHECK(labels.to_string() == expected[i - 1]);
    // The factor at i carries the label of the position the step adds.
    Ordinal position = s.enumeration().position_at(Ordinal(i - 1));
    CHECK(labels.counts[0].first == g.label_at(position));
  }
}

TEST_CASE("enumerated series satisfy the limit-union condition symbolically") {
  auto moved = PositionBijection::from_moves(
      O("w*2"), {tfs::parse_tower_move("[0,1) end")});
  TowerGroup g = TowerGroup::constant(O("w*2"), SimpleLabel::cyclic(5));
  TowerSeries s = series_from_bijection(g, moved);
  CHECK(s.top_index() == O("w*2+1"));
  for (const char* lim : {"w", "w*2"}) {
    Ordinal limit = O(lim);
    IntervalSet at_limit = s.support_at(limit);
    // Every position present at the limit appears strictly earlier.
    for (const auto& iv : at_limit.intervals()) {
      CHECK(s.threshold_of(iv.lo) < limit);
      if (iv.length().is_finite() && iv.length().finite_value() >= 2)
        CHECK(s.threshold_of(tfs::successor(iv.lo)) < limit);
    }
    // And sampled earlier supports stay inside it.
    for (std::uint64_t k = 2; k <= 6; ++k)
      CHECK(s.support_at(Ordinal(k)).is_subset_of(at_limit));
  }
}

TEST_CASE("two enumerations of one group add every position exactly once") {
  TowerGroup g = TowerGroup::constant(O("w"), SimpleLabel::cyclic(2));
  TowerSeries s1 = series_from_bijection(g, PositionBijection::identity(O("w")));
  TowerSeries s2 = series_from_bijection(
      g, PositionBijection::from_moves(O("w"), {tfs::parse_tower_move("[0,1) end")}));
  for (std::uint64_t q = 0; q < 20; ++q) {
    Ordinal position(q);
    Ordinal i1 = s1.step_adding(position);
    Ordinal i2 = s2.step_adding(position);
    CHECK(s1.increment_at(i1) == s2.increment_at(i2));
    CHECK(factor_label(s1, i1).to_string() == factor_label(s2, i2).to_string());
  }
}
