#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "tfs/errors.hpp"
#include "tfs/indexset.hpp"

using tfs::ConcordantQuotient;
using tfs::Ordinal;
using tfs::PairIndex;
using tfs::ProductOrder;
using tfs::ValueKey;

namespace {

Ordinal O(const char* s) { return tfs::parse_ordinal(s); }
PairIndex P(std::uint64_t i, std::uint64_t j) { return PairIndex{Ordinal(i), Ordinal(j)}; }

// All ordinary pairs of a finite order, in lex order.
std::vector<PairIndex> enumerate(const ProductOrder& order) {
  std::vector<PairIndex> out;
  PairIndex p = order.min_element();
  while (true) {
    out.push_back(p);
    if (p == order.max_element()) break;
    p = order.successor(p);
  }
  return out;
}

}  // namespace

TEST_CASE("lexicographic comparison") {
  ProductOrder order(Ordinal(3), Ordinal(2));
  CHECK(order.lex_compare(P(1, 2), P(2, 1)) < 0);
  CHECK(order.lex_compare(P(2, 1), P(2, 1)) == 0);
  CHECK_THROWS_AS(order.lex_compare(P(3, 1), P(1, 1)), tfs::DomainError);
  CHECK_THROWS_AS(order.lex_compare(P(1, 3), P(1, 1)), tfs::DomainError);
  CHECK_THROWS_AS(order.lex_compare(P(0, 1), P(1, 1)), tfs::DomainError);
}

TEST_CASE("adjoined maximum for limit major bounds") {
  ProductOrder order(O("w"), Ordinal(2));
  CHECK(order.has_adjoined_max());
  PairIndex top{O("w"), Ordinal(1)};
  CHECK(order.max_element() == top);
  CHECK(order.contains(top));
  CHECK(order.lex_compare(top, P(5, 2)) > 0);
  CHECK(order.lex_compare(P(5, 2), top) < 0);
  CHECK(order.is_limit(top));
  CHECK_THROWS_AS(order.successor(top), tfs::DomainError);
  // (w, 2) is not a member: only the adjoined pair carries major = bound.
  CHECK_FALSE(order.contains(PairIndex{O("w"), Ordinal(2)}));

  ProductOrder finite(Ordinal(3), Ordinal(2));
  CHECK_FALSE(finite.has_adjoined_max());
  CHECK(finite.max_element() == P(2, 2));
}

TEST_CASE("pair successor") {
  ProductOrder order(Ordinal(3), Ordinal(2));
  CHECK(order.successor(P(1, 1)) == P(1, 2));
  CHECK(order.successor(P(1, 2)) == P(2, 1));
  CHECK_THROWS_AS(order.successor(P(2, 2)), tfs::DomainError);

  ProductOrder limit(O("w"), Ordinal(2));
  CHECK(limit.successor(P(5, 2)) == P(6, 1));
}

TEST_CASE("limit pairs") {
  ProductOrder order(O("w+1"), O("w"));
  CHECK(order.is_limit(PairIndex{O("w"), Ordinal(1)}));
  CHECK(order.is_limit(PairIndex{Ordinal(3), O("w")}));
  CHECK_FALSE(order.is_limit(P(3, 4)));
  CHECK_FALSE(order.is_limit(P(3, 1)));
}

TEST_CASE("finite minima by hand") {
  ProductOrder order(Ordinal(3), Ordinal(2));
  std::vector<PairIndex> subset{P(2, 1), P(1, 2)};
  PairIndex min = subset[0];
  for (const auto& p : subset)
    if (order.lex_compare(p, min) < 0) min = p;
  CHECK(min == P(1, 2));

  ProductOrder infinite(O("w"), Ordinal(2));
  std::vector<PairIndex> ks{P(7, 1), P(3, 1), P(9, 1)};
  min = ks[0];
  for (const auto& p : ks)
    if (infinite.lex_compare(p, min) < 0) min = p;
  CHECK(min == P(3, 1));
}

TEST_CASE("well-order sampling finds no violations") {
  ProductOrder order(O("w*2"), Ordinal(3));
  auto report = tfs::check_wellorder(order, 1000, 42);
  CHECK(report.samples_run == 1000);
  CHECK(report.violations.empty());
}

TEST_CASE("random ordinals respect their bound") {
  std::uint64_t state = 7;
  for (const char* bound : {"w", "w*2", "w^2+w*3+2", "17", "w+1"}) {
    Ordinal b = O(bound);
    for (int k = 0; k < 200; ++k) CHECK(tfs::random_ordinal_below(b, state) < b);
  }
}

TEST_CASE("lex order is total and antisymmetric on small exhaustive orders") {
  for (std::uint64_t n = 2; n <= 6; ++n)
    for (std::uint64_t m = 1; m <= 6; ++m) {
      ProductOrder order{Ordinal(n), Ordinal(m)};
      auto pairs = enumerate(order);
      CHECK(pairs.size() == (n - 1) * m);
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          auto ab = order.lex_compare(pairs[a], pairs[b]);
          CHECK((ab == 0) == (a == b));
          CHECK((ab < 0) == (a < b));
        }
    }
}

TEST_CASE("degenerate and injective quotients") {
  ProductOrder order(Ordinal(3), Ordinal(2));  // n=3 means majors {1,2}: 4 pairs

  auto constant = tfs::build_quotient(order, [](const PairIndex&) { return ValueKey("x"); });
  CHECK(constant.order_type() == Ordinal(1));
  CHECK(constant.class_max(Ordinal(1)) == P(2, 2));
  CHECK(constant.class_min(Ordinal(1)) == P(1, 1));

  auto injective = tfs::build_quotient(
      order, [](const PairIndex& p) { return tfs::format(p); });
  CHECK(injective.order_type() == Ordinal(4));
  for (const auto& p : enumerate(order)) {
    CHECK(injective.class_max_of(p) == p);
    CHECK(injective.class_min_of(p) == p);
  }
}

TEST_CASE("quotient classes are convex with adjacent boundaries") {
  // Step map with three classes over a 3x4 grid of pairs.
  ProductOrder order(Ordinal(4), Ordinal(4));
  auto pairs = enumerate(order);
  auto value = [&](const PairIndex& p) -> ValueKey {
    std::size_t pos = static_cast<std::size_t>(
        std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
    if (pos < 3) return "a";
    if (pos < 7) return "b";
    return "c";
  };
  auto q = tfs::build_quotient(order, value);
  CHECK(q.order_type() == Ordinal(3));
  for (std::uint64_t c = 1; c < 3; ++c) {
    PairIndex mx = q.class_max(Ordinal(c));
    PairIndex mn_next = q.class_min(Ordinal(c + 1));
    CHECK(order.successor(mx) == mn_next);
  }
  CHECK(q.class_of(P(1, 2)) == Ordinal(1));
  CHECK(q.class_of(P(2, 3)) == Ordinal(2));
  CHECK(q.class_of(P(3, 4)) == Ordinal(3));
  CHECK(q.class_successor(P(1, 1)) == Ordinal(2));
  CHECK_THROWS_AS(q.class_successor(P(3, 4)), tfs::DomainError);
  // Representative independence of the class comparison.
  CHECK(q.class_of(P(1, 1)) < q.class_of(P(2, 1)));
  CHECK(q.class_of(P(1, 3)) < q.class_of(P(3, 2)));
}

TEST_CASE("non-concordant value maps are rejected with a witness") {
  ProductOrder order(Ordinal(3), Ordinal(2));
  auto bad = [](const PairIndex& p) -> ValueKey {
    // a, b, a along the lex order: not convex.
    if (p == P(1, 2)) return "b";
    return "a";
  };
  CHECK_THROWS_AS(tfs::build_quotient(order, bad), tfs::ContractError);
  try {
    tfs::build_quotient(order, bad);
  } catch (const tfs::ContractError& e) {
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);
  }
}

TEST_CASE("order type matches a sort-and-count oracle on all finite cases") {
  std::uint64_t state = 99;
  for (std::uint64_t n = 2; n <= 7; ++n)
    for (std::uint64_t m = 1; m <= 6; ++m) {
      if ((n - 1) * m > 36) continue;
      ProductOrder order{Ordinal(n), Ordinal(m)};
      auto pairs = enumerate(order);
      // Deterministic class layouts of every possible class count, plus a
      // few random monotone layouts.
      for (std::uint64_t classes = 1; classes <= pairs.size(); ++classes) {
        std::vector<std::size_t> label(pairs.size());
        for (std::size_t t = 0; t < pairs.size(); ++t)
          label[t] = std::min<std::size_t>(t * classes / pairs.size(), classes - 1);
        auto value = [&](const PairIndex& p) -> ValueKey {
          std::size_t pos = static_cast<std::size_t>(
              std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
          return "k" + std::to_string(label[pos]);
        };
        auto q = tfs::build_quotient(order, value);
        // Oracle: sort by lex_compare, count key runs.
        std::vector<PairIndex> sorted = pairs;
        std::sort(sorted.begin(), sorted.end(), [&](const PairIndex& a, const PairIndex& b) {
          return order.lex_compare(a, b) < 0;
        });
        std::uint64_t runs = 0;
        ValueKey prev;
        for (const auto& p : sorted) {
          ValueKey k = value(p);
          if (runs == 0 || k != prev) ++runs;
          prev = k;
        }
        CHECK(q.order_type() == Ordinal(runs));
        (void)state;
      }
    }
}

TEST_CASE("locator-backed quotients answer through their callbacks") {
  // Classes of [1, w) x [1, 1]: pair (i, 1) in class i; top class at the
  // adjoined maximum.
  ProductOrder order(O("w"), Ordinal(1));
  tfs::QuotientLocator locator;
  locator.order_type = O("w");
  locator.class_index_of = [&](const PairIndex& p) {
    return order.is_adjoined_max(p) ? O("w") : p.major;
  };
  locator.class_min = [&](const Ordinal& c) {
    return c == O("w") ? order.max_element() : PairIndex{c, Ordinal(1)};
  };
  locator.class_max = [&](const Ordinal& c) -> std::optional<PairIndex> {
    return c == O("w") ? order.max_element() : PairIndex{c, Ordinal(1)};
  };
  auto value = [&](const PairIndex& p) -> ValueKey {
    return tfs::format(order.is_adjoined_max(p) ? O("w") : p.major);
  };
  auto q = tfs::build_quotient_with_locator(order, value, locator);
  CHECK(q.order_type() == O("w"));
  CHECK(q.class_of(P(17, 1)) == Ordinal(17));
  CHECK(q.class_max(Ordinal(3)) == P(3, 1));
  CHECK(q.class_of(order.max_element()) == O("w"));
}

TEST_CASE("locator class without reachable maximum raises a resource error") {
  ProductOrder order(O("w"), Ordinal(1));
  tfs::QuotientLocator locator;
  locator.order_type = Ordinal(1);
  locator.class_index_of = [](const PairIndex&) { return Ordinal(1); };
  locator.class_min = [&](const Ordinal&) { return order.min_element(); };
  locator.class_max = [](const Ordinal&) -> std::optional<PairIndex> { return std::nullopt; };
  auto q = tfs::build_quotient_with_locator(
      order, [](const PairIndex&) { return ValueKey("x"); }, locator);
  CHECK_THROWS_AS(q.class_max(Ordinal(1)), tfs::ResourceError);
}

TEST_CASE("quotient of class-min representatives is itself well ordered") {
  ProductOrder order(Ordinal(7), Ordinal(5));
  auto pairs = enumerate(order);
  auto value = [&](const PairIndex& p) -> ValueKey {
    std::size_t pos = static_cast<std::size_t>(
        std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
    return "k" + std::to_string(pos / 4);
  };
  auto q = tfs::build_quotient(order, value);
  // Random subsets of the class-minimum representatives: lex_compare stays a
  // total order and every subset has a unique minimum.
  std::vector<PairIndex> mins;
  for (std::uint64_t c = 1; c <= q.order_type().finite_value(); ++c)
    mins.push_back(q.class_min(Ordinal(c)));
  std::uint64_t state = 11;
  auto next = [&state] {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    return z ^ (z >> 31);
  };
  for (int round = 0; round < 200; ++round) {
    std::vector<PairIndex> subset;
    for (std::size_t k = 0; k < 2 + next() % 5; ++k) subset.push_back(mins[next() % mins.size()]);
    PairIndex min = subset[0];
    std::size_t min_count = 0;
    for (const auto& p : subset)
      if (order.lex_compare(p, min) < 0) min = p;
    for (const auto& p : subset) {
      CHECK(order.lex_compare(min, p) <= 0);
      if (order.lex_compare(p, min) == 0) ++min_count;
    }
    CHECK(min_count == std::count(subset.begin(), subset.end(), min));
  }
  // The class indices follow the class minima as the ordinal segment [1, p].
  ProductOrder class_order{tfs::successor(q.order_type()), Ordinal(1)};
  auto report = tfs::check_wellorder(class_order, 300, 5);
  CHECK(report.ok());
}

TEST_CASE("class comparison does not depend on the chosen representatives") {
  ProductOrder order(Ordinal(6), Ordinal(4));
  auto pairs = enumerate(order);
  auto value = [&](const PairIndex& p) -> ValueKey {
    std::size_t pos = static_cast<std::size_t>(
        std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
    return "k" + std::to_string(pos / 3);
  };
  auto q = tfs::build_quotient(order, value);
  // For any two members of one class and any member of another, the
  // lex-derived comparison of classes agrees.
  for (const auto& a : pairs)
    for (const auto& a_prime : pairs) {
      if (q.class_of(a) != q.class_of(a_prime)) continue;
      for (const auto& b : pairs) {
        if (q.class_of(b) == q.class_of(a)) continue;
        bool lex_first = order.lex_compare(a, b) < 0;
        bool lex_second = order.lex_compare(a_prime, b) < 0;
        CHECK(lex_first == lex_second);
        CHECK(lex_first == (q.class_of(a) < q.class_of(b)));
      }
    }
}
