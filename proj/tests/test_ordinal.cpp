#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "support/naive_ordinal.hpp"
#include "tfs/errors.hpp"
#include "tfs/ordinal.hpp"

using tfs::Ordinal;
using tfs_test::NaiveOrdinal;

namespace {

Ordinal O(const char* s) { return tfs::parse_ordinal(s); }

// The exhaustive pool: all ordinals below w^3 with coefficients <= 4.
struct PoolItem {
  Ordinal ord;
  NaiveOrdinal naive;
};

std::vector<PoolItem> pool_below_w3() {
  std::vector<PoolItem> pool;
  for (std::uint64_t a2 = 0; a2 <= 4; ++a2)
    for (std::uint64_t a1 = 0; a1 <= 4; ++a1)
      for (std::uint64_t a0 = 0; a0 <= 4; ++a0) {
        Ordinal o = Ordinal::omega_power(Ordinal(2), a2) + Ordinal::omega_power(Ordinal(1), a1) +
                    Ordinal(a0);
        pool.push_back({o, tfs_test::naive_from(a2, a1, a0)});
      }
  return pool;
}

NaiveOrdinal to_naive(const Ordinal& o) {
  NaiveOrdinal r;
  for (const auto& t : o.terms()) {
    REQUIRE(t.exponent.is_finite());
    r.c[t.exponent.finite_value()] = t.coefficient;
  }
  return r;
}

}  // namespace

TEST_CASE("comparison basics") {
  CHECK(tfs::compare(O("w"), O("w")) == std::strong_ordering::equal);
  CHECK(tfs::compare(O("w+1"), O("w*2")) == std::strong_ordering::less);
  CHECK(tfs::compare(O("w^2"), O("w*5+4")) == std::strong_ordering::greater);
  CHECK(O("w") < O("w+1"));
  CHECK(Ordinal(0) < Ordinal(1));
  CHECK(Ordinal(3) == Ordinal(3));
}

TEST_CASE("successor and predecessor") {
  CHECK(tfs::successor(Ordinal(4)) == Ordinal(5));
  CHECK(tfs::successor(O("w")) == O("w+1"));
  CHECK(tfs::predecessor(O("w*2+1")) == O("w*2"));
  CHECK_THROWS_AS(tfs::predecessor(Ordinal(0)), tfs::DomainError);
  CHECK_THROWS_AS(tfs::predecessor(O("w")), tfs::DomainError);
  CHECK_THROWS_AS(tfs::predecessor(O("w^2+w*3")), tfs::DomainError);
}

TEST_CASE("limit classification") {
  CHECK(tfs::is_limit(O("w")));
  CHECK_FALSE(tfs::is_limit(Ordinal(7)));
  CHECK(tfs::is_limit(O("w^2+w*3")));
  CHECK_FALSE(tfs::is_limit(Ordinal(0)));
  CHECK_FALSE(tfs::is_limit(O("w+1")));
}

TEST_CASE("addition and multiplication basics") {
  CHECK(Ordinal(1) + O("w") == O("w"));
  CHECK(O("w+2") + O("w*3") == O("w*4"));
  CHECK(Ordinal(2) * O("w") == O("w"));
  CHECK(O("w") * Ordinal(2) == O("w*2"));
  CHECK(O("w+1") * O("w+2") == O("w^2+w*2+1"));
  CHECK(O("w") * Ordinal(0) == Ordinal(0));
  CHECK(Ordinal(0) * O("w") == Ordinal(0));
  CHECK(Ordinal(3) + Ordinal(4) == Ordinal(7));
  CHECK(Ordinal(3) * Ordinal(4) == Ordinal(12));
}

TEST_CASE("left subtraction inverts addition from the left") {
  auto pool = pool_below_w3();
  for (std::size_t i = 0; i < pool.size(); i += 7)
    for (std::size_t j = 0; j < pool.size(); j += 5) {
      const Ordinal& a = pool[i].ord;
      const Ordinal& b = pool[j].ord;
      if (a <= b) CHECK(a + tfs::left_subtract(a, b) == b);
    }
  CHECK_THROWS_AS(tfs::left_subtract(O("w*2"), O("w")), tfs::DomainError);
}

TEST_CASE("parse and format") {
  CHECK(O("w*2+3") == Ordinal::omega_power(Ordinal(1), 2) + Ordinal(3));
  CHECK(tfs::format(O("w^2")) == "w^2");
  CHECK(O("w+w") == O("w*2"));
  CHECK(O("1+w") == O("w"));
  CHECK(tfs::format(Ordinal(0)) == "0");
  CHECK(tfs::format(O("w^2*3 + w + 4")) == "w^2*3+w+4");
  CHECK(O("w^(w+1)") == Ordinal::omega_power(O("w+1")));
  CHECK(tfs::format(O("w^(w+1)*2")) == "w^(w+1)*2");
  CHECK(tfs::format(O("w^w")) == "w^w");
  CHECK(O("w*0") == Ordinal(0));
  CHECK_THROWS_AS(O("w^"), tfs::ParseError);
  CHECK_THROWS_AS(O("3+"), tfs::ParseError);
  CHECK_THROWS_AS(O("q"), tfs::ParseError);
  CHECK_THROWS_AS(O("w 3"), tfs::ParseError);
  try {
    O("w^2*");
  } catch (const tfs::ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("round trip on the pool") {
  for (const auto& item : pool_below_w3())
    CHECK(tfs::parse_ordinal(tfs::format(item.ord)) == item.ord);
}

TEST_CASE("resource caps") {
  CHECK_THROWS_AS(Ordinal(Ordinal::kMaxCoefficient + 1), tfs::ResourceError);
  CHECK_THROWS_AS(O("4294967296"), tfs::ParseError);
  // Depth cap: w^w^w^... nested 9 deep.
  Ordinal deep(1);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 9; ++i) deep = Ordinal::omega_power(deep);
      }(),
      tfs::ResourceError);
  CHECK_THROWS_AS(Ordinal::omega_power(Ordinal(1), Ordinal::kMaxCoefficient) +
                      Ordinal::omega_power(Ordinal(1), 1),
                  tfs::ResourceError);
}

TEST_CASE("trichotomy is exhaustive on the pool") {
  auto pool = pool_below_w3();
  for (const auto& x : pool)
    for (const auto& y : pool) {
      int outcomes = 0;
      if (x.ord < y.ord) ++outcomes;
      if (x.ord == y.ord) ++outcomes;
      if (x.ord > y.ord) ++outcomes;
      CHECK(outcomes == 1);
      CHECK((x.ord == y.ord) == (x.naive == y.naive));
    }
}

TEST_CASE("successor and predecessor are mutually inverse on non-limit positives") {
  for (const auto& item : pool_below_w3()) {
    CHECK(tfs::predecessor(tfs::successor(item.ord)) == item.ord);
    if (!item.ord.is_zero() && !tfs::is_limit(item.ord))
      CHECK(tfs::successor(tfs::predecessor(item.ord)) == item.ord);
  }
}

TEST_CASE("no ordinal lies strictly between a and successor(a)") {
  auto pool = pool_below_w3();
  for (const auto& a : pool) {
    Ordinal s = tfs::successor(a.ord);
    for (const auto& b : pool) CHECK_FALSE((a.ord < b.ord && b.ord < s));
  }
}

TEST_CASE("below a limit ordinal, successors stay below") {
  auto pool = pool_below_w3();
  for (const auto& a : pool) {
    if (!tfs::is_limit(a.ord)) continue;
    for (const auto& b : pool)
      if (b.ord < a.ord) CHECK(tfs::successor(b.ord) < a.ord);
  }
}

TEST_CASE("add and mul agree with the dense reference on the exhaustive pool") {
  auto pool = pool_below_w3();
  for (const auto& x : pool)
    for (const auto& y : pool) {
      CHECK(to_naive(x.ord + y.ord) == tfs_test::naive_add(x.naive, y.naive));
      CHECK(to_naive(x.ord * y.ord) == tfs_test::naive_mul(x.naive, y.naive));
    }
}

TEST_CASE("addition below w^2 agrees with the order-sum of explicit well-orders") {
  // Encode w*a + b as its well-order: a limit blocks (type w each) followed
  // by b unit tokens. The sum of two ordinals is the order type of the
  // concatenated token list, read off the order structure: every unit that
  // precedes some limit block embeds below it and vanishes, so the type is
  // w * (number of limit blocks) + (units after the last limit block).
  struct Tokens {
    std::vector<bool> list;  // true = limit block, false = unit
  };
  auto encode = [](std::uint64_t a, std::uint64_t b) {
    Tokens t;
    t.list.assign(a, true);
    t.list.insert(t.list.end(), b, false);
    return t;
  };
  auto order_type_of = [](const Tokens& t) {
    std::uint64_t limit_blocks = 0, trailing_units = 0;
    for (bool block : t.list) {
      if (block) {
        ++limit_blocks;
        trailing_units = 0;
      } else {
        ++trailing_units;
      }
    }
    return Ordinal::omega_power(Ordinal(1), limit_blocks) + Ordinal(trailing_units);
  };
  for (std::uint64_t a1 = 0; a1 <= 4; ++a1)
    for (std::uint64_t b1 = 0; b1 <= 4; ++b1)
      for (std::uint64_t a2 = 0; a2 <= 4; ++a2)
        for (std::uint64_t b2 = 0; b2 <= 4; ++b2) {
          Tokens sum = encode(a1, b1);
          Tokens right = encode(a2, b2);
          sum.list.insert(sum.list.end(), right.list.begin(), right.list.end());
          Ordinal lhs = Ordinal::omega_power(Ordinal(1), a1) + Ordinal(b1);
          Ordinal rhs = Ordinal::omega_power(Ordinal(1), a2) + Ordinal(b2);
          CHECK(lhs + rhs == order_type_of(sum));
        }
  // The worked instance: (w+2) + (w*3) = w*4.
  CHECK(O("w+2") + O("w*3") == O("w*4"));
}

TEST_CASE("add is associative and mul left-distributes (sampled pool triples)") {
  auto pool = pool_below_w3();
  for (std::size_t i = 0; i < pool.size(); i += 11)
    for (std::size_t j = 0; j < pool.size(); j += 7)
      for (std::size_t k = 0; k < pool.size(); k += 5) {
        const Ordinal& a = pool[i].ord;
        const Ordinal& b = pool[j].ord;
        const Ordinal& c = pool[k].ord;
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
      }
}
