#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "support/groups.hpp"
#include "tfs/catalog.hpp"
#include "tfs/errors.hpp"

using tfs::CatalogEntry;
using tfs::small_group_catalog;

TEST_CASE("catalog has the classical number of isomorphism types per order") {
  // Number of groups of order n for n = 1..24.
  const std::uint32_t expected[]{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  std::map<std::uint32_t, std::uint32_t> counts;
  for (const auto& entry : small_group_catalog()) counts[entry.order] += 1;
  for (std::uint32_t n = 1; n <= 24; ++n) CHECK(counts[n] == expected[n - 1]);
  CHECK(small_group_catalog().size() == 74);
}

TEST_CASE("entries carry groups of the stated order") {
  for (const auto& entry : small_group_catalog()) {
    CHECK(entry.group.order() == entry.order);
    CHECK(entry.group.degree() <= 24);
  }
}

TEST_CASE("entries of equal order are pairwise non-isomorphic") {
  const auto& catalog = small_group_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      if (catalog[i].order != catalog[j].order) continue;
      INFO(catalog[i].name, " vs ", catalog[j].name);
      CHECK_FALSE(are_isomorphic(catalog[i].group, catalog[j].group).has_value());
      CHECK(tfs::descriptor(catalog[i].group) != tfs::descriptor(catalog[j].group));
    }
}

TEST_CASE("descriptors within the catalog agree with isomorphism on spot pairs") {
  // Same-name spot identifications against independent constructions.
  CHECK(are_isomorphic(tfs::catalog_entry("S4").group, tfs_test::symmetric(4)).has_value());
  CHECK(are_isomorphic(tfs::catalog_entry("Q8").group, tfs_test::quaternion8()).has_value());
  CHECK(are_isomorphic(tfs::catalog_entry("A4").group, tfs_test::alternating4()).has_value());
  CHECK(are_isomorphic(tfs::catalog_entry("C12").group, tfs_test::cyclic(12)).has_value());
  CHECK(are_isomorphic(tfs::catalog_entry("D8").group, tfs_test::dihedral(4)).has_value());
  CHECK(are_isomorphic(tfs::catalog_entry("C2xDic3").group,
                       tfs::catalog_entry("C2xDic3").group)
            .has_value());
  CHECK_THROWS_AS(tfs::catalog_entry("E8"), tfs::DomainError);
}

TEST_CASE("structural spot checks") {
  CHECK_FALSE(tfs::catalog_entry("SL23").group.is_abelian());
  CHECK(tfs::catalog_entry("SL23").group.order() == 24);
  // SL(2,3) has a unique element of order 2.
  auto hist = tfs::descriptor(tfs::catalog_entry("SL23").group).element_order_histogram;
  CHECK(hist[2] == 1);
  // The central product D8 o C4 and C2^2:C4 share order statistics but are
  // distinguished by their certificates.
  auto a = tfs::descriptor(tfs::catalog_entry("D8oC4").group);
  auto b = tfs::descriptor(tfs::catalog_entry("C2^2:C4").group);
  CHECK(a.element_order_histogram == b.element_order_histogram);
  CHECK(a.canonical_certificate != b.canonical_certificate);
  // Dicyclic groups have a unique involution.
  for (const char* name : {"Q8", "Q16", "Dic3", "Dic5", "Dic6"}) {
    auto h = tfs::descriptor(tfs::catalog_entry(name).group).element_order_histogram;
    CHECK(h[2] == 1);
  }
}
