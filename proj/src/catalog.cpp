#include "tfs/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

// Multiplication tables used as scaffolding for groups whose natural
// description is a presentation rather than a permutation action. Element 0
// is always the identity.
struct Table {
  std::uint32_t n;
  std::vector<std::uint32_t> mul;
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

Table make_table(std::uint32_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& f) {
  Table t{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n)};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t.mul[a * n + b] = f(a, b);
  return t;
}

Table cyclic_table(std::uint32_t n) {
  return make_table(n, [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; });
}

// Dihedral group of order 2n as a table: element y*n + x is r^x s^y.
Table dihedral_table(std::uint32_t n) {
  return make_table(2 * n, [n](std::uint32_t a, std::uint32_t b) {
    std::uint32_t x1 = a % n, y1 = a / n, x2 = b % n, y2 = b / n;
    std::uint32_t x = y1 ? (x1 + n - x2) % n : (x1 + x2) % n;
    return (y1 ^ y2) * n + x;
  });
}

// Dicyclic group of order 4m: element y*2m + x is a^x b^y with a^(2m) = 1,
// b^2 = a^m, b a b^-1 = a^-1.
Table dicyclic_table(std::uint32_t m) {
  std::uint32_t two_m = 2 * m;
  return make_table(4 * m, [m, two_m](std::uint32_t a, std::uint32_t b) {
    std::uint32_t x1 = a % two_m, y1 = a / two_m, x2 = b % two_m, y2 = b / two_m;
    std::uint32_t x = y1 ? (x1 + two_m - x2) % two_m : (x1 + x2) % two_m;
    if (y1 && y2) x = (x + m) % two_m;
    return (y1 ^ y2) * two_m + x;
  });
}

// A |x| H for an action act(h, a) = phi_h(a) by automorphisms of A.
// Element h*|A| + a is the pair (a, h).
Table semidirect_table(const Table& a_grp, const Table& h_grp,
                       const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& act) {
  std::uint32_t na = a_grp.n;
  return make_table(na * h_grp.n, [&, na](std::uint32_t u, std::uint32_t v) {
    std::uint32_t a1 = u % na, h1 = u / na, a2 = v % na, h2 = v / na;
    return h_grp.at(h1, h2) * na + a_grp.at(a1, act(h1, a2));
  });
}

// C_a |x| C_b where the generator of C_b acts as x -> k*x (mod a);
// requires k^b = 1 (mod a).
Table semidirect_cyclic(std::uint32_t a, std::uint32_t b, std::uint32_t k) {
  std::vector<std::uint32_t> power(b);  // k^y mod a
  power[0] = 1;
  for (std::uint32_t y = 1; y < b; ++y) power[y] = power[y - 1] * k % a;
  if (power[b - 1] * k % a != 1)
    throw DomainError("semidirect action constant has wrong multiplicative order");
  Table ca = cyclic_table(a), cb = cyclic_table(b);
  return semidirect_table(ca, cb, [&](std::uint32_t h, std::uint32_t x) { return power[h] * x % a; });
}

PermGroup from_table(const Table& t) {
  return AbstractGroup(t.n, t.mul).regular_representation();
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint8_t> images(deg);
    for (std::size_t i = 0; i < a.degree(); ++i) images[i] = g(static_cast<std::uint8_t>(i));
    for (std::size_t i = a.degree(); i < deg; ++i) images[i] = static_cast<std::uint8_t>(i);
    gens.push_back(Perm::from_images(std::move(images)));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::uint8_t> images(deg);
    for (std::size_t i = 0; i < a.degree(); ++i) images[i] = static_cast<std::uint8_t>(i);
    for (std::size_t i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = static_cast<std::uint8_t>(a.degree() + g(static_cast<std::uint8_t>(i)));
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup::generate(std::move(gens), deg);
}

PermGroup cyclic_perm(std::uint32_t n) {
  if (n == 1) return PermGroup::trivial(1);
  std::vector<std::uint8_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>((i + 1) % n);
  return PermGroup::generate({Perm::from_images(std::move(images))}, n);
}

PermGroup dihedral_perm(std::uint32_t n) {
  std::vector<std::uint8_t> rot(n), flip(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint8_t>((i + 1) % n);
    flip[i] = static_cast<std::uint8_t>((n - i) % n);
  }
  return PermGroup::generate({Perm::from_images(std::move(rot)), Perm::from_images(std::move(flip))}, n);
}

PermGroup symmetric4() {
  return PermGroup::generate({Perm::parse("(0 1 2 3)", 4), Perm::parse("(0 1)", 4)}, 4);
}

PermGroup alternating4() {
  return PermGroup::generate({Perm::parse("(0 1 2)", 4), Perm::parse("(0 1)(2 3)", 4)}, 4);
}

// SL(2,3) acting on the eight nonzero vectors of F3^2; the action is
// faithful because the only scalars in SL(2,3) are +-I and -I moves
// every nonzero vector.
PermGroup special_linear_2_3() {
  auto vec_index = [](std::uint32_t x, std::uint32_t y) { return x * 3 + y - 1; };
  auto act = [&](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    std::vector<std::uint8_t> images(8);
    for (std::uint32_t x = 0; x < 3; ++x)
      for (std::uint32_t y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        std::uint32_t xx = (m00 * x + m01 * y) % 3;
        std::uint32_t yy = (m10 * x + m11 * y) % 3;
        images[vec_index(x, y)] = static_cast<std::uint8_t>(vec_index(xx, yy));
      }
    return Perm::from_images(std::move(images));
  };
  return PermGroup::generate({act(0, 2, 1, 0), act(1, 1, 0, 1)}, 8);
}

// The central product D8 o C4: quotient of D8 x C4 by the diagonal central
// subgroup generated by (r^2, c^2).
PermGroup central_product_d8_c4() {
  PermGroup product = direct_product(dihedral_perm(4), cyclic_perm(4));
  Perm diag = Perm::parse("(0 2)(1 3)(4 6)(5 7)", 8);
  PermGroup center = PermGroup::generate({diag}, 8);
  return quotient(product, center).regular_representation();
}

// (C2 x C2) |x| C4 with the generator of C4 swapping the two coordinates.
Table c2c2_semidirect_c4() {
  Table a = make_table(4, [](std::uint32_t x, std::uint32_t y) { return x ^ y; });
  Table c4 = cyclic_table(4);
  auto swap_bits = [](std::uint32_t v) { return ((v & 1) << 1) | ((v >> 1) & 1); };
  return semidirect_table(a, c4, [&](std::uint32_t h, std::uint32_t x) {
    return (h % 2) ? swap_bits(x) : x;
  });
}

// C3 |x| D8 where the rotation inverts C3 and the reflection fixes it.
Table c3_semidirect_d8() {
  Table c3 = cyclic_table(3);
  Table d8 = dihedral_table(4);
  return semidirect_table(c3, d8, [](std::uint32_t h, std::uint32_t x) {
    std::uint32_t r_exponent = h % 4;
    return (r_exponent % 2) ? (3 - x) % 3 : x;
  });
}

// (C3 x C3) |x| C2 by simultaneous inversion (the generalized dihedral
// group of C3 x C3).
Table c3c3_semidirect_c2() {
  Table a = make_table(9, [](std::uint32_t u, std::uint32_t v) {
    return (u / 3 + v / 3) % 3 * 3 + (u % 3 + v % 3) % 3;
  });
  Table c2 = cyclic_table(2);
  return semidirect_table(a, c2, [](std::uint32_t h, std::uint32_t x) {
    if (!h) return x;
    return (3 - x / 3) % 3 * 3 + (3 - x % 3) % 3;
  });
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest,
                                                              std::uint32_t max_part) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(rest - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void add_abelian_types(std::uint32_t order, std::vector<CatalogEntry>& out) {
  // Factor the order, then pick a partition of each prime's exponent: the
  // cyclic factors of the primary decomposition.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factorization;
  std::uint32_t rest = order;
  for (std::uint32_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      std::uint32_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factorization.emplace_back(p, e);
    }
  if (rest > 1) factorization.emplace_back(rest, 1);

  std::vector<std::vector<std::uint32_t>> cyclic_factor_lists{{}};
  for (const auto& [p, e] : factorization) {
    std::vector<std::vector<std::uint32_t>> extended;
    for (const auto& partition : partitions(e))
      for (const auto& base : cyclic_factor_lists) {
        auto list = base;
        for (auto part : partition) {
          std::uint32_t q = 1;
          for (std::uint32_t i = 0; i < part; ++i) q *= p;
          list.push_back(q);
        }
        extended.push_back(std::move(list));
      }
    cyclic_factor_lists = std::move(extended);
  }

  for (auto factors : cyclic_factor_lists) {
    std::sort(factors.rbegin(), factors.rend());
    PermGroup g = cyclic_perm(factors.empty() ? 1 : factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic_perm(factors[i]));

    // Name by invariant factors: per prime, sort the powers descending, then
    // multiply the i-th largest powers across primes.
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_prime;
    for (auto q : factors) {
      std::uint32_t p = 2;
      while (q % p != 0) ++p;
      by_prime[p].push_back(q);
    }
    std::size_t slots = 0;
    for (auto& [p, powers] : by_prime) {
      std::sort(powers.rbegin(), powers.rend());
      slots = std::max(slots, powers.size());
    }
    std::string name;
    for (std::size_t i = 0; i < std::max<std::size_t>(slots, 1); ++i) {
      std::uint32_t d = 1;
      for (const auto& [p, powers] : by_prime)
        if (i < powers.size()) d *= powers[i];
      name += (i ? "xC" : "C") + std::to_string(d);
    }
    out.push_back({name, order, std::move(g)});
  }
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (std::uint32_t order = 1; order <= 24; ++order) add_abelian_types(order, out);

  auto add = [&](std::string name, PermGroup g) {
    out.push_back({std::move(name), static_cast<std::uint32_t>(g.order()), std::move(g)});
  };

  add("S3", dihedral_perm(3));
  add("D8", dihedral_perm(4));
  add("Q8", from_table(dicyclic_table(2)));
  add("D10", dihedral_perm(5));
  add("A4", alternating4());
  add("D12", dihedral_perm(6));
  add("Dic3", from_table(dicyclic_table(3)));
  add("D14", dihedral_perm(7));
  add("D16", dihedral_perm(8));
  add("Q16", from_table(dicyclic_table(4)));
  add("SD16", from_table(semidirect_cyclic(8, 2, 3)));
  add("M16", from_table(semidirect_cyclic(8, 2, 5)));
  add("D8xC2", direct_product(dihedral_perm(4), cyclic_perm(2)));
  add("Q8xC2", direct_product(from_table(dicyclic_table(2)), cyclic_perm(2)));
  add("C4:C4", from_table(semidirect_cyclic(4, 4, 3)));
  add("C2^2:C4", from_table(c2c2_semidirect_c4()));
  add("D8oC4", central_product_d8_c4());
  add("D18", dihedral_perm(9));
  add("C3xS3", direct_product(cyclic_perm(3), dihedral_perm(3)));
  add("C3^2:C2", from_table(c3c3_semidirect_c2()));
  add("D20", dihedral_perm(10));
  add("F20", from_table(semidirect_cyclic(5, 4, 2)));
  add("Dic5", from_table(dicyclic_table(5)));
  add("C7:C3", from_table(semidirect_cyclic(7, 3, 2)));
  add("D22", dihedral_perm(11));
  add("S4", symmetric4());
  add("SL23", special_linear_2_3());
  add("A4xC2", direct_product(alternating4(), cyclic_perm(2)));
  add("D24", dihedral_perm(12));
  add("Dic6", from_table(dicyclic_table(6)));
  add("C3:C8", from_table(semidirect_cyclic(3, 8, 2)));
  add("D8xC3", direct_product(dihedral_perm(4), cyclic_perm(3)));
  add("Q8xC3", direct_product(from_table(dicyclic_table(2)), cyclic_perm(3)));
  add("C4xS3", direct_product(cyclic_perm(4), dihedral_perm(3)));
  add("C2^2xS3", direct_product(direct_product(cyclic_perm(2), cyclic_perm(2)), dihedral_perm(3)));
  add("C2xDic3", direct_product(cyclic_perm(2), from_table(dicyclic_table(3))));
  add("C3:D8", from_table(c3_semidirect_d8()));

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& entry : small_group_catalog())
    if (entry.name == name) return entry;
  throw DomainError("no catalog entry named " + name);
}

}  // namespace tfs
