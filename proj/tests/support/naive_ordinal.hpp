#ifndef TFS_TESTS_NAIVE_ORDINAL_HPP
#define TFS_TESTS_NAIVE_ORDINAL_HPP

// Reference implementation of ordinal arithmetic for ordinals with finite
// exponents, written against the defining absorption laws on a dense
// coefficient vector. Independent of tfs::Ordinal: different representation,
// no shared code. Index k holds the coefficient of w^k.

#include <array>
#include <cstdint>

namespace tfs_test {

struct NaiveOrdinal {
  // Products of pool ordinals below w^3 stay below w^5; leave headroom.
  static constexpr int kMaxExp = 16;
  std::array<std::uint64_t, kMaxExp + 1> c{};

  bool operator==(const NaiveOrdinal&) const = default;

  bool is_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }

  int degree() const {  // largest exponent with nonzero coefficient; -1 for 0
    for (int k = kMaxExp; k >= 0; --k)
      if (c[k]) return k;
    return -1;
  }
};

inline NaiveOrdinal naive_from(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0) {
  NaiveOrdinal r;
  r.c[2] = a2;
  r.c[1] = a1;
  r.c[0] = a0;
  return r;
}

// a + b: terms of a above b's leading exponent survive, the coefficients meet
// at that exponent, everything below is b's.
inline NaiveOrdinal naive_add(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  int db = b.degree();
  if (db < 0) return a;
  NaiveOrdinal r = b;
  for (int k = db + 1; k <= NaiveOrdinal::kMaxExp; ++k) r.c[k] = a.c[k];
  r.c[db] = a.c[db] + b.c[db];
  return r;
}

// a * b by expanding b's terms from the largest down:
//   a * w^e (e > 0) jumps to w^(deg a + e),
//   a * k scales the leading coefficient of a and keeps its tail.
inline NaiveOrdinal naive_mul(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  NaiveOrdinal r;
  int da = a.degree();
  if (da < 0 || b.is_zero()) return r;
  for (int e = NaiveOrdinal::kMaxExp; e >= 0; --e) {
    if (!b.c[e]) continue;
    NaiveOrdinal part;
    if (e > 0) {
      part.c[da + e] = b.c[e];
    } else {
      part = a;
      part.c[da] = a.c[da] * b.c[0];
    }
    r = naive_add(r, part);
  }
  return r;
}

}  // namespace tfs_test

#endif
