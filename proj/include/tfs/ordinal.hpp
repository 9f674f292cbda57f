#ifndef TFS_ORDINAL_HPP
#define TFS_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tfs {

/// An ordinal number in Cantor normal form:
///
///   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
///
/// with e1 > e2 > ... > ek (ordinal comparison) and every ci >= 1. The empty
/// term list denotes 0. The representation is canonical: two Ordinals are
/// equal as values iff their term lists are identical.
///
/// Exponents are themselves Ordinals; nesting depth is capped at
/// `kMaxNestingDepth` and coefficients at `kMaxCoefficient`. Exceeding either
/// cap raises ResourceError. Values are immutable and safe to share across
/// threads.
class Ordinal {
 public:
  struct Term;

  static constexpr std::uint64_t kMaxCoefficient = 0xFFFFFFFFull;
  static constexpr std::size_t kMaxNestingDepth = 8;

  /// Zero.
  Ordinal() = default;
  /// A finite ordinal (natural number).
  Ordinal(std::uint64_t n);  // NOLINT: implicit by design, finite literals abound

  static Ordinal omega();
  /// w^e * coeff; coeff >= 1.
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coeff = 1);
  /// Builds an ordinal from raw terms, verifying canonical form.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// The value of a finite ordinal; DomainError on infinite input.
  std::uint64_t finite_value() const;

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
  bool operator==(const Term& other) const = default;
};

/// Three-way comparison; total order, lexicographic on CNF term sequences.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// True iff a > 0 and a has no immediate predecessor.
bool is_limit(const Ordinal& a);

/// a + 1.
Ordinal successor(const Ordinal& a);

/// The unique b with b + 1 = a; DomainError when a is 0 or a limit ordinal.
Ordinal predecessor(const Ordinal& a);

/// Ordinal sum (non-commutative: 1 + w = w).
Ordinal add(const Ordinal& a, const Ordinal& b);

/// Ordinal product (non-commutative: 2 * w = w, w * 2 = w + w).
Ordinal mul(const Ordinal& a, const Ordinal& b);

/// The unique c with a + c = b, for a <= b; DomainError when a > b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

/// Parses the ordinal literal grammar shared with the CLI:
///
///   literal  := '0' | term ('+' term)*
///   term     := nat | 'w' power? scale?
///   power    := '^' (nat | 'w' | '(' literal ')')
///   scale    := '*' nat
///
/// Whitespace is ignored. Non-canonical input (e.g. "w+w", "1+w") is accepted
/// and canonicalized by ordinal addition of the terms in the written order.
/// Raises ParseError with a byte offset on malformed input.
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering, parseable by parse_ordinal. format(parse(s)) is the
/// canonical form of s; parse(format(a)) == a.
std::string format(const Ordinal& a);

/// 0 for zero; otherwise 1 + max nesting depth of the term exponents.
std::size_t nesting_depth(const Ordinal& a);

}  // namespace tfs

#endif
