#ifndef TFS_INDEXSET_HPP
#define TFS_INDEXSET_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfs/ordinal.hpp"

namespace tfs {

/// Opaque equality-comparable fingerprint of the value attached to a pair
/// index (a canonical subgroup encoding in practice). This module never
/// inspects its contents.
using ValueKey = std::string;

/// An element (i, j) of a lexicographically ordered pair product.
struct PairIndex {
  Ordinal major;
  Ordinal minor;
  bool operator==(const PairIndex& other) const = default;
};

std::string format(const PairIndex& p);

/// The well-ordered index set of a double-indexed subgroup family: pairs
/// (i, j) with 1 <= i < major_bound and 1 <= j <= minor_bound, ordered
/// lexicographically. When major_bound is a limit ordinal the set has no
/// maximal element and the auxiliary pair (major_bound, 1) is adjoined above
/// everything else; otherwise the maximal element is the ordinary pair
/// (major_bound - 1, minor_bound).
class ProductOrder {
 public:
  ProductOrder(Ordinal major_bound, Ordinal minor_bound);

  const Ordinal& major_bound() const { return major_bound_; }
  const Ordinal& minor_bound() const { return minor_bound_; }
  bool has_adjoined_max() const { return has_adjoined_max_; }

  /// The maximal element: adjoined (major_bound, 1) for limit major bounds,
  /// the ordinary top pair otherwise.
  PairIndex max_element() const;
  PairIndex min_element() const;

  bool is_adjoined_max(const PairIndex& p) const;
  bool contains(const PairIndex& p) const;
  /// DomainError when p is out of bounds.
  void require(const PairIndex& p) const;

  std::strong_ordering lex_compare(const PairIndex& a, const PairIndex& b) const;
  /// The next element; DomainError on the maximal element.
  PairIndex successor(const PairIndex& p) const;
  /// True iff p has no immediate predecessor in the order: p = (i, 1) with i
  /// a limit ordinal, or p = (i, j) with j a limit ordinal.
  bool is_limit(const PairIndex& p) const;

  /// Number of ordinary pairs when both bounds are finite.
  std::uint64_t finite_pair_count() const;
  bool is_finite() const;

 private:
  Ordinal major_bound_;
  Ordinal minor_bound_;
  bool has_adjoined_max_;
};

inline std::strong_ordering lex_compare(const ProductOrder& order, const PairIndex& a,
                                        const PairIndex& b) {
  return order.lex_compare(a, b);
}
inline PairIndex pair_successor(const PairIndex& p, const ProductOrder& order) {
  return order.successor(p);
}
inline bool pair_is_limit(const PairIndex& p, const ProductOrder& order) {
  return order.is_limit(p);
}

/// Outcome of randomized well-order checks on a ProductOrder.
struct WellOrderReport {
  std::size_t samples_run = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Draws `sample_budget` random finite non-empty subsets of the order and
/// confirms on each that lex_compare is a total order (trichotomy,
/// consistency, transitivity) and that a unique minimal element exists.
WellOrderReport check_wellorder(const ProductOrder& order, std::size_t sample_budget,
                                std::uint64_t seed = 0x5eed);

/// A random element of the order, drawn from a canonical finite probe set.
PairIndex random_pair(const ProductOrder& order, std::uint64_t& state);
Ordinal random_ordinal_below(const Ordinal& bound, std::uint64_t& state);

/// Locator callbacks describing the classes of a quotient whose index set is
/// too large to enumerate. Classes are named by ordinals 1..order_type, in
/// order; class_max returns nullopt when a class has no maximal element
/// reachable within the caller's budget.
struct QuotientLocator {
  Ordinal order_type;
  std::function<Ordinal(const PairIndex&)> class_index_of;
  std::function<PairIndex(const Ordinal&)> class_min;
  std::function<std::optional<PairIndex>(const Ordinal&)> class_max;
};

/// The quotient of a ProductOrder by the equivalence "same ValueKey", for
/// value maps concordant with the lexicographic order: the classes are convex
/// intervals and the quotient is itself a well-order, isomorphic to the
/// ordinal segment [1, order_type()].
class ConcordantQuotient {
 public:
  const ProductOrder& base() const { return base_; }

  /// The ordinal p with the class order isomorphic to {a : 1 <= a <= p}.
  /// The top class corresponds to p itself.
  const Ordinal& order_type() const;

  /// 1-based class index of the class containing p.
  Ordinal class_of(const PairIndex& p) const;
  PairIndex class_min(const Ordinal& class_index) const;
  /// Maximal element of the class; ResourceError when the class has no
  /// reachable maximum (cannot occur for series-induced quotients).
  PairIndex class_max(const Ordinal& class_index) const;
  /// Maximal element of the class containing class_rep.
  PairIndex class_max_of(const PairIndex& class_rep) const;
  PairIndex class_min_of(const PairIndex& class_rep) const;
  /// Index of the class after the one containing class_rep; DomainError on
  /// the top class.
  Ordinal class_successor(const PairIndex& class_rep) const;

  ValueKey value_at(const PairIndex& p) const;

 private:
  friend ConcordantQuotient build_quotient(const ProductOrder&,
                                           std::function<ValueKey(const PairIndex&)>,
                                           std::size_t);
  friend ConcordantQuotient build_quotient_with_locator(
      const ProductOrder&, std::function<ValueKey(const PairIndex&)>, QuotientLocator,
      std::uint64_t);

  explicit ConcordantQuotient(ProductOrder base) : base_(std::move(base)) {}

  ProductOrder base_;
  std::function<ValueKey(const PairIndex&)> value_of_;
  // Enumerated form: class boundaries in lex order.
  std::vector<PairIndex> class_mins_;
  std::vector<PairIndex> class_maxes_;
  Ordinal order_type_;
  // Locator form.
  std::optional<QuotientLocator> locator_;
};

/// Builds the quotient by full enumeration of the (finite) order. Concordance
/// of value_of is verified as a side effect of the class-boundary scan;
/// a violation raises ContractError naming a witnessing triple. Orders with
/// more than `enumeration_budget` pairs (or transfinite bounds) raise
/// ResourceError; use the locator form for those.
ConcordantQuotient build_quotient(const ProductOrder& order,
                                  std::function<ValueKey(const PairIndex&)> value_of,
                                  std::size_t enumeration_budget = 1 << 20);

/// Builds a quotient described by locator callbacks (transfinite orders).
/// In debug builds, concordance and locator consistency are verified on
/// randomized samples; in release builds the locator is trusted.
ConcordantQuotient build_quotient_with_locator(const ProductOrder& order,
                                               std::function<ValueKey(const PairIndex&)> value_of,
                                               QuotientLocator locator,
                                               std::uint64_t debug_seed = 0x5eed);

inline PairIndex class_max(const ConcordantQuotient& q, const PairIndex& class_rep) {
  return q.class_max_of(class_rep);
}
inline const Ordinal& order_type(const ConcordantQuotient& q) { return q.order_type(); }

}  // namespace tfs

#endif
