#ifndef TFS_TOWER_HPP
#define TFS_TOWER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfs/indexset.hpp"  // ValueKey
#include "tfs/ordinal.hpp"

namespace tfs {

/// Half-open ordinal interval [lo, hi).
struct OrdinalInterval {
  Ordinal lo;
  Ordinal hi;
  bool operator==(const OrdinalInterval& other) const = default;
  bool contains(const Ordinal& q) const { return q >= lo && q < hi; }
  Ordinal length() const { return left_subtract(lo, hi); }
  bool empty() const { return lo == hi; }
};

/// A finite union of half-open ordinal intervals in canonical form: sorted,
/// pairwise disjoint, non-adjacent. Supports of tower subgroups.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet interval(Ordinal lo, Ordinal hi);
  static IntervalSet from_intervals(std::vector<OrdinalInterval> intervals);

  const std::vector<OrdinalInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool contains(const Ordinal& q) const;
  bool is_subset_of(const IntervalSet& other) const;

  /// The ordinal sum of the interval lengths, in increasing order: the order
  /// type of the set.
  Ordinal order_type() const;
  /// Number of elements; nullopt when countably infinite.
  std::optional<std::uint64_t> cardinality() const;

  /// The element at ordinal position `rank` within the set's own order;
  /// DomainError when rank >= order_type().
  Ordinal element_at(const Ordinal& rank) const;
  /// The ordinal position of a member within the set's order.
  Ordinal rank_of(const Ordinal& element) const;

  ValueKey key() const;
  bool operator==(const IntervalSet& other) const = default;

 private:
  std::vector<OrdinalInterval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

/// Grammar: whitespace-separated "[lo,hi)" items with ordinal literals.
/// The empty string denotes the empty set.
IntervalSet parse_interval_set(std::string_view text);
std::string format(const OrdinalInterval& iv);
std::string format(const IntervalSet& s);

/// A label from the fixed catalog of finite simple groups available as tower
/// factors: cyclic of prime order, or the alternating group on five points.
struct SimpleLabel {
  enum class Kind { Cyclic, Alternating5 };
  Kind kind = Kind::Cyclic;
  std::uint32_t prime = 2;  // meaningful for Kind::Cyclic

  static SimpleLabel cyclic(std::uint32_t p);
  static SimpleLabel alternating5();
  /// "C2", "C3", ..., "A5".
  static SimpleLabel parse(std::string_view text);
  std::string name() const;
  bool operator==(const SimpleLabel& other) const = default;
  auto operator<=>(const SimpleLabel& other) const = default;
};

/// A restricted direct sum of finite simple groups, one per ordinal position
/// below `bound`, described by a piecewise-interval-constant label map.
/// Every subgroup under consideration is an IntervalSet of positions, so the
/// subgroup lattice is the interval-set algebra, every subgroup is normal,
/// and joins are unions.
class TowerGroup {
 public:
  /// `pieces` must partition [0, bound). Adjacent pieces with equal labels
  /// are merged, so equal groups compare equal.
  TowerGroup(Ordinal bound, std::vector<std::pair<OrdinalInterval, SimpleLabel>> pieces);
  static TowerGroup constant(Ordinal bound, SimpleLabel label);

  const Ordinal& bound() const { return bound_; }
  const std::vector<std::pair<OrdinalInterval, SimpleLabel>>& pieces() const { return pieces_; }
  SimpleLabel label_at(const Ordinal& position) const;
  IntervalSet full_support() const;

  bool operator==(const TowerGroup& other) const = default;

 private:
  Ordinal bound_;
  std::vector<std::pair<OrdinalInterval, SimpleLabel>> pieces_;
};

/// A subgroup of a tower group: the positions it covers.
struct TowerSubgroup {
  TowerGroup parent;
  IntervalSet support;
};

/// One rearrangement step: cut the positions in `source` out of the current
/// enumeration and reinsert them, in their natural order, either before the
/// current location of position `before` or at the very end.
struct TowerMove {
  OrdinalInterval source;
  std::optional<Ordinal> before;  // nullopt: append at the end
};

TowerMove parse_tower_move(std::string_view text);
std::string format(const TowerMove& move);

/// A bijective re-enumeration of the positions [0, bound), represented as the
/// ordered list of value-intervals in enumeration order. Built from a finite
/// sequence of interval-block moves, so images and preimages of interval sets
/// stay interval sets. The enumeration's order type can exceed `bound`
/// (moving a block to the end of an infinite run lengthens the order).
class PositionBijection {
 public:
  static PositionBijection identity(Ordinal bound);
  static PositionBijection from_moves(Ordinal bound, const std::vector<TowerMove>& moves);
  /// Validating constructor from an explicit segment list.
  static PositionBijection from_segments(Ordinal bound, std::vector<OrdinalInterval> segments);

  PositionBijection moved(const TowerMove& move) const;

  const Ordinal& bound() const { return bound_; }
  const std::vector<OrdinalInterval>& segments() const { return segments_; }

  /// Order type of the enumeration.
  Ordinal order_type() const;
  /// Enumeration address of a position; DomainError when out of range.
  Ordinal address_of(const Ordinal& position) const;
  /// Position at an enumeration address; DomainError when >= order_type().
  Ordinal position_at(const Ordinal& address) const;
  /// The set of positions at addresses < count.
  IntervalSet initial_segment(const Ordinal& count) const;
  /// Image of a set of addresses under the enumeration.
  IntervalSet positions_of(const IntervalSet& addresses) const;
  /// Addresses of a set of positions.
  IntervalSet addresses_of(const IntervalSet& positions) const;

 private:
  Ordinal bound_;
  std::vector<OrdinalInterval> segments_;
};

/// An ordinal-indexed chain of tower subgroups from the trivial subgroup to
/// the whole group: either generated by a position enumeration (one position
/// per successor step, unions at limits — always a composition series), or an
/// explicit finite list of supports (arbitrary chains, used to exercise
/// validation and non-composition behavior).
class TowerSeries {
 public:
  const TowerGroup& group() const { return group_; }
  bool is_enumerated() const { return std::holds_alternative<PositionBijection>(body_); }
  const PositionBijection& enumeration() const;
  const std::vector<IntervalSet>& explicit_supports() const;

  /// The index n of the top term: subgroup_at(n) is the whole group.
  const Ordinal& top_index() const { return top_index_; }
  /// Order type of the index set [1, n] (the number of terms; equals n for
  /// finite series and n + 1 for transfinite ones).
  Ordinal term_count() const;

  bool index_in_range(const Ordinal& index) const;
  IntervalSet support_at(const Ordinal& index) const;
  TowerSubgroup subgroup_at(const Ordinal& index) const;
  /// support(index + 1) minus support(index), for index < top.
  IntervalSet increment_at(const Ordinal& index) const;

  /// Least index whose support contains the position.
  Ordinal threshold_of(const Ordinal& position) const;
  /// The index step at which the position is added: threshold - 1.
  Ordinal step_adding(const Ordinal& position) const;

 private:
  friend TowerSeries series_from_bijection(TowerGroup group, PositionBijection order);
  friend TowerSeries series_from_supports(TowerGroup group, std::vector<IntervalSet> chain);

  TowerGroup group_;
  std::variant<PositionBijection, std::vector<IntervalSet>> body_;
  Ordinal top_index_;

  TowerSeries(TowerGroup group, std::variant<PositionBijection, std::vector<IntervalSet>> body,
              Ordinal top)
      : group_(std::move(group)), body_(std::move(body)), top_index_(std::move(top)) {}
};

TowerSeries series_from_bijection(TowerGroup group, PositionBijection order);
/// DomainError unless the supports form a strict chain from empty to full.
TowerSeries series_from_supports(TowerGroup group, std::vector<IntervalSet> chain);

/// Least index j with position in support_at(j).
Ordinal threshold(const TowerSeries& series, const Ordinal& position);

/// Labels of the positions added at a step, tallied per label; a count of
/// nullopt means countably many. A composition step adds exactly one
/// position.
struct LabelMultiset {
  std::vector<std::pair<SimpleLabel, std::optional<std::uint64_t>>> counts;
  bool is_single_position() const;
  std::string to_string() const;
};

LabelMultiset factor_label(const TowerSeries& series, const Ordinal& index);

}  // namespace tfs

#endif
