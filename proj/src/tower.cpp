#include "tfs/tower.hpp"

#include <algorithm>
#include <cassert>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

// Index convention for ordinal-indexed chains: term alpha of a series sits at
// chain offset alpha - 1 for finite alpha and at offset alpha for infinite
// alpha (the order isomorphism between [1, n] and [0, L]).
Ordinal chain_offset(const Ordinal& index) {
  return index.is_finite() ? predecessor(index) : index;
}

Ordinal index_at_offset(const Ordinal& offset) {
  return offset.is_finite() ? successor(offset) : offset;
}

}  // namespace

IntervalSet IntervalSet::interval(Ordinal lo, Ordinal hi) {
  if (lo > hi) throw DomainError("interval with lo > hi: [" + format(lo) + "," + format(hi) + ")");
  IntervalSet s;
  if (lo < hi) s.intervals_.push_back({std::move(lo), std::move(hi)});
  return s;
}

IntervalSet IntervalSet::from_intervals(std::vector<OrdinalInterval> intervals) {
  std::erase_if(intervals, [](const OrdinalInterval& iv) { return iv.empty(); });
  for (const auto& iv : intervals)
    if (iv.lo > iv.hi) throw DomainError("interval with lo > hi");
  std::sort(intervals.begin(), intervals.end(),
            [](const OrdinalInterval& a, const OrdinalInterval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& iv : intervals) {
    if (!s.intervals_.empty() && iv.lo <= s.intervals_.back().hi) {
      if (iv.hi > s.intervals_.back().hi) s.intervals_.back().hi = std::move(iv.hi);
    } else {
      s.intervals_.push_back(std::move(iv));
    }
  }
  return s;
}

bool IntervalSet::contains(const Ordinal& q) const {
  for (const auto& iv : intervals_) {
    if (q < iv.lo) return false;
    if (q < iv.hi) return true;
  }
  return false;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
  return set_difference(*this, other).empty();
}

Ordinal IntervalSet::order_type() const {
  Ordinal total;
  for (const auto& iv : intervals_) total = add(total, iv.length());
  return total;
}

std::optional<std::uint64_t> IntervalSet::cardinality() const {
  std::uint64_t count = 0;
  for (const auto& iv : intervals_) {
    Ordinal len = iv.length();
    if (!len.is_finite()) return std::nullopt;
    count += len.finite_value();
  }
  return count;
}

Ordinal IntervalSet::element_at(const Ordinal& rank) const {
  Ordinal consumed;
  for (const auto& iv : intervals_) {
    Ordinal end = add(consumed, iv.length());
    if (rank < end) return add(iv.lo, left_subtract(consumed, rank));
    consumed = end;
  }
  throw DomainError("rank " + format(rank) + " beyond the set's order type");
}

Ordinal IntervalSet::rank_of(const Ordinal& element) const {
  Ordinal consumed;
  for (const auto& iv : intervals_) {
    if (iv.contains(element)) return add(consumed, left_subtract(iv.lo, element));
    consumed = add(consumed, iv.length());
  }
  throw DomainError("element " + format(element) + " is not a member of the set");
}

ValueKey IntervalSet::key() const {
  ValueKey key = "iv:";
  for (const auto& iv : intervals_) key += "[" + format(iv.lo) + "," + format(iv.hi) + ")";
  return key;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<OrdinalInterval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::from_intervals(std::move(all));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<OrdinalInterval> out;
  for (const auto& x : a.intervals())
    for (const auto& y : b.intervals()) {
      Ordinal lo = std::max(x.lo, y.lo);
      Ordinal hi = std::min(x.hi, y.hi);
      if (lo < hi) out.push_back({std::move(lo), std::move(hi)});
    }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<OrdinalInterval> out;
  for (const auto& x : a.intervals()) {
    std::vector<OrdinalInterval> pieces{x};
    for (const auto& y : b.intervals()) {
      std::vector<OrdinalInterval> next;
      for (const auto& p : pieces) {
        Ordinal lo = std::max(p.lo, y.lo);
        Ordinal hi = std::min(p.hi, y.hi);
        if (lo >= hi) {
          next.push_back(p);
          continue;
        }
        if (p.lo < lo) next.push_back({p.lo, lo});
        if (hi < p.hi) next.push_back({hi, p.hi});
      }
      pieces = std::move(next);
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet parse_interval_set(std::string_view text) {
  std::vector<OrdinalInterval> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '[') throw ParseError("expected '[' in interval", pos);
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) throw ParseError("expected ',' in interval", pos);
    std::size_t close = text.find(')', comma);
    if (close == std::string_view::npos) throw ParseError("expected ')' in interval", comma);
    Ordinal lo = parse_ordinal(text.substr(pos + 1, comma - pos - 1));
    Ordinal hi = parse_ordinal(text.substr(comma + 1, close - comma - 1));
    if (lo > hi) throw ParseError("interval with lo > hi", pos);
    if (lo < hi) out.push_back({std::move(lo), std::move(hi)});
    pos = close + 1;
    skip_ws();
  }
  return IntervalSet::from_intervals(std::move(out));
}

std::string format(const OrdinalInterval& iv) {
  return "[" + format(iv.lo) + "," + format(iv.hi) + ")";
}

std::string format(const IntervalSet& s) {
  if (s.empty()) return "empty";
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += ' ';
    out += format(iv);
  }
  return out;
}

SimpleLabel SimpleLabel::cyclic(std::uint32_t p) {
  bool prime = p > 1;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw DomainError("cyclic label requires a prime, got " + std::to_string(p));
  return SimpleLabel{Kind::Cyclic, p};
}

SimpleLabel SimpleLabel::alternating5() { return SimpleLabel{Kind::Alternating5, 0}; }

SimpleLabel SimpleLabel::parse(std::string_view text) {
  if (text == "A5") return alternating5();
  if (text.size() >= 2 && text[0] == 'C') {
    std::uint32_t p = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw ParseError("bad simple-group label", 0);
      p = p * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return cyclic(p);
  }
  throw ParseError("unknown simple-group label '" + std::string(text) + "'", 0);
}

std::string SimpleLabel::name() const {
  return kind == Kind::Alternating5 ? "A5" : "C" + std::to_string(prime);
}

TowerGroup::TowerGroup(Ordinal bound, std::vector<std::pair<OrdinalInterval, SimpleLabel>> pieces)
    : bound_(std::move(bound)) {
  if (bound_.is_zero()) throw DomainError("tower group requires a positive position bound");
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  Ordinal cursor;
  for (auto& [iv, label] : pieces) {
    if (iv.lo != cursor)
      throw DomainError("label pieces do not tile the positions: gap or overlap at " +
                        format(cursor));
    if (iv.hi <= iv.lo) throw DomainError("empty label piece");
    cursor = iv.hi;
    if (!pieces_.empty() && pieces_.back().second == label && pieces_.back().first.hi == iv.lo)
      pieces_.back().first.hi = iv.hi;
    else
      pieces_.emplace_back(iv, label);
  }
  if (cursor != bound_)
    throw DomainError("label pieces stop at " + format(cursor) + " before the bound " +
                      format(bound_));
}

TowerGroup TowerGroup::constant(Ordinal bound, SimpleLabel label) {
  OrdinalInterval all{Ordinal(0), bound};
  return TowerGroup(bound, {{all, label}});
}

SimpleLabel TowerGroup::label_at(const Ordinal& position) const {
  for (const auto& [iv, label] : pieces_)
    if (iv.contains(position)) return label;
  throw DomainError("position " + format(position) + " outside the tower bound");
}

IntervalSet TowerGroup::full_support() const {
  return IntervalSet::interval(Ordinal(0), bound_);
}

TowerMove parse_tower_move(std::string_view text) {
  // "[lo,hi) end" or "[lo,hi) before <ordinal>"
  std::size_t close = text.find(')');
  if (close == std::string_view::npos) throw ParseError("expected interval in move", 0);
  IntervalSet src = parse_interval_set(text.substr(0, close + 1));
  if (src.intervals().size() != 1) throw ParseError("move source must be a single interval", 0);
  std::string_view rest = text.substr(close + 1);
  std::size_t r = 0;
  while (r < rest.size() && std::isspace(static_cast<unsigned char>(rest[r]))) ++r;
  rest = rest.substr(r);
  if (rest == "end") return TowerMove{src.intervals()[0], std::nullopt};
  if (rest.substr(0, 6) == "before")
    return TowerMove{src.intervals()[0], parse_ordinal(rest.substr(6))};
  throw ParseError("expected 'end' or 'before <ordinal>' in move", close + 1);
}

std::string format(const TowerMove& move) {
  std::string out = format(move.source) + " ";
  out += move.before ? "before " + format(*move.before) : "end";
  return out;
}

PositionBijection PositionBijection::identity(Ordinal bound) {
  PositionBijection b;
  b.segments_.push_back({Ordinal(0), bound});
  b.bound_ = std::move(bound);
  return b;
}

PositionBijection PositionBijection::from_moves(Ordinal bound,
                                                const std::vector<TowerMove>& moves) {
  PositionBijection b = identity(std::move(bound));
  for (const auto& move : moves) b = b.moved(move);
  return b;
}

PositionBijection PositionBijection::from_segments(Ordinal bound,
                                                   std::vector<OrdinalInterval> segments) {
  std::erase_if(segments, [](const OrdinalInterval& iv) { return iv.empty(); });
  std::vector<OrdinalInterval> sorted = segments;
  std::sort(sorted.begin(), sorted.end(),
            [](const OrdinalInterval& a, const OrdinalInterval& b) { return a.lo < b.lo; });
  Ordinal cursor;
  for (const auto& iv : sorted) {
    if (iv.lo != cursor) throw DomainError("segments do not partition the positions");
    cursor = iv.hi;
  }
  if (cursor != bound) throw DomainError("segments do not reach the position bound");
  PositionBijection b;
  b.bound_ = std::move(bound);
  b.segments_ = std::move(segments);
  return b;
}

PositionBijection PositionBijection::moved(const TowerMove& move) const {
  const OrdinalInterval& src = move.source;
  if (src.lo > src.hi || src.hi > bound_)
    throw DomainError("move source " + format(src) + " outside the positions");
  if (move.before && src.contains(*move.before))
    throw DomainError("cannot reinsert before a position inside the moved block");

  std::vector<OrdinalInterval> kept;
  std::vector<OrdinalInterval> cut;
  for (const auto& seg : segments_) {
    Ordinal lo = std::max(seg.lo, src.lo);
    Ordinal hi = std::min(seg.hi, src.hi);
    if (lo >= hi) {
      kept.push_back(seg);
      continue;
    }
    if (seg.lo < lo) kept.push_back({seg.lo, lo});
    cut.push_back({lo, hi});
    if (hi < seg.hi) kept.push_back({hi, seg.hi});
  }
  // The moved block re-enters in its natural (value) order.
  std::sort(cut.begin(), cut.end(),
            [](const OrdinalInterval& a, const OrdinalInterval& b) { return a.lo < b.lo; });

  std::vector<OrdinalInterval> result;
  if (!move.before) {
    result = std::move(kept);
    result.insert(result.end(), cut.begin(), cut.end());
  } else {
    const Ordinal& q = *move.before;
    bool placed = false;
    for (const auto& seg : kept) {
      if (!placed && seg.contains(q)) {
        if (seg.lo < q) result.push_back({seg.lo, q});
        result.insert(result.end(), cut.begin(), cut.end());
        result.push_back({q, seg.hi});
        placed = true;
      } else {
        result.push_back(seg);
      }
    }
    if (!placed)
      throw DomainError("insertion point " + format(q) + " is not an unmoved position");
  }
  // Stitch segments that are consecutive both in the list and in value.
  std::vector<OrdinalInterval> stitched;
  for (auto& seg : result) {
    if (!stitched.empty() && stitched.back().hi == seg.lo)
      stitched.back().hi = seg.hi;
    else
      stitched.push_back(seg);
  }
  PositionBijection b;
  b.bound_ = bound_;
  b.segments_ = std::move(stitched);
  return b;
}

Ordinal PositionBijection::order_type() const {
  Ordinal total;
  for (const auto& seg : segments_) total = add(total, seg.length());
  return total;
}

Ordinal PositionBijection::address_of(const Ordinal& position) const {
  Ordinal consumed;
  for (const auto& seg : segments_) {
    if (seg.contains(position)) return add(consumed, left_subtract(seg.lo, position));
    consumed = add(consumed, seg.length());
  }
  throw DomainError("position " + format(position) + " outside the enumeration");
}

Ordinal PositionBijection::position_at(const Ordinal& address) const {
  Ordinal consumed;
  for (const auto& seg : segments_) {
    Ordinal end = add(consumed, seg.length());
    if (address < end) return add(seg.lo, left_subtract(consumed, address));
    consumed = end;
  }
  throw DomainError("address " + format(address) + " beyond the enumeration's order type");
}

IntervalSet PositionBijection::initial_segment(const Ordinal& count) const {
  std::vector<OrdinalInterval> out;
  Ordinal consumed;
  for (const auto& seg : segments_) {
    if (consumed >= count) break;
    Ordinal end = add(consumed, seg.length());
    if (end <= count) {
      out.push_back(seg);
      consumed = end;
    } else {
      Ordinal take = left_subtract(consumed, count);
      out.push_back({seg.lo, add(seg.lo, take)});
      break;
    }
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet PositionBijection::positions_of(const IntervalSet& addresses) const {
  std::vector<OrdinalInterval> out;
  Ordinal consumed;
  for (const auto& seg : segments_) {
    Ordinal end = add(consumed, seg.length());
    IntervalSet window = set_intersect(addresses, IntervalSet::interval(consumed, end));
    for (const auto& w : window.intervals()) {
      Ordinal lo = add(seg.lo, left_subtract(consumed, w.lo));
      Ordinal hi = add(seg.lo, left_subtract(consumed, w.hi));
      out.push_back({std::move(lo), std::move(hi)});
    }
    consumed = end;
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet PositionBijection::addresses_of(const IntervalSet& positions) const {
  std::vector<OrdinalInterval> out;
  Ordinal consumed;
  for (const auto& seg : segments_) {
    IntervalSet overlap =
        set_intersect(positions, IntervalSet::interval(seg.lo, seg.hi));
    for (const auto& o : overlap.intervals()) {
      Ordinal lo = add(consumed, left_subtract(seg.lo, o.lo));
      Ordinal hi = add(consumed, left_subtract(seg.lo, o.hi));
      out.push_back({std::move(lo), std::move(hi)});
    }
    consumed = add(consumed, seg.length());
  }
  return IntervalSet::from_intervals(std::move(out));
}

const PositionBijection& TowerSeries::enumeration() const {
  if (!is_enumerated()) throw DomainError("series is not enumeration-backed");
  return std::get<PositionBijection>(body_);
}

const std::vector<IntervalSet>& TowerSeries::explicit_supports() const {
  if (is_enumerated()) throw DomainError("series is enumeration-backed");
  return std::get<std::vector<IntervalSet>>(body_);
}

Ordinal TowerSeries::term_count() const {
  return top_index_.is_finite() ? top_index_ : successor(top_index_);
}

bool TowerSeries::index_in_range(const Ordinal& index) const {
  return index >= Ordinal(1) && index <= top_index_;
}

IntervalSet TowerSeries::support_at(const Ordinal& index) const {
  if (!index_in_range(index))
    throw DomainError("series index " + format(index) + " out of range [1," +
                      format(top_index_) + "]");
  if (is_enumerated())
    return std::get<PositionBijection>(body_).initial_segment(chain_offset(index));
  return std::get<std::vector<IntervalSet>>(body_)[index.finite_value() - 1];
}

TowerSubgroup TowerSeries::subgroup_at(const Ordinal& index) const {
  return TowerSubgroup{group_, support_at(index)};
}

IntervalSet TowerSeries::increment_at(const Ordinal& index) const {
  if (!index_in_range(index) || index == top_index_)
    throw DomainError("increment index " + format(index) + " out of range");
  if (is_enumerated()) {
    const auto& order = std::get<PositionBijection>(body_);
    Ordinal position = order.position_at(chain_offset(index));
    return IntervalSet::interval(position, successor(position));
  }
  return set_difference(support_at(successor(index)), support_at(index));
}

Ordinal TowerSeries::threshold_of(const Ordinal& position) const {
  if (position >= group_.bound())
    throw DomainError("position " + format(position) + " outside the tower bound " +
                      format(group_.bound()));
  if (is_enumerated()) {
    const auto& order = std::get<PositionBijection>(body_);
    return index_at_offset(successor(order.address_of(position)));
  }
  const auto& chain = std::get<std::vector<IntervalSet>>(body_);
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (chain[k].contains(position)) return Ordinal(k + 1);
  throw DomainError("position " + format(position) + " never enters the series");
}

Ordinal TowerSeries::step_adding(const Ordinal& position) const {
  // Thresholds are successor indices, so the step below is always defined.
  return predecessor(threshold_of(position));
}

TowerSeries series_from_bijection(TowerGroup group, PositionBijection order) {
  if (order.bound() != group.bound())
    throw DomainError("enumeration bound " + format(order.bound()) +
                      " does not match the tower bound " + format(group.bound()));
  Ordinal top = index_at_offset(order.order_type());
  return TowerSeries(std::move(group), std::move(order), std::move(top));
}

TowerSeries series_from_supports(TowerGroup group, std::vector<IntervalSet> chain) {
  if (chain.empty()) throw DomainError("series requires at least one term");
  for (const auto& s : chain)
    if (!s.is_subset_of(group.full_support()))
      throw DomainError("support " + format(s) + " exceeds the tower positions");
  Ordinal top(static_cast<std::uint64_t>(chain.size()));
  return TowerSeries(std::move(group), std::move(chain), std::move(top));
}

Ordinal threshold(const TowerSeries& series, const Ordinal& position) {
  return series.threshold_of(position);
}

bool LabelMultiset::is_single_position() const {
  return counts.size() == 1 && counts[0].second && *counts[0].second == 1;
}

std::string LabelMultiset::to_string() const {
  if (counts.empty()) return "none";
  if (is_single_position()) return counts[0].first.name();
  std::string out;
  for (const auto& [label, count] : counts) {
    if (!out.empty()) out += ',';
    out += label.name() + ":" + (count ? std::to_string(*count) : "w");
  }
  return out;
}

LabelMultiset factor_label(const TowerSeries& series, const Ordinal& index) {
  IntervalSet added = series.increment_at(index);
  LabelMultiset result;
  for (const auto& [iv, label] : series.group().pieces()) {
    IntervalSet overlap = set_intersect(added, IntervalSet::interval(iv.lo, iv.hi));
    if (overlap.empty()) continue;
    auto count = overlap.cardinality();
    bool merged = false;
    for (auto& [l, c] : result.counts)
      if (l == label) {
        if (c && count)
          *c += *count;
        else
          c = std::nullopt;
        merged = true;
      }
    if (!merged) result.counts.emplace_back(label, count);
  }
  std::sort(result.counts.begin(), result.counts.end());
  return result;
}

}  // namespace tfs
