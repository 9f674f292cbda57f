#include "tfs/indexset.hpp"

#include <algorithm>
#include <cassert>

#include "tfs/errors.hpp"

namespace tfs {

std::string format(const PairIndex& p) {
  return "(" + format(p.major) + "," + format(p.minor) + ")";
}

ProductOrder::ProductOrder(Ordinal major_bound, Ordinal minor_bound)
    : major_bound_(std::move(major_bound)),
      minor_bound_(std::move(minor_bound)),
      has_adjoined_max_(tfs::is_limit(major_bound_)) {
  if (major_bound_ < Ordinal(2))
    throw DomainError("product order requires major bound >= 2, got " + tfs::format(major_bound_));
  if (minor_bound_ < Ordinal(1))
    throw DomainError("product order requires minor bound >= 1");
}

PairIndex ProductOrder::max_element() const {
  if (has_adjoined_max_) return PairIndex{major_bound_, Ordinal(1)};
  return PairIndex{predecessor(major_bound_), minor_bound_};
}

PairIndex ProductOrder::min_element() const { return PairIndex{Ordinal(1), Ordinal(1)}; }

bool ProductOrder::is_adjoined_max(const PairIndex& p) const {
  return has_adjoined_max_ && p.major == major_bound_ && p.minor == Ordinal(1);
}

bool ProductOrder::contains(const PairIndex& p) const {
  if (is_adjoined_max(p)) return true;
  return p.major >= Ordinal(1) && p.major < major_bound_ && p.minor >= Ordinal(1) &&
         p.minor <= minor_bound_;
}

void ProductOrder::require(const PairIndex& p) const {
  if (!contains(p))
    throw DomainError("pair " + tfs::format(p) + " out of bounds for product order " +
                      tfs::format(major_bound_) + " x " + tfs::format(minor_bound_));
}

std::strong_ordering ProductOrder::lex_compare(const PairIndex& a, const PairIndex& b) const {
  require(a);
  require(b);
  bool amax = is_adjoined_max(a);
  bool bmax = is_adjoined_max(b);
  if (amax || bmax) {
    if (amax && bmax) return std::strong_ordering::equal;
    return amax ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  auto c = compare(a.major, b.major);
  if (c != 0) return c;
  return compare(a.minor, b.minor);
}

PairIndex ProductOrder::successor(const PairIndex& p) const {
  require(p);
  if (p == max_element())
    throw DomainError("successor of the maximal element " + tfs::format(p));
  if (p.minor < minor_bound_) return PairIndex{p.major, tfs::successor(p.minor)};
  return PairIndex{tfs::successor(p.major), Ordinal(1)};
}

bool ProductOrder::is_limit(const PairIndex& p) const {
  require(p);
  if (p.minor == Ordinal(1)) return tfs::is_limit(p.major);
  return tfs::is_limit(p.minor);
}

bool ProductOrder::is_finite() const {
  return major_bound_.is_finite() && minor_bound_.is_finite();
}

std::uint64_t ProductOrder::finite_pair_count() const {
  if (!is_finite()) throw DomainError("pair count of a transfinite product order");
  return (major_bound_.finite_value() - 1) * minor_bound_.finite_value();
}

namespace {

std::uint64_t next_random(std::uint64_t& state) {
  // splitmix64
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Ordinal random_ordinal_below(const Ordinal& bound, std::uint64_t& state) {
  if (bound.is_zero()) throw DomainError("random ordinal below 0");
  if (bound.is_finite()) return Ordinal(next_random(state) % bound.finite_value());
  // Choose a leading prefix of the bound's CNF, shrink the coefficient at the
  // cut point, then append small random lower terms.
  const auto& terms = bound.terms();
  std::size_t cut = next_random(state) % terms.size();
  std::vector<Ordinal::Term> prefix(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(cut));
  std::uint64_t coeff = next_random(state) % terms[cut].coefficient;  // 0..c-1
  Ordinal value = Ordinal::from_terms(std::move(prefix));
  if (coeff > 0) value = add(value, Ordinal::omega_power(terms[cut].exponent, coeff));
  // Random tail strictly below w^exponent of the cut term.
  const Ordinal& cap_exp = terms[cut].exponent;
  Ordinal tail_exp = cap_exp.is_finite() ? (cap_exp.is_zero() ? Ordinal(0) : Ordinal(cap_exp.finite_value() - 1))
                                         : random_ordinal_below(cap_exp, state);
  if (!cap_exp.is_zero()) {
    std::uint64_t tail_coeff = next_random(state) % 4;
    if (tail_coeff > 0) value = add(value, Ordinal::omega_power(tail_exp, tail_coeff));
    if (tail_exp > Ordinal(0)) value = add(value, Ordinal(next_random(state) % 4));
  }
  assert(value < bound);
  return value;
}

PairIndex random_pair(const ProductOrder& order, std::uint64_t& state) {
  // Majors start at 1: draw below bound-as-is and redraw zeros.
  Ordinal major;
  do {
    major = random_ordinal_below(order.major_bound(), state);
  } while (major.is_zero());
  Ordinal minor;
  if (order.minor_bound().is_finite()) {
    minor = Ordinal(1 + next_random(state) % order.minor_bound().finite_value());
  } else {
    // Inclusive upper bound: occasionally pick the bound itself.
    if (next_random(state) % 8 == 0)
      minor = order.minor_bound();
    else
      do {
        minor = random_ordinal_below(order.minor_bound(), state);
      } while (minor.is_zero());
  }
  return PairIndex{major, minor};
}

WellOrderReport check_wellorder(const ProductOrder& order, std::size_t sample_budget,
                                std::uint64_t seed) {
  WellOrderReport report;
  std::uint64_t state = seed;
  for (std::size_t s = 0; s < sample_budget; ++s) {
    report.samples_run += 1;
    std::size_t size = 2 + next_random(state) % 7;
    std::vector<PairIndex> subset;
    for (std::size_t k = 0; k < size; ++k) subset.push_back(random_pair(order, state));

    // Trichotomy and antisymmetry on every pair of the sample.
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < subset.size(); ++j) {
        auto ij = order.lex_compare(subset[i], subset[j]);
        auto ji = order.lex_compare(subset[j], subset[i]);
        if ((ij == 0) != (subset[i] == subset[j]))
          report.violations.push_back("equality mismatch between " + format(subset[i]) + " and " +
                                      format(subset[j]));
        if ((ij < 0 && ji <= 0) || (ij > 0 && ji >= 0))
          report.violations.push_back("antisymmetry violated between " + format(subset[i]) +
                                      " and " + format(subset[j]));
      }
    // Transitivity on sampled triples.
    for (std::size_t i = 0; i + 2 < subset.size(); ++i) {
      const auto& a = subset[i];
      const auto& b = subset[i + 1];
      const auto& c = subset[i + 2];
      if (order.lex_compare(a, b) < 0 && order.lex_compare(b, c) < 0 &&
          order.lex_compare(a, c) >= 0)
        report.violations.push_back("transitivity violated at " + format(a) + ", " + format(b) +
                                    ", " + format(c));
    }
    // A unique minimum exists: scan, then confirm minimality.
    PairIndex min = subset[0];
    for (const auto& p : subset)
      if (order.lex_compare(p, min) < 0) min = p;
    std::size_t equal_to_min = 0;
    for (const auto& p : subset) {
      if (order.lex_compare(min, p) > 0)
        report.violations.push_back("scan minimum " + format(min) + " exceeds " + format(p));
      if (order.lex_compare(p, min) == 0) ++equal_to_min;
    }
    std::size_t copies = static_cast<std::size_t>(
        std::count(subset.begin(), subset.end(), min));
    if (equal_to_min != copies)
      report.violations.push_back("minimum of sample not unique up to identity");
  }
  return report;
}

const Ordinal& ConcordantQuotient::order_type() const {
  return locator_ ? locator_->order_type : order_type_;
}

Ordinal ConcordantQuotient::class_of(const PairIndex& p) const {
  base_.require(p);
  if (locator_) return locator_->class_index_of(p);
  // Last class whose minimum is <= p.
  std::size_t lo = 0, hi = class_mins_.size();
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (base_.lex_compare(class_mins_[mid], p) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return Ordinal(lo + 1);
}

PairIndex ConcordantQuotient::class_min(const Ordinal& class_index) const {
  if (locator_) return locator_->class_min(class_index);
  if (class_index < Ordinal(1) || class_index > order_type_)
    throw DomainError("class index " + tfs::format(class_index) + " out of range");
  return class_mins_[class_index.finite_value() - 1];
}

PairIndex ConcordantQuotient::class_max(const Ordinal& class_index) const {
  if (locator_) {
    auto m = locator_->class_max(class_index);
    if (!m)
      throw ResourceError("class " + tfs::format(class_index) +
                          " has no reachable maximal element");
    return *m;
  }
  if (class_index < Ordinal(1) || class_index > order_type_)
    throw DomainError("class index " + tfs::format(class_index) + " out of range");
  return class_maxes_[class_index.finite_value() - 1];
}

PairIndex ConcordantQuotient::class_max_of(const PairIndex& class_rep) const {
  return class_max(class_of(class_rep));
}

PairIndex ConcordantQuotient::class_min_of(const PairIndex& class_rep) const {
  return class_min(class_of(class_rep));
}

Ordinal ConcordantQuotient::class_successor(const PairIndex& class_rep) const {
  Ordinal idx = class_of(class_rep);
  if (idx == order_type()) throw DomainError("class_successor of the top class");
  return successor(idx);
}

ValueKey ConcordantQuotient::value_at(const PairIndex& p) const {
  base_.require(p);
  return value_of_(p);
}

ConcordantQuotient build_quotient(const ProductOrder& order,
                                  std::function<ValueKey(const PairIndex&)> value_of,
                                  std::size_t enumeration_budget) {
  if (!order.is_finite())
    throw ResourceError("build_quotient requires finite bounds; use the locator form");
  std::uint64_t total = order.finite_pair_count();
  if (total > enumeration_budget)
    throw ResourceError("product order with " + std::to_string(total) +
                        " pairs exceeds enumeration budget");

  ConcordantQuotient q(order);
  q.value_of_ = std::move(value_of);

  // Enumerate in lex order, cutting a class at every key change. A key that
  // reappears after a different key witnesses a concordance violation.
  std::vector<std::pair<ValueKey, PairIndex>> seen;  // key + first pair of its run
  PairIndex p = order.min_element();
  PairIndex prev = p;
  for (std::uint64_t t = 0;; ++t) {
    ValueKey key = q.value_of_(p);
    if (seen.empty() || seen.back().first != key) {
      for (const auto& run : seen)
        if (run.first == key)
          throw ContractError("value map not concordant: " + format(run.second) + " < " +
                              format(prev) + " < " + format(p) +
                              " with equal values at the outer pairs");
      if (!seen.empty()) q.class_maxes_.push_back(prev);
      seen.emplace_back(key, p);
      q.class_mins_.push_back(p);
    }
    prev = p;
    if (p == order.max_element()) break;
    p = order.successor(p);
  }
  q.class_maxes_.push_back(prev);
  q.order_type_ = Ordinal(static_cast<std::uint64_t>(q.class_mins_.size()));
  return q;
}

ConcordantQuotient build_quotient_with_locator(const ProductOrder& order,
                                               std::function<ValueKey(const PairIndex&)> value_of,
                                               QuotientLocator locator,
                                               [[maybe_unused]] std::uint64_t debug_seed) {
  ConcordantQuotient q(order);
  q.value_of_ = std::move(value_of);
  q.locator_ = std::move(locator);
#ifndef NDEBUG
  // Sampled consistency: equal class index iff equal value, and concordance
  // on ordered triples.
  std::uint64_t state = debug_seed;
  std::vector<PairIndex> probe;
  for (int k = 0; k < 24; ++k) probe.push_back(random_pair(order, state));
  for (const auto& a : probe)
    for (const auto& b : probe) {
      bool same_class = q.locator_->class_index_of(a) == q.locator_->class_index_of(b);
      bool same_value = q.value_of_(a) == q.value_of_(b);
      if (same_class != same_value)
        throw ContractError("locator classes disagree with value map at " + format(a) + " and " +
                            format(b));
    }
  for (std::size_t i = 0; i + 2 < probe.size(); ++i) {
    PairIndex a = probe[i], b = probe[i + 1], c = probe[i + 2];
    auto lt = [&](const PairIndex& x, const PairIndex& y) { return order.lex_compare(x, y) < 0; };
    std::vector<PairIndex> t{a, b, c};
    std::sort(t.begin(), t.end(), lt);
    if (lt(t[0], t[1]) && lt(t[1], t[2]) && q.value_of_(t[0]) == q.value_of_(t[2]) &&
        q.value_of_(t[0]) != q.value_of_(t[1]))
      throw ContractError("value map not concordant at triple " + format(t[0]) + " < " +
                          format(t[1]) + " < " + format(t[2]));
  }
#endif
  return q;
}

}  // namespace tfs
