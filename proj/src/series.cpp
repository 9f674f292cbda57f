#include "tfs/series.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <set>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

// Index-set view of the subgroups of one ambient group: elements become
// indices into the sorted element list, subgroups become bitmasks, and all
// lattice operations run on the precomputed multiplication table. This is
// the workhorse behind refinement, which touches the same ambient group for
// every cell of the double-indexed family.
struct AmbientTable {
  static constexpr std::size_t kOrderCap = 1024;

  std::vector<Perm> elements;  // sorted
  std::size_t degree;
  std::size_t n;
  std::size_t words;
  std::vector<std::uint16_t> table;

  using Mask = std::vector<std::uint64_t>;

  explicit AmbientTable(const PermGroup& ambient)
      : elements(ambient.elements()), degree(ambient.degree()), n(ambient.order()),
        words((ambient.order() + 63) / 64) {
    if (n > kOrderCap)
      throw ResourceError("refinement ambient group order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(kOrderCap));
    table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = static_cast<std::uint16_t>(index_of(elements[a] * elements[b]));
  }

  std::size_t index_of(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p))
      throw DomainError("series subgroup contains an element outside the ambient group");
    return static_cast<std::size_t>(it - elements.begin());
  }

  Mask mask_of(const PermGroup& sub) const {
    Mask m(words, 0);
    for (const auto& e : sub.elements()) {
      std::size_t i = index_of(e);
      m[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return m;
  }

  PermGroup group_of(const Mask& m) const {
    std::vector<Perm> members;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i / 64] >> (i % 64) & 1) members.push_back(elements[i]);
    return PermGroup::generate(std::move(members), degree, n);
  }

  Mask closure(Mask m) const {
    std::vector<std::uint16_t> queue;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i / 64] >> (i % 64) & 1) queue.push_back(static_cast<std::uint16_t>(i));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t t = 0; t < queue.size(); ++t) {
        std::uint16_t y = table[queue[head] * n + queue[t]];
        if (!(m[y / 64] >> (y % 64) & 1)) {
          m[y / 64] |= std::uint64_t{1} << (y % 64);
          queue.push_back(y);
        }
      }
    return m;
  }

  Mask join(const Mask& a, const Mask& b) const {
    Mask m(words);
    for (std::size_t w = 0; w < words; ++w) m[w] = a[w] | b[w];
    return closure(std::move(m));
  }

  static Mask meet(const Mask& a, const Mask& b) {
    Mask m(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) m[w] = a[w] & b[w];
    return m;
  }
};

ValueKey mask_key(const AmbientTable::Mask& m) {
  return ValueKey(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(std::uint64_t));
}

// Shared by the refinement quotients so the exposed value callbacks stay
// valid after the refinement call returns.
struct FiniteRefineState {
  AmbientTable ctx;
  std::vector<AmbientTable::Mask> first;   // input chains as masks
  std::vector<AmbientTable::Mask> second;

  FiniteRefineState(const FiniteSeries& a, const FiniteSeries& b) : ctx(a.ambient()) {
    for (const auto& g : a.chain()) first.push_back(ctx.mask_of(g));
    for (const auto& g : b.chain()) second.push_back(ctx.mask_of(g));
  }

  // Formula cell of the first family at 1-based (i, j):
  // join of G_i with (G_{i+1} meet H_j).
  AmbientTable::Mask first_cell(std::size_t i, std::size_t j) const {
    return ctx.join(first[i - 1], AmbientTable::meet(first[i], second[j - 1]));
  }
  AmbientTable::Mask second_cell(std::size_t j, std::size_t i) const {
    return ctx.join(second[j - 1], AmbientTable::meet(second[j], first[i - 1]));
  }
};

struct RefineCore {
  std::shared_ptr<FiniteRefineState> state;
  std::vector<AmbientTable::Mask> refined_first;
  std::vector<AmbientTable::Mask> refined_second;
  ConcordantQuotient first_quotient;
  ConcordantQuotient second_quotient;
};

RefineCore refine_core(const FiniteSeries& a, const FiniteSeries& b) {
  if (!(a.ambient() == b.ambient()))
    throw DomainError("refinement requires two series of one ambient group");
  std::size_t n = a.chain().size();
  std::size_t m = b.chain().size();
  if (n < 2 || m < 2)
    throw DomainError("refinement requires series with at least two terms");

  auto state = std::make_shared<FiniteRefineState>(a, b);

  ProductOrder first_order{Ordinal(static_cast<std::uint64_t>(n)),
                           Ordinal(static_cast<std::uint64_t>(m))};
  auto first_value = [state](const PairIndex& p) {
    return mask_key(state->first_cell(p.major.finite_value(), p.minor.finite_value()));
  };
  ConcordantQuotient q1 = build_quotient(first_order, first_value);

  ProductOrder second_order{Ordinal(static_cast<std::uint64_t>(m)),
                            Ordinal(static_cast<std::uint64_t>(n))};
  auto second_value = [state](const PairIndex& p) {
    return mask_key(state->second_cell(p.major.finite_value(), p.minor.finite_value()));
  };
  ConcordantQuotient q2 = build_quotient(second_order, second_value);

  RefineCore core{state, {}, {}, std::move(q1), std::move(q2)};
  std::uint64_t p = core.first_quotient.order_type().finite_value();
  for (std::uint64_t r = 1; r <= p; ++r) {
    PairIndex rep = core.first_quotient.class_min(Ordinal(r));
    core.refined_first.push_back(
        state->first_cell(rep.major.finite_value(), rep.minor.finite_value()));
  }
  std::uint64_t q = core.second_quotient.order_type().finite_value();
  for (std::uint64_t s = 1; s <= q; ++s) {
    PairIndex rep = core.second_quotient.class_min(Ordinal(s));
    core.refined_second.push_back(
        state->second_cell(rep.major.finite_value(), rep.minor.finite_value()));
  }
  return core;
}

std::string descriptor_key(const FactorDescriptor& d) {
  std::string key = std::to_string(d.order) + (d.abelian ? "a" : "n");
  for (const auto& [ord, count] : d.element_order_histogram)
    key += ";" + std::to_string(ord) + ":" + std::to_string(count);
  key += "|";
  for (auto v : d.canonical_certificate) key += std::to_string(v) + ",";
  return key;
}

}  // namespace

FiniteSeries::FiniteSeries(PermGroup ambient, std::vector<PermGroup> chain)
    : ambient_(std::move(ambient)), chain_(std::move(chain)) {
  if (chain_.empty()) throw DomainError("series requires at least one term");
  for (const auto& g : chain_)
    if (g.degree() != ambient_.degree())
      throw DomainError("series term degree differs from the ambient group");
}

const PermGroup& FiniteSeries::subgroup_at(const Ordinal& index) const {
  if (!index.is_finite() || index.is_zero() || index.finite_value() > chain_.size())
    throw DomainError("series index " + format(index) + " out of range [1," +
                      std::to_string(chain_.size()) + "]");
  return chain_[index.finite_value() - 1];
}

bool FiniteSeries::operator==(const FiniteSeries& other) const {
  return ambient_ == other.ambient_ && chain_ == other.chain_;
}

ValidationReport validate(const FiniteSeries& series) {
  ValidationReport report;
  const auto& chain = series.chain();
  if (!chain.front().is_trivial())
    report.violations.push_back({Ordinal(1), "bottom", "first term is not the trivial subgroup"});
  if (!(chain.back() == series.ambient()))
    report.violations.push_back({series.top_index(), "top",
                                 "last term is not the whole group"});
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    Ordinal index(k + 1);
    if (!chain[k].is_subgroup_of(chain[k + 1])) {
      report.violations.push_back({index, "subgroup", "term is not contained in its successor"});
      continue;
    }
    if (chain[k].order() == chain[k + 1].order()) {
      report.violations.push_back({index, "strict", "term repeats its successor"});
      continue;
    }
    if (!is_normal_in(chain[k], chain[k + 1]))
      report.violations.push_back({index, "normal", "term is not normal in its successor"});
  }
  return report;
}

ValidationReport validate(const TowerSeries& series, std::uint64_t seed) {
  ValidationReport report;
  IntervalSet bottom = series.support_at(Ordinal(1));
  if (!bottom.empty())
    report.violations.push_back({Ordinal(1), "bottom", "first term is not the trivial subgroup"});
  IntervalSet top = series.support_at(series.top_index());
  if (!(top == series.group().full_support()))
    report.violations.push_back({series.top_index(), "top", "last term is not the whole group"});

  if (!series.is_enumerated()) {
    // Finite explicit chain: check every step. Normality is automatic in a
    // tower (all subgroups are normal), so only containment and strictness
    // can fail.
    const auto& chain = series.explicit_supports();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      Ordinal index(k + 1);
      if (!chain[k].is_subset_of(chain[k + 1]))
        report.violations.push_back({index, "subgroup", "term is not contained in its successor"});
      else if (chain[k] == chain[k + 1])
        report.violations.push_back({index, "strict", "term repeats its successor"});
    }
    return report;
  }

  // Enumerated chain: strictness and normality hold by construction; verify
  // the limit-union condition at the limit indices the segment structure
  // produces, plus sampled interior limits.
  const auto& order = series.enumeration();
  std::set<Ordinal> limit_indices;
  Ordinal cumulative;
  auto consider = [&](const Ordinal& offset) {
    if (offset.is_zero() || offset > order.order_type()) return;
    Ordinal idx = offset.is_finite() ? successor(offset) : offset;
    if (is_limit(idx) && idx <= series.top_index()) limit_indices.insert(idx);
  };
  for (const auto& seg : order.segments()) {
    consider(cumulative);
    if (!seg.length().is_finite()) consider(add(cumulative, Ordinal::omega()));
    cumulative = add(cumulative, seg.length());
  }
  consider(cumulative);
  if (is_limit(series.top_index())) limit_indices.insert(series.top_index());

  std::uint64_t state = seed;
  for (const Ordinal& limit : limit_indices) {
    IntervalSet at_limit = series.support_at(limit);
    bool clean = true;
    // Every position present at the limit must already be present strictly
    // below it; spot a few positions per interval.
    for (const auto& iv : at_limit.intervals()) {
      std::vector<Ordinal> probes{iv.lo};
      if (successor(iv.lo) < iv.hi) probes.push_back(successor(iv.lo));
      for (const auto& q : probes)
        if (series.threshold_of(q) >= limit) clean = false;
    }
    // Sampled earlier terms stay inside the limit term.
    for (int k = 0; k < 6; ++k) {
      Ordinal below = random_ordinal_below(limit, state);
      if (below.is_zero() || !series.index_in_range(below)) continue;
      if (!series.support_at(below).is_subset_of(at_limit)) clean = false;
    }
    if (!clean)
      report.violations.push_back({limit, "limit", "limit term is not the union of its predecessors"});
    report.limit_indices_checked.push_back(limit);
  }
  return report;
}

ValidationReport validate(const Series& series, std::uint64_t seed) {
  if (std::holds_alternative<FiniteSeries>(series))
    return validate(std::get<FiniteSeries>(series));
  return validate(std::get<TowerSeries>(series), seed);
}

ZassenhausResult zassenhaus(const PermGroup& first_outer, const PermGroup& first_inner,
                            const PermGroup& second_outer, const PermGroup& second_inner) {
  if (first_outer.degree() != second_outer.degree())
    throw DomainError("butterfly sides live in groups of different degrees");
  if (!first_inner.is_subgroup_of(first_outer) || !is_normal_in(first_inner, first_outer))
    throw DomainError("first side: inner subgroup is not normal in its outer subgroup");
  if (!second_inner.is_subgroup_of(second_outer) || !is_normal_in(second_inner, second_outer))
    throw DomainError("second side: inner subgroup is not normal in its outer subgroup");

  PermGroup cross = intersect(first_outer, second_outer);
  ZassenhausResult result{
      join(first_inner, cross),
      join(first_inner, intersect(first_outer, second_inner)),
      join(second_inner, cross),
      join(second_inner, intersect(second_outer, first_inner)),
      AbstractGroup(1, {0}),
      AbstractGroup(1, {0}),
      {},
      {}};
  if (!is_normal_in(result.first_lower, result.first_upper) ||
      !is_normal_in(result.second_lower, result.second_upper))
    throw ContractError("butterfly wings failed the normality conclusion");
  result.first_factor = quotient(result.first_upper, result.first_lower);
  result.second_factor = quotient(result.second_upper, result.second_lower);
  auto witness = are_isomorphic(result.first_factor, result.second_factor);
  if (!witness) throw ContractError("butterfly factors failed to be isomorphic");
  result.witness = std::move(*witness);
  result.factor = descriptor(result.first_factor);
  return result;
}

FiniteRefinement schreier_refine(const FiniteSeries& first, const FiniteSeries& second) {
  RefineCore core = refine_core(first, second);
  const auto& ctx = core.state->ctx;

  std::vector<PermGroup> first_chain, second_chain;
  for (const auto& mask : core.refined_first) first_chain.push_back(ctx.group_of(mask));
  for (const auto& mask : core.refined_second) second_chain.push_back(ctx.group_of(mask));

  FiniteRefinement result{FiniteSeries(first.ambient(), std::move(first_chain)),
                          FiniteSeries(second.ambient(), std::move(second_chain)),
                          core.first_quotient.order_type(),
                          core.second_quotient.order_type(),
                          {},
                          {},
                          std::move(core.first_quotient),
                          std::move(core.second_quotient)};

  std::uint64_t p = result.first_order_type.finite_value();
  for (std::uint64_t r = 1; r < p; ++r) {
    // The top pair of a non-top class is regular; its mirror is the top pair
    // of the matching class on the other side.
    PairIndex a_max = result.first_quotient.class_max(Ordinal(r));
    PairIndex mirror{a_max.minor, a_max.major};
    Ordinal s = result.second_quotient.class_of(mirror);
    assert(result.second_quotient.class_max(s) == mirror);
    assert(s < result.second_order_type);
    FactorDescriptor factor = descriptor(
        quotient(result.refined_first.chain()[r], result.refined_first.chain()[r - 1]));
    result.pairing.emplace_back(Ordinal(r), s);
    result.factor_table.push_back({Ordinal(r), s, std::move(factor)});
  }
  return result;
}

namespace {

// Thresholds reduce each row of the tower refinement to a single cut: below
// the threshold of the row's new position the cell is the row's subgroup,
// from it on the cell is the next subgroup.
Ordinal tower_row_threshold(const TowerSeries& first, const TowerSeries& second,
                            const Ordinal& row) {
  IntervalSet added = first.increment_at(row);
  return second.threshold_of(added.intervals().front().lo);
}

QuotientLocator tower_locator(std::shared_ptr<std::pair<TowerSeries, TowerSeries>> pair) {
  QuotientLocator locator;
  const Ordinal top = pair->first.top_index();
  locator.order_type = top;
  locator.class_index_of = [pair, top](const PairIndex& p) {
    if (p.major == top) return top;  // adjoined maximum
    Ordinal threshold = tower_row_threshold(pair->first, pair->second, p.major);
    return p.minor < threshold ? p.major : successor(p.major);
  };
  locator.class_min = [pair, top](const Ordinal& c) {
    if (c == Ordinal(1)) return PairIndex{Ordinal(1), Ordinal(1)};
    if (is_limit(c)) return PairIndex{c, Ordinal(1)};
    Ordinal row = predecessor(c);
    return PairIndex{row, tower_row_threshold(pair->first, pair->second, row)};
  };
  locator.class_max = [pair, top](const Ordinal& c) -> std::optional<PairIndex> {
    if (c == top) {
      if (is_limit(top)) return PairIndex{top, Ordinal(1)};
      Ordinal m = pair->second.top_index();
      return PairIndex{predecessor(top), m};
    }
    Ordinal threshold = tower_row_threshold(pair->first, pair->second, c);
    return PairIndex{c, predecessor(threshold)};
  };
  return locator;
}

std::function<ValueKey(const PairIndex&)> tower_value(
    std::shared_ptr<std::pair<TowerSeries, TowerSeries>> pair) {
  const Ordinal top = pair->first.top_index();
  return [pair, top](const PairIndex& p) {
    if (p.major == top) return pair->first.group().full_support().key();
    IntervalSet base = pair->first.support_at(p.major);
    IntervalSet lifted = pair->first.support_at(successor(p.major));
    IntervalSet other = pair->second.support_at(p.minor);
    return set_union(base, set_intersect(lifted, other)).key();
  };
}

}  // namespace

TowerRefinement schreier_refine(const TowerSeries& first, const TowerSeries& second) {
  if (!(first.group() == second.group()))
    throw DomainError("refinement requires two series of one tower group");
  if (!is_composition_series(first).is_composition ||
      !is_composition_series(second).is_composition)
    throw DomainError("tower refinement supports composition series only");

  auto forward = std::make_shared<std::pair<TowerSeries, TowerSeries>>(first, second);
  auto backward = std::make_shared<std::pair<TowerSeries, TowerSeries>>(second, first);

  ProductOrder first_order{first.top_index(), second.top_index()};
  ProductOrder second_order{second.top_index(), first.top_index()};
  ConcordantQuotient q1 =
      build_quotient_with_locator(first_order, tower_value(forward), tower_locator(forward));
  ConcordantQuotient q2 =
      build_quotient_with_locator(second_order, tower_value(backward), tower_locator(backward));

  TowerRefinement result{first,
                         second,
                         first.top_index(),
                         second.top_index(),
                         {},
                         {},
                         std::move(q1),
                         std::move(q2)};
  result.pair_step = [forward](const Ordinal& step) {
    IntervalSet added = forward->first.increment_at(step);
    return forward->second.step_adding(added.intervals().front().lo);
  };
  result.pair_step_back = [backward](const Ordinal& step) {
    IntervalSet added = backward->first.increment_at(step);
    return backward->second.step_adding(added.intervals().front().lo);
  };
  return result;
}

std::optional<SeriesIso> series_isomorphic(const FiniteSeries& a, const FiniteSeries& b) {
  std::map<std::string, std::vector<Ordinal>> first_steps, second_steps;
  for (std::size_t k = 0; k + 1 < a.chain().size(); ++k)
    first_steps[descriptor_key(descriptor(quotient(a.chain()[k + 1], a.chain()[k])))]
        .push_back(Ordinal(k + 1));
  for (std::size_t k = 0; k + 1 < b.chain().size(); ++k)
    second_steps[descriptor_key(descriptor(quotient(b.chain()[k + 1], b.chain()[k])))]
        .push_back(Ordinal(k + 1));
  if (first_steps.size() != second_steps.size()) return std::nullopt;
  SeriesIso iso;
  for (const auto& [key, steps] : first_steps) {
    auto it = second_steps.find(key);
    if (it == second_steps.end() || it->second.size() != steps.size()) return std::nullopt;
    for (std::size_t k = 0; k < steps.size(); ++k) iso.pairs.emplace_back(steps[k], it->second[k]);
  }
  std::sort(iso.pairs.begin(), iso.pairs.end());
  return iso;
}

std::optional<TowerSeriesIso> series_isomorphic(const TowerSeries& a, const TowerSeries& b) {
  // Label multisets compared through interval cardinalities.
  auto label_sets = [](const TowerGroup& g) {
    std::map<std::string, IntervalSet> sets;
    for (const auto& [iv, label] : g.pieces())
      sets[label.name()] =
          set_union(sets[label.name()], IntervalSet::interval(iv.lo, iv.hi));
    return sets;
  };
  auto first_labels = label_sets(a.group());
  auto second_labels = label_sets(b.group());
  if (first_labels.size() != second_labels.size()) return std::nullopt;
  for (const auto& [name, positions] : first_labels) {
    auto it = second_labels.find(name);
    if (it == second_labels.end()) return std::nullopt;
    if (positions.cardinality() != it->second.cardinality()) return std::nullopt;
  }

  TowerSeriesIso iso;
  if (a.group() == b.group() && is_composition_series(a).is_composition &&
      is_composition_series(b).is_composition) {
    auto pair = std::make_shared<std::pair<TowerSeries, TowerSeries>>(a, b);
    iso.map_step = [pair](const Ordinal& step) {
      IntervalSet added = pair->first.increment_at(step);
      return pair->second.step_adding(added.intervals().front().lo);
    };
    return iso;
  }
  // Distinct groups: match the k-th step carrying a label to the k-th step
  // carrying it on the other side. Exact whenever the per-label address
  // orders are isomorphic.
  auto shared = std::make_shared<std::pair<TowerSeries, TowerSeries>>(a, b);
  auto shared_first_labels = std::make_shared<std::map<std::string, IntervalSet>>(first_labels);
  auto shared_second_labels = std::make_shared<std::map<std::string, IntervalSet>>(second_labels);
  iso.map_step = [shared, shared_first_labels, shared_second_labels](const Ordinal& step) {
    const TowerSeries& first = shared->first;
    const TowerSeries& second = shared->second;
    IntervalSet added = first.increment_at(step);
    if (added.cardinality() != std::uint64_t{1})
      throw DomainError("step map defined for composition steps only");
    Ordinal position = added.intervals().front().lo;
    std::string label = first.group().label_at(position).name();
    if (!first.is_enumerated() || !second.is_enumerated())
      throw DomainError("cross-group step map requires enumerated series");
    IntervalSet first_addresses =
        first.enumeration().addresses_of(shared_first_labels->at(label));
    IntervalSet second_addresses =
        second.enumeration().addresses_of(shared_second_labels->at(label));
    Ordinal rank = first_addresses.rank_of(first.enumeration().address_of(position));
    Ordinal other_address = second_addresses.element_at(rank);
    Ordinal other_position = second.enumeration().position_at(other_address);
    return second.step_adding(other_position);
  };
  return iso;
}

CompositionCertificate is_composition_series(const FiniteSeries& series) {
  CompositionCertificate cert;
  for (std::size_t k = 0; k + 1 < series.chain().size(); ++k) {
    AbstractGroup factor = quotient(series.chain()[k + 1], series.chain()[k]);
    bool simple = factor.order() >= 2 && is_simple(factor);
    cert.is_composition = cert.is_composition && simple;
    cert.entries.push_back({Ordinal(k + 1), simple, descriptor(factor).name()});
  }
  return cert;
}

CompositionCertificate is_composition_series(const TowerSeries& series) {
  CompositionCertificate cert;
  if (series.is_enumerated()) {
    // Singleton increments by construction; record a sampled prefix.
    Ordinal top = series.top_index();
    for (std::uint64_t k = 1; k <= 3; ++k) {
      Ordinal index(k);
      if (index >= top) break;
      auto labels = factor_label(series, index);
      cert.entries.push_back({index, true, labels.to_string()});
    }
    return cert;
  }
  const auto& chain = series.explicit_supports();
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    Ordinal index(k + 1);
    auto labels = factor_label(series, index);
    bool simple = labels.is_single_position();
    cert.is_composition = cert.is_composition && simple;
    cert.entries.push_back({index, simple, labels.to_string()});
  }
  return cert;
}

CompositionCertificate is_composition_series(const Series& series) {
  if (std::holds_alternative<FiniteSeries>(series))
    return is_composition_series(std::get<FiniteSeries>(series));
  return is_composition_series(std::get<TowerSeries>(series));
}

bool is_refinement(const FiniteSeries& refined, const FiniteSeries& original) {
  if (!(refined.ambient() == original.ambient())) return false;
  std::set<ValueKey> keys;
  for (const auto& g : refined.chain()) keys.insert(g.key());
  for (const auto& g : original.chain())
    if (!keys.count(g.key())) return false;
  return true;
}

bool is_refinement(const TowerSeries& refined, const TowerSeries& original) {
  if (!(refined.group() == original.group())) return false;
  auto appears = [&](const IntervalSet& support) {
    if (refined.is_enumerated()) {
      // A support is a term of an enumerated chain iff its addresses form an
      // initial interval.
      IntervalSet addresses = refined.enumeration().addresses_of(support);
      if (addresses.empty()) return support.empty();
      const auto& ivs = addresses.intervals();
      return ivs.size() == 1 && ivs[0].lo.is_zero();
    }
    for (const auto& s : refined.explicit_supports())
      if (s == support) return true;
    return false;
  };
  if (!original.is_enumerated()) {
    for (const auto& s : original.explicit_supports())
      if (!appears(s)) return false;
    return true;
  }
  // Enumerated original: check the terms at segment boundaries plus a short
  // prefix; boundary terms carry the combinatorial structure.
  std::vector<Ordinal> offsets{Ordinal(0), Ordinal(1), Ordinal(2), Ordinal(3)};
  Ordinal cumulative;
  for (const auto& seg : original.enumeration().segments()) {
    cumulative = add(cumulative, seg.length());
    offsets.push_back(cumulative);
  }
  for (const auto& offset : offsets) {
    if (offset > original.enumeration().order_type()) continue;
    if (!appears(original.enumeration().initial_segment(offset))) return false;
  }
  return true;
}

bool refinement_is_fixed(const FiniteSeries& series, const FiniteSeries& other) {
  if (series.ambient().is_trivial()) return true;
  RefineCore core = refine_core(series, other);
  if (core.refined_first.size() != series.chain().size()) return false;
  for (std::size_t k = 0; k < core.refined_first.size(); ++k)
    if (core.refined_first[k] != core.state->ctx.mask_of(series.chain()[k])) return false;
  return true;
}

bool refinement_is_fixed(const TowerSeries& series, const TowerSeries& other) {
  TowerRefinement refinement = schreier_refine(series, other);
  // Composition inputs refine to themselves; confirm on sampled indices.
  for (std::uint64_t k = 1; k <= 4; ++k) {
    Ordinal index(k);
    if (index > series.top_index()) break;
    if (!(refinement.refined_first.support_at(index) == series.support_at(index))) return false;
  }
  return refinement.first_order_type == series.top_index();
}

namespace {

bool cardinality_matches(const Ordinal& n, const Ordinal& m) {
  if (n.is_finite() != m.is_finite()) return false;
  return n.is_finite() ? n == m : true;  // desk scale: every infinite index is countable
}

Ordinal term_count_of(const Ordinal& top) { return top.is_finite() ? top : successor(top); }

}  // namespace

JordanHolderVerdict jordan_holder_check(const FiniteSeries& a, const FiniteSeries& b) {
  if (!(a.ambient() == b.ambient()))
    throw DomainError("composition series of different groups");
  if (!is_composition_series(a).is_composition || !is_composition_series(b).is_composition)
    throw DomainError("non-composition series passed to the composition-series check");

  JordanHolderVerdict verdict;
  verdict.first_top = a.top_index();
  verdict.second_top = b.top_index();
  verdict.first_count = a.term_count();
  verdict.second_count = b.term_count();
  verdict.tops_equal = verdict.first_top == verdict.second_top;
  verdict.same_cardinality = cardinality_matches(verdict.first_top, verdict.second_top);

  if (a.ambient().is_trivial()) {
    verdict.isomorphic = true;
    return verdict;
  }

  FiniteRefinement refinement = schreier_refine(a, b);
  if (!(refinement.refined_first == a) || !(refinement.refined_second == b))
    throw ContractError("a composition series acquired new terms under refinement");

  verdict.isomorphic = true;
  for (const auto& [r, s] : refinement.pairing) {
    AbstractGroup left =
        quotient(a.chain()[r.finite_value()], a.chain()[r.finite_value() - 1]);
    AbstractGroup right =
        quotient(b.chain()[s.finite_value()], b.chain()[s.finite_value() - 1]);
    if (!are_isomorphic(left, right)) verdict.isomorphic = false;
  }
  verdict.pairing = refinement.pairing;
  for (const auto& row : refinement.factor_table) verdict.factors.push_back(row.factor.name());
  return verdict;
}

JordanHolderVerdict jordan_holder_check(const TowerSeries& a, const TowerSeries& b) {
  TowerRefinement refinement = schreier_refine(a, b);  // validates the preconditions

  JordanHolderVerdict verdict;
  verdict.first_top = a.top_index();
  verdict.second_top = b.top_index();
  verdict.first_count = term_count_of(verdict.first_top);
  verdict.second_count = term_count_of(verdict.second_top);
  verdict.tops_equal = verdict.first_top == verdict.second_top;
  verdict.same_cardinality = cardinality_matches(verdict.first_top, verdict.second_top);

  // Sampled steps: a short prefix plus the steps around each segment
  // boundary of the first enumeration (these carry the limit structure).
  std::set<Ordinal> steps;
  for (std::uint64_t k = 1; k <= 3; ++k)
    if (Ordinal(k) < a.top_index()) steps.insert(Ordinal(k));
  if (a.is_enumerated()) {
    Ordinal cumulative;
    for (const auto& seg : a.enumeration().segments()) {
      cumulative = add(cumulative, seg.length());
      Ordinal step = cumulative.is_finite() ? successor(cumulative) : cumulative;
      if (step < a.top_index()) steps.insert(step);
    }
  }
  verdict.isomorphic = true;
  for (const Ordinal& step : steps) {
    Ordinal other = refinement.pair_step(step);
    if (!(factor_label(a, step).to_string() == factor_label(b, other).to_string()))
      verdict.isomorphic = false;
    if (!(refinement.pair_step_back(other) == step)) verdict.isomorphic = false;
    verdict.pairing.emplace_back(step, other);
  }
  // Factor summary: per-label position cardinalities of the common group.
  std::map<std::string, std::optional<std::uint64_t>> totals;
  for (const auto& [iv, label] : a.group().pieces()) {
    auto count = IntervalSet::interval(iv.lo, iv.hi).cardinality();
    auto& slot = totals.try_emplace(label.name(), std::uint64_t{0}).first->second;
    if (slot && count)
      *slot += *count;
    else
      slot = std::nullopt;
  }
  for (const auto& [name, count] : totals)
    verdict.factors.push_back(name + ":" + (count ? std::to_string(*count) : "w"));
  return verdict;
}

JordanHolderVerdict jordan_holder_check(const Series& a, const Series& b) {
  if (std::holds_alternative<FiniteSeries>(a) && std::holds_alternative<FiniteSeries>(b))
    return jordan_holder_check(std::get<FiniteSeries>(a), std::get<FiniteSeries>(b));
  if (std::holds_alternative<TowerSeries>(a) && std::holds_alternative<TowerSeries>(b))
    return jordan_holder_check(std::get<TowerSeries>(a), std::get<TowerSeries>(b));
  throw DomainError("series backends differ");
}

std::vector<std::vector<std::size_t>> composition_chains(const SubgroupLattice& lattice) {
  std::size_t bottom = lattice.index_of(PermGroup::trivial(lattice.ambient().degree()));
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> chains_of =
      [&](std::size_t node) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> chains;
    if (node == bottom) {
      chains.push_back({node});
    } else {
      for (std::size_t lower : lattice.maximal_normal_in(node))
        for (const auto& chain : chains_of(lower)) {
          auto extended = chain;
          extended.push_back(node);
          chains.push_back(std::move(extended));
        }
    }
    return memo.emplace(node, std::move(chains)).first->second;
  };
  return chains_of(lattice.index_of(lattice.ambient()));
}

std::vector<std::vector<std::size_t>> normal_chains(const SubgroupLattice& lattice) {
  std::size_t bottom = lattice.index_of(PermGroup::trivial(lattice.ambient().degree()));
  std::size_t top = lattice.index_of(lattice.ambient());
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path{bottom};
  std::function<void()> extend = [&] {
    if (path.back() == top) {
      out.push_back(path);
      return;
    }
    for (std::size_t next : lattice.normal_extensions(path.back())) {
      path.push_back(next);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

FiniteSeries series_from_chain(const SubgroupLattice& lattice,
                               const std::vector<std::size_t>& chain) {
  std::vector<PermGroup> groups;
  for (std::size_t index : chain) groups.push_back(lattice.subgroups()[index]);
  return FiniteSeries(lattice.ambient(), std::move(groups));
}

std::vector<FiniteSeries> enumerate_composition_series(const PermGroup& g) {
  SubgroupLattice lattice(g);
  std::vector<FiniteSeries> out;
  for (const auto& chain : composition_chains(lattice))
    out.push_back(series_from_chain(lattice, chain));
  return out;
}

std::vector<FiniteSeries> enumerate_normal_series(const PermGroup& g) {
  SubgroupLattice lattice(g);
  std::vector<FiniteSeries> out;
  for (const auto& chain : normal_chains(lattice))
    out.push_back(series_from_chain(lattice, chain));
  return out;
}

NormalSeriesSampler::NormalSeriesSampler(const SubgroupLattice& lattice) : lattice_(&lattice) {
  std::size_t top = lattice.index_of(lattice.ambient());
  std::vector<bool> reaches(lattice.size(), false);
  reaches[top] = true;
  // Subgroups are sorted by order, and normal extensions strictly increase
  // the order, so one pass from the top suffices.
  for (std::size_t i = lattice.size(); i-- > 0;) {
    if (reaches[i]) continue;
    for (std::size_t next : lattice.normal_extensions(i))
      if (reaches[next]) {
        reaches[i] = true;
        break;
      }
  }
  viable_.resize(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t next : lattice.normal_extensions(i))
      if (reaches[next]) viable_[i].push_back(next);
}

std::vector<std::size_t> NormalSeriesSampler::sample_chain(std::uint64_t& state) const {
  auto next_random = [&state] {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  std::size_t bottom = lattice_->index_of(PermGroup::trivial(lattice_->ambient().degree()));
  std::size_t top = lattice_->index_of(lattice_->ambient());
  std::vector<std::size_t> chain{bottom};
  while (chain.back() != top) {
    const auto& options = viable_[chain.back()];
    chain.push_back(options[next_random() % options.size()]);
  }
  return chain;
}

FiniteSeries NormalSeriesSampler::sample(std::uint64_t& state) const {
  return series_from_chain(*lattice_, sample_chain(state));
}

}  // namespace tfs
