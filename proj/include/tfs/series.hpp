#ifndef TFS_SERIES_HPP
#define TFS_SERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tfs/indexset.hpp"
#include "tfs/ordinal.hpp"
#include "tfs/permgroup.hpp"
#include "tfs/tower.hpp"

namespace tfs {

/// An ordinal-indexed chain of subgroups of a finite permutation group,
/// indices 1..n with subgroup_at(1) expected trivial and subgroup_at(n) the
/// declared ambient group. Construction only fixes the shape; the chain
/// conditions are checked by validate().
class FiniteSeries {
 public:
  FiniteSeries(PermGroup ambient, std::vector<PermGroup> chain);

  const PermGroup& ambient() const { return ambient_; }
  const std::vector<PermGroup>& chain() const { return chain_; }
  Ordinal top_index() const { return Ordinal(chain_.size()); }
  Ordinal term_count() const { return Ordinal(chain_.size()); }
  const PermGroup& subgroup_at(const Ordinal& index) const;

  bool operator==(const FiniteSeries& other) const;

 private:
  PermGroup ambient_;
  std::vector<PermGroup> chain_;
};

/// A transfinite series with a backend tag: finite permutation chains or
/// symbolic tower chains.
using Series = std::variant<FiniteSeries, TowerSeries>;

struct Violation {
  Ordinal index;
  std::string clause;  // "bottom", "top", "subgroup", "strict", "normal", "limit"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Ordinal> limit_indices_checked;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FiniteSeries& series);
ValidationReport validate(const TowerSeries& series, std::uint64_t seed = 0x5eed);
ValidationReport validate(const Series& series, std::uint64_t seed = 0x5eed);

/// The butterfly construction for subgroup pairs (outer, inner) with inner
/// normal in outer: both wing factors with an explicit isomorphism witness.
struct ZassenhausResult {
  PermGroup first_upper;   // inner1 * (outer1 ^ outer2)
  PermGroup first_lower;   // inner1 * (outer1 ^ inner2)
  PermGroup second_upper;  // inner2 * (outer2 ^ outer1)
  PermGroup second_lower;  // inner2 * (outer2 ^ inner1)
  AbstractGroup first_factor;
  AbstractGroup second_factor;
  FactorDescriptor factor;
  IsoWitness witness;  // element map first_factor -> second_factor
};

/// DomainError when an inner subgroup is not normal in its outer subgroup,
/// naming the failing side.
ZassenhausResult zassenhaus(const PermGroup& first_outer, const PermGroup& first_inner,
                            const PermGroup& second_outer, const PermGroup& second_inner);

/// Result of refining two finite-backend series against each other: two
/// refined series over ordinals 1..p and 1..q, the class pairing carried by
/// the regular-pair mirror map, and the factor of every refined step.
struct FiniteRefinement {
  FiniteSeries refined_first;
  FiniteSeries refined_second;
  Ordinal first_order_type;   // p
  Ordinal second_order_type;  // q
  /// pairing[k] = (r, s): step r -> r+1 of the first refined series has a
  /// factor isomorphic to step s -> s+1 of the second. Covers every r.
  std::vector<std::pair<Ordinal, Ordinal>> pairing;
  struct FactorRow {
    Ordinal first_class;
    Ordinal second_class;
    FactorDescriptor factor;
  };
  std::vector<FactorRow> factor_table;
  /// The index quotients the reindexing came from.
  ConcordantQuotient first_quotient;
  ConcordantQuotient second_quotient;
};

/// Refinement of two tower-backend composition series of one tower group.
/// Composition inputs refine to themselves; the pairing maps each step to
/// the step of the other series adding the same position.
struct TowerRefinement {
  TowerSeries refined_first;
  TowerSeries refined_second;
  Ordinal first_order_type;   // p = top index of the first series
  Ordinal second_order_type;  // q
  std::function<Ordinal(const Ordinal&)> pair_step;       // steps of first -> second
  std::function<Ordinal(const Ordinal&)> pair_step_back;  // inverse
  ConcordantQuotient first_quotient;
  ConcordantQuotient second_quotient;
};

/// DomainError on mismatched ambient groups or series shorter than two terms.
FiniteRefinement schreier_refine(const FiniteSeries& first, const FiniteSeries& second);
/// DomainError on mismatched tower groups or non-composition input.
TowerRefinement schreier_refine(const TowerSeries& first, const TowerSeries& second);

/// Witness that two series have matching factors: pairs of step indices,
/// one entry per step of the first series.
struct SeriesIso {
  std::vector<std::pair<Ordinal, Ordinal>> pairs;
};

/// Unordered bijection over successor steps matching factor descriptors
/// (finite backend). The ambient groups may differ.
std::optional<SeriesIso> series_isomorphic(const FiniteSeries& a, const FiniteSeries& b);

/// Tower backend: label multisets matched via interval cardinalities. The
/// step map is total for series of a common tower group; for distinct groups
/// it matches label classes by rank and is exact whenever the per-label
/// address orders are isomorphic.
struct TowerSeriesIso {
  std::function<Ordinal(const Ordinal&)> map_step;
};
std::optional<TowerSeriesIso> series_isomorphic(const TowerSeries& a, const TowerSeries& b);

struct CompositionCertificate {
  bool is_composition = true;
  struct Entry {
    Ordinal index;
    bool simple;
    std::string factor;
  };
  /// Finite backend and explicit tower chains: one entry per step. Enumerated
  /// tower chains: sampled steps (singleton increments by construction).
  std::vector<Entry> entries;
};

CompositionCertificate is_composition_series(const FiniteSeries& series);
CompositionCertificate is_composition_series(const TowerSeries& series);
CompositionCertificate is_composition_series(const Series& series);

/// Every subgroup of `original` appears among the subgroups of `refined`.
bool is_refinement(const FiniteSeries& refined, const FiniteSeries& original);
bool is_refinement(const TowerSeries& refined, const TowerSeries& original);

/// True iff refining `series` against `other` returns `series` unchanged.
bool refinement_is_fixed(const FiniteSeries& series, const FiniteSeries& other);
bool refinement_is_fixed(const TowerSeries& series, const TowerSeries& other);

struct JordanHolderVerdict {
  bool isomorphic = false;
  Ordinal first_top;     // the first series' n
  Ordinal second_top;    // the second series' m
  Ordinal first_count;   // order type of the index set [1, n]
  Ordinal second_count;
  bool tops_equal = false;
  bool same_cardinality = false;
  /// Full pairing for finite series; a sampled prefix plus limit-adjacent
  /// pairs for tower series.
  std::vector<std::pair<Ordinal, Ordinal>> pairing;
  /// Factor names in first-series step order (finite) or per-label
  /// cardinality summary (tower).
  std::vector<std::string> factors;
};

/// DomainError unless both are composition series of one group. Refines the
/// pair, checks both refined series coincide with the inputs, and verifies
/// the paired factors are isomorphic.
JordanHolderVerdict jordan_holder_check(const FiniteSeries& a, const FiniteSeries& b);
JordanHolderVerdict jordan_holder_check(const TowerSeries& a, const TowerSeries& b);
JordanHolderVerdict jordan_holder_check(const Series& a, const Series& b);

/// All composition series of g: depth-first search over maximal normal
/// subgroups from the top.
std::vector<FiniteSeries> enumerate_composition_series(const PermGroup& g);
std::vector<std::vector<std::size_t>> composition_chains(const SubgroupLattice& lattice);

/// All stepwise-normal chains from the trivial subgroup to the ambient group
/// (jumps allowed).
std::vector<FiniteSeries> enumerate_normal_series(const PermGroup& g);
std::vector<std::vector<std::size_t>> normal_chains(const SubgroupLattice& lattice);

FiniteSeries series_from_chain(const SubgroupLattice& lattice,
                               const std::vector<std::size_t>& chain);

/// Uniform-ish random stepwise-normal chain from bottom to top; only
/// extensions that can still reach the ambient group are drawn.
class NormalSeriesSampler {
 public:
  explicit NormalSeriesSampler(const SubgroupLattice& lattice);
  std::vector<std::size_t> sample_chain(std::uint64_t& state) const;
  FiniteSeries sample(std::uint64_t& state) const;

 private:
  const SubgroupLattice* lattice_;
  std::vector<std::vector<std::size_t>> viable_;  // per node: extensions reaching top
};

}  // namespace tfs

#endif
