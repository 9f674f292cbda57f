#ifndef TFS_PERMGROUP_HPP
#define TFS_PERMGROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfs/indexset.hpp"  // ValueKey

namespace tfs {

/// A permutation of {0..degree-1}, stored as the image sequence.
class Perm {
 public:
  Perm() = default;
  static Perm identity(std::size_t degree);
  /// DomainError unless images is a bijection.
  static Perm from_images(std::vector<std::uint8_t> images);
  /// Parses disjoint-cycle text like "(0 1 2)(3 4)"; fixed points may be
  /// omitted. "()" is the identity. Points must be < degree.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::uint8_t point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint32_t order() const;

  bool operator==(const Perm& other) const = default;
  auto operator<=>(const Perm& other) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// (a * b) means "apply b first, then a".
Perm operator*(const Perm& a, const Perm& b);
std::string format(const Perm& p);

class AbstractGroup;
struct FactorDescriptor;

/// A finite permutation group with its full element set materialized by
/// breadth-first closure. Immutable after construction; the element list is
/// kept sorted, so equal groups compare equal componentwise.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultElementCap = 20160;

  /// Closure of the generators; ResourceError when the cap is exceeded,
  /// DomainError on degree mismatches.
  static PermGroup generate(std::vector<Perm> generators, std::size_t degree,
                            std::size_t element_cap = kDefaultElementCap);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  /// Sorted element encoding; equal keys iff equal groups (same degree).
  ValueKey key() const;

  /// Multiplication table over the sorted element order (identity first).
  AbstractGroup to_table() const;

  bool operator==(const PermGroup& other) const;

 private:
  PermGroup() = default;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
};

/// Smallest subgroup containing both arguments.
PermGroup join(const PermGroup& g, const PermGroup& h,
               std::size_t element_cap = PermGroup::kDefaultElementCap);
/// Set intersection (always a subgroup).
PermGroup intersect(const PermGroup& g, const PermGroup& h);
/// True iff g n g^-1 lies in n_sub for every g in g_super, n in n_sub.
/// DomainError unless n_sub is a subgroup of g_super.
bool is_normal_in(const PermGroup& n_sub, const PermGroup& g_super);
/// Normal closure of an element within g.
PermGroup normal_closure(const PermGroup& g, const Perm& seed);

/// A finite group presented by its multiplication table; element 0 is the
/// identity. Used for factor groups and isomorphism work.
class AbstractGroup {
 public:
  AbstractGroup(std::uint32_t order, std::vector<std::uint32_t> table);

  std::uint32_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t element_order(std::uint32_t a) const;
  bool is_abelian() const;

  /// Orders of all elements, as order -> multiplicity.
  std::map<std::uint32_t, std::uint32_t> order_histogram() const;

  /// Left-regular permutation representation (degree = order).
  PermGroup regular_representation() const;

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
};

/// Factor group g/n as a multiplication table over coset representatives;
/// DomainError unless n is normal in g.
AbstractGroup quotient(const PermGroup& g, const PermGroup& n);

/// True iff the normal closure of every non-identity element is the whole
/// group. DomainError on the trivial group.
bool is_simple(const PermGroup& g);
bool is_simple(const AbstractGroup& g);

/// Explicit isomorphism: witness[i] is the image in B of element i of A,
/// a bijective homomorphism.
using IsoWitness = std::vector<std::uint32_t>;

/// Invariant screening followed by backtracking over generator images.
/// ResourceError when either order exceeds the cap.
std::optional<IsoWitness> are_isomorphic(const AbstractGroup& a, const AbstractGroup& b,
                                         std::size_t order_cap = 512);
std::optional<IsoWitness> are_isomorphic(const PermGroup& a, const PermGroup& b,
                                         std::size_t order_cap = 512);

/// Isomorphism-class fingerprint of a finite group. Certificates are exact
/// (equality iff isomorphism) up to order kCertificateCap; beyond that only
/// the screening invariants are compared.
struct FactorDescriptor {
  static constexpr std::uint32_t kCertificateCap = 64;

  std::uint32_t order = 1;
  bool abelian = true;
  std::map<std::uint32_t, std::uint32_t> element_order_histogram;
  std::vector<std::uint32_t> canonical_certificate;  // empty above the cap

  bool operator==(const FactorDescriptor& other) const = default;
  /// Display name: Cp for cyclic of prime order, A5 for the order-60 simple
  /// group, "G<order>" otherwise.
  std::string name() const;
};

FactorDescriptor descriptor(const AbstractGroup& g);
FactorDescriptor descriptor(const PermGroup& g);

/// All subgroups of g, found by closing the lattice under "adjoin one
/// element", sorted by (order, key).
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// Subgroup lattice of an ambient group with inclusion and normality
/// relations precomputed. Indices refer to subgroups().
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermGroup& ambient);

  const PermGroup& ambient() const { return subgroups_.back(); }
  const std::vector<PermGroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }

  bool includes(std::size_t sub, std::size_t super) const;  // sub <= super
  bool normal_in(std::size_t sub, std::size_t super) const;
  std::size_t index_of(const PermGroup& g) const;

  /// Proper normal subgroups of subgroup `g`, maximal under inclusion.
  std::vector<std::size_t> maximal_normal_in(std::size_t g) const;
  /// All subgroups strictly above `sub` in which `sub` is normal.
  std::vector<std::size_t> normal_extensions(std::size_t sub) const;

 private:
  std::vector<PermGroup> subgroups_;
  std::vector<std::vector<bool>> includes_;
  std::vector<std::vector<bool>> normal_;
};

}  // namespace tfs

#endif
