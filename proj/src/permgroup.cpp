#include "tfs/permgroup.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x])
      throw DomainError("permutation images are not a bijection");
    seen[x] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  if (degree > 255) throw DomainError("permutation degree exceeds 255");
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
    ++pos;
    std::vector<std::uint8_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point number in cycle", pos);
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (value >= degree)
        throw ParseError("point " + std::to_string(value) + " outside degree " +
                             std::to_string(degree),
                         pos);
      if (used[value]) throw ParseError("point repeated across cycles", pos);
      used[value] = true;
      cycle.push_back(static_cast<std::uint8_t>(value));
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
    ++pos;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return from_images(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::uint32_t Perm::order() const {
  // lcm of cycle lengths
  std::uint32_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degree mismatch in product");
  std::vector<std::uint8_t> images(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) images[i] = a(b(static_cast<std::uint8_t>(i)));
  return Perm::from_images(std::move(images));
}

std::string format(const Perm& p) {
  if (p.is_identity()) return "()";
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(static_cast<std::uint8_t>(i)) == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p(static_cast<std::uint8_t>(j));
    }
    out += ')';
  }
  return out;
}

PermGroup PermGroup::generate(std::vector<Perm> generators, std::size_t degree,
                              std::size_t element_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
  std::unordered_set<Perm, PermHash> elements;
  std::vector<Perm> queue{Perm::identity(degree)};
  elements.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm current = queue[head];
    for (const auto& g : generators) {
      Perm next = current * g;
      if (elements.insert(next).second) {
        if (elements.size() > element_cap)
          throw ResourceError("group closure exceeds element cap " +
                              std::to_string(element_cap));
        queue.push_back(std::move(next));
      }
    }
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.assign(elements.begin(), elements.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

PermGroup PermGroup::trivial(std::size_t degree) { return generate({}, degree); }

bool PermGroup::contains(const Perm& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_ || order() > other.order()) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool PermGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a * b != b * a) return false;
  return true;
}

ValueKey PermGroup::key() const {
  ValueKey key;
  key.reserve(elements_.size() * degree_ + 1);
  key.push_back(static_cast<char>(degree_));
  for (const auto& e : elements_)
    key.append(e.images().begin(), e.images().end());
  return key;
}

AbstractGroup PermGroup::to_table() const {
  std::uint32_t n = static_cast<std::uint32_t>(order());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  auto index_of = [&](const Perm& p) {
    return static_cast<std::uint32_t>(
        std::lower_bound(elements_.begin(), elements_.end(), p) - elements_.begin());
  };
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      table[a * n + b] = index_of(elements_[a] * elements_[b]);
  return AbstractGroup(n, std::move(table));
}

bool PermGroup::operator==(const PermGroup& other) const {
  return degree_ == other.degree_ && elements_ == other.elements_;
}

PermGroup join(const PermGroup& g, const PermGroup& h, std::size_t element_cap) {
  if (g.degree() != h.degree()) throw DomainError("join of groups of different degrees");
  std::vector<Perm> gens = g.generators();
  gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return PermGroup::generate(std::move(gens), g.degree(), element_cap);
}

PermGroup intersect(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw DomainError("intersection of groups of different degrees");
  std::vector<Perm> common;
  std::set_intersection(g.elements().begin(), g.elements().end(), h.elements().begin(),
                        h.elements().end(), std::back_inserter(common));
  return PermGroup::generate(std::move(common), g.degree());
}

bool is_normal_in(const PermGroup& n_sub, const PermGroup& g_super) {
  if (!n_sub.is_subgroup_of(g_super))
    throw DomainError("normality test requires a subgroup of the ambient argument");
  // Conjugation by a generating set suffices once all of n_sub is checked.
  for (const auto& g : g_super.generators()) {
    Perm gi = g.inverse();
    for (const auto& n : n_sub.elements())
      if (!n_sub.contains(g * n * gi)) return false;
  }
  return true;
}

PermGroup normal_closure(const PermGroup& g, const Perm& seed) {
  std::vector<Perm> conjugates;
  std::set<Perm> dedupe;
  for (const auto& h : g.elements()) {
    Perm c = h * seed * h.inverse();
    if (dedupe.insert(c).second) conjugates.push_back(c);
  }
  return PermGroup::generate(std::move(conjugates), g.degree(), g.order());
}

AbstractGroup::AbstractGroup(std::uint32_t order, std::vector<std::uint32_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
    throw DomainError("malformed multiplication table");
}

std::uint32_t AbstractGroup::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order_; ++b)
    if (mul(a, b) == 0) return b;
  throw ContractError("element without inverse in multiplication table");
}

std::uint32_t AbstractGroup::element_order(std::uint32_t a) const {
  std::uint32_t x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool AbstractGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::map<std::uint32_t, std::uint32_t> AbstractGroup::order_histogram() const {
  std::map<std::uint32_t, std::uint32_t> hist;
  for (std::uint32_t a = 0; a < order_; ++a) hist[element_order(a)] += 1;
  return hist;
}

PermGroup AbstractGroup::regular_representation() const {
  if (order_ > 255) throw ResourceError("regular representation beyond degree 255");
  // Greedy small generating set: adjoin elements until the closure is full.
  std::vector<Perm> gens;
  auto as_perm = [&](std::uint32_t g) {
    std::vector<std::uint8_t> images(order_);
    for (std::uint32_t x = 0; x < order_; ++x)
      images[x] = static_cast<std::uint8_t>(mul(g, x));
    return Perm::from_images(std::move(images));
  };
  PermGroup current = PermGroup::trivial(order_);
  for (std::uint32_t g = 1; g < order_ && current.order() < order_; ++g) {
    Perm p = as_perm(g);
    if (!current.contains(p)) {
      gens.push_back(p);
      current = PermGroup::generate(gens, order_);
    }
  }
  return current;
}

AbstractGroup quotient(const PermGroup& g, const PermGroup& n) {
  if (!is_normal_in(n, g))
    throw DomainError("quotient requires a normal subgroup");
  // Map every element to the minimal element of its coset.
  std::map<Perm, Perm> rep_of;
  std::vector<Perm> reps;
  for (const auto& x : g.elements()) {
    if (rep_of.count(x)) continue;
    Perm min = x;
    std::vector<Perm> coset;
    for (const auto& m : n.elements()) {
      Perm y = x * m;
      coset.push_back(y);
      if (y < min) min = y;
    }
    for (auto& y : coset) rep_of.emplace(std::move(y), min);
    reps.push_back(min);
  }
  std::sort(reps.begin(), reps.end());
  auto index_of = [&](const Perm& rep) {
    return static_cast<std::uint32_t>(
        std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
  };
  std::uint32_t q = static_cast<std::uint32_t>(reps.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      table[a * q + b] = index_of(rep_of.at(reps[a] * reps[b]));
  return AbstractGroup(q, std::move(table));
}

bool is_simple(const PermGroup& g) {
  if (g.order() < 2) throw DomainError("simplicity of the trivial group is undefined");
  for (const auto& x : g.elements()) {
    if (x.is_identity()) continue;
    if (normal_closure(g, x).order() != g.order()) return false;
  }
  return true;
}

bool is_simple(const AbstractGroup& g) {
  return is_simple(g.regular_representation());
}

namespace {

// Depth-first search over irredundant generating tuples: each new generator
// lies outside the closure of the previous ones. Minimal-length generating
// tuples are exactly the irredundant tuples of that length.
struct TupleSearch {
  const AbstractGroup& g;
  std::size_t depth;
  std::vector<std::uint32_t> tuple;
  std::vector<std::vector<bool>> closure_stack;  // membership per level

  explicit TupleSearch(const AbstractGroup& group, std::size_t d) : g(group), depth(d) {
    std::vector<bool> base(g.order(), false);
    base[0] = true;
    closure_stack.push_back(std::move(base));
  }

  std::vector<bool> closed(const std::vector<bool>& members, std::uint32_t extra) const {
    std::vector<bool> in = members;
    in[extra] = true;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < g.order(); ++x)
      if (in[x]) queue.push_back(x);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t t = 0; t < queue.size(); ++t) {
        std::uint32_t y = g.mul(queue[head], queue[t]);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    return in;
  }

  template <typename Visit>
  bool run(const Visit& visit) {
    return step(visit);
  }

  template <typename Visit>
  bool step(const Visit& visit) {
    if (tuple.size() == depth) {
      const auto& members = closure_stack.back();
      for (std::uint32_t x = 0; x < g.order(); ++x)
        if (!members[x]) return false;
      return visit(tuple);
    }
    for (std::uint32_t c = 1; c < g.order(); ++c) {
      if (closure_stack.back()[c]) continue;
      auto extended = closed(closure_stack.back(), c);
      tuple.push_back(c);
      closure_stack.push_back(std::move(extended));
      bool stop = step(visit);
      closure_stack.pop_back();
      tuple.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

std::size_t minimal_generator_count(const AbstractGroup& g) {
  if (g.order() == 1) return 0;
  for (std::size_t d = 1;; ++d) {
    TupleSearch search(g, d);
    if (search.run([](const std::vector<std::uint32_t>&) { return true; })) return d;
  }
}

// Breadth-first labeling of the Cayley graph for one generating tuple:
// flat rows of "image of element i under right multiplication by each
// generator", elements numbered in discovery order.
std::vector<std::uint32_t> bfs_encoding(const AbstractGroup& g,
                                        const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> label(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> order_found;
  label[0] = 0;
  order_found.push_back(0);
  std::vector<std::uint32_t> encoding;
  for (std::size_t head = 0; head < order_found.size(); ++head)
    for (std::uint32_t gen : gens) {
      std::uint32_t y = g.mul(order_found[head], gen);
      if (label[y] == UINT32_MAX) {
        label[y] = static_cast<std::uint32_t>(order_found.size());
        order_found.push_back(y);
      }
      encoding.push_back(label[y]);
    }
  return encoding;
}

// Invariant factors of an abelian group, recovered from the order
// histogram: per prime, the partition of the p-exponent.
std::vector<std::uint32_t> abelian_invariants(const AbstractGroup& g) {
  auto hist = g.order_histogram();
  std::vector<std::uint32_t> out;
  std::uint32_t n = g.order();
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    // count of elements whose order divides p^k
    std::vector<std::uint32_t> cumulative{1};
    std::uint64_t pk = p;
    while (true) {
      std::uint32_t count = 0;
      for (const auto& [ord, mult] : hist)
        if (pk % ord == 0) count += mult;
      cumulative.push_back(count);
      if (count == cumulative[cumulative.size() - 2]) break;
      pk *= p;
    }
    std::vector<std::uint32_t> exponents_of_p;  // b_k = log_p(cumulative[k])
    for (auto c : cumulative) {
      std::uint32_t b = 0;
      while (c > 1) {
        c /= p;
        ++b;
      }
      exponents_of_p.push_back(b);
    }
    out.push_back(p);
    for (std::size_t k = 1; k < exponents_of_p.size(); ++k) {
      std::uint32_t parts_ge_k = exponents_of_p[k] - exponents_of_p[k - 1];
      out.push_back(parts_ge_k);  // Young diagram column heights
    }
    out.push_back(0);  // prime separator
  }
  return out;
}

}  // namespace

FactorDescriptor descriptor(const AbstractGroup& g) {
  FactorDescriptor d;
  d.order = g.order();
  d.abelian = g.is_abelian();
  d.element_order_histogram = g.order_histogram();
  if (g.order() <= FactorDescriptor::kCertificateCap) {
    if (g.order() == 1) {
      d.canonical_certificate = {0};
    } else if (d.abelian) {
      d.canonical_certificate = {1};
      auto inv = abelian_invariants(g);
      d.canonical_certificate.insert(d.canonical_certificate.end(), inv.begin(), inv.end());
    } else {
      std::size_t gens = minimal_generator_count(g);
      std::vector<std::uint32_t> best;
      TupleSearch search(g, gens);
      search.run([&](const std::vector<std::uint32_t>& tuple) {
        auto enc = bfs_encoding(g, tuple);
        if (best.empty() || enc < best) best = std::move(enc);
        return false;  // keep searching for the minimum
      });
      d.canonical_certificate = {2, g.order(), static_cast<std::uint32_t>(gens)};
      d.canonical_certificate.insert(d.canonical_certificate.end(), best.begin(), best.end());
    }
  }
  return d;
}

FactorDescriptor descriptor(const PermGroup& g) { return descriptor(g.to_table()); }

std::string FactorDescriptor::name() const {
  if (order == 1) return "1";
  bool prime = order > 1;
  for (std::uint32_t d = 2; d * d <= order; ++d)
    if (order % d == 0) prime = false;
  if (prime) return "C" + std::to_string(order);
  if (order == 60 && !abelian && element_order_histogram.count(5)) return "A5";
  return "G" + std::to_string(order);
}

std::optional<IsoWitness> are_isomorphic(const AbstractGroup& a, const AbstractGroup& b,
                                         std::size_t order_cap) {
  if (a.order() > order_cap || b.order() > order_cap)
    throw ResourceError("isomorphism test beyond order cap " + std::to_string(order_cap));
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 1) return IsoWitness{0};
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (a.order_histogram() != b.order_histogram()) return std::nullopt;

  std::size_t gens = minimal_generator_count(a);
  // One minimal generating tuple of a is enough to anchor the search.
  std::vector<std::uint32_t> a_gens;
  {
    TupleSearch search(a, gens);
    search.run([&](const std::vector<std::uint32_t>& tuple) {
      a_gens = tuple;
      return true;
    });
  }
  // Word decomposition of every element of a over the anchor tuple.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(a.order(),
                                                              {UINT32_MAX, UINT32_MAX});
  std::vector<std::uint32_t> discovery{0};
  for (std::size_t head = 0; head < discovery.size(); ++head)
    for (std::size_t t = 0; t < a_gens.size(); ++t) {
      std::uint32_t y = a.mul(discovery[head], a_gens[t]);
      if (y != 0 && parent[y].first == UINT32_MAX) {
        parent[y] = {discovery[head], static_cast<std::uint32_t>(t)};
        discovery.push_back(y);
      }
    }

  std::vector<std::uint32_t> images(gens);
  std::vector<std::uint32_t> a_orders(gens), candidates;
  for (std::size_t t = 0; t < gens; ++t) a_orders[t] = a.element_order(a_gens[t]);

  IsoWitness phi(a.order(), UINT32_MAX);

  auto try_images = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), UINT32_MAX);
    phi[0] = 0;
    for (std::uint32_t x : discovery) {
      if (x == 0) continue;
      auto [px, t] = parent[x];
      phi[x] = b.mul(phi[px], images[t]);
    }
    // The induced map must be bijective and multiplicative.
    std::vector<bool> hit(b.order(), false);
    for (std::uint32_t x = 0; x < a.order(); ++x) {
      if (phi[x] == UINT32_MAX || hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    for (std::uint32_t x = 0; x < a.order(); ++x)
      for (std::uint32_t y = 0; y < a.order(); ++y)
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    return true;
  };

  // Backtracking over candidate images with matching element orders.
  std::vector<std::vector<std::uint32_t>> pools(gens);
  for (std::size_t t = 0; t < gens; ++t)
    for (std::uint32_t c = 1; c < b.order(); ++c)
      if (b.element_order(c) == a_orders[t]) pools[t].push_back(c);

  std::vector<std::size_t> cursor(gens, 0);
  std::size_t level = 0;
  while (true) {
    if (cursor[level] == pools[level].size()) {
      cursor[level] = 0;
      if (level == 0) return std::nullopt;
      --level;
      ++cursor[level];
      continue;
    }
    images[level] = pools[level][cursor[level]];
    if (level + 1 < gens) {
      ++level;
      continue;
    }
    if (try_images()) return phi;
    ++cursor[level];
  }
}

std::optional<IsoWitness> are_isomorphic(const PermGroup& a, const PermGroup& b,
                                         std::size_t order_cap) {
  if (a.order() > order_cap || b.order() > order_cap)
    throw ResourceError("isomorphism test beyond order cap " + std::to_string(order_cap));
  return are_isomorphic(a.to_table(), b.to_table(), order_cap);
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::map<ValueKey, PermGroup> found;
  PermGroup triv = PermGroup::trivial(g.degree());
  found.emplace(triv.key(), triv);
  std::vector<PermGroup> frontier{triv};
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const auto& h : frontier)
      for (const auto& x : g.elements()) {
        if (x.is_identity() || h.contains(x)) continue;
        std::vector<Perm> gens = h.generators();
        gens.push_back(x);
        PermGroup k = PermGroup::generate(std::move(gens), g.degree(), g.order());
        auto [it, fresh] = found.emplace(k.key(), k);
        if (fresh) next.push_back(it->second);
      }
    frontier = std::move(next);
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (auto& [key, sub] : found) out.push_back(std::move(sub));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

SubgroupLattice::SubgroupLattice(const PermGroup& ambient) {
  subgroups_ = all_subgroups(ambient);
  std::size_t n = subgroups_.size();
  includes_.assign(n, std::vector<bool>(n, false));
  normal_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!subgroups_[i].is_subgroup_of(subgroups_[j])) continue;
      includes_[i][j] = true;
      normal_[i][j] = is_normal_in(subgroups_[i], subgroups_[j]);
    }
}

bool SubgroupLattice::includes(std::size_t sub, std::size_t super) const {
  return includes_[sub][super];
}

bool SubgroupLattice::normal_in(std::size_t sub, std::size_t super) const {
  return normal_[sub][super];
}

std::size_t SubgroupLattice::index_of(const PermGroup& g) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i] == g) return i;
  throw DomainError("group is not a subgroup of this lattice's ambient group");
}

std::vector<std::size_t> SubgroupLattice::maximal_normal_in(std::size_t g) const {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (i != g && includes_[i][g] && normal_[i][g]) candidates.push_back(i);
  std::vector<std::size_t> maximal;
  for (std::size_t i : candidates) {
    bool is_max = true;
    for (std::size_t j : candidates)
      if (j != i && includes_[i][j]) is_max = false;
    if (is_max) maximal.push_back(i);
  }
  return maximal;
}

std::vector<std::size_t> SubgroupLattice::normal_extensions(std::size_t sub) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < subgroups_.size(); ++j)
    if (j != sub && includes_[sub][j] && normal_[sub][j]) out.push_back(j);
  return out;
}

}  // namespace tfs
