#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chainlocal/errors.hpp"
#include "chainlocal/perm.hpp"

namespace chainlocal {

// Conjugacy class data for a group. Class 0 is the class of the identity;
// representatives are the lexicographically least elements of their classes
// and classes are sorted by representative.
struct ConjClassTable {
  std::vector<Perm> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<int> class_of_element;  // indexed by position in sorted element list
  std::vector<int> inverse_class;
  std::vector<std::vector<int>> members;  // element indices per class

  int count() const { return static_cast<int>(reps.size()); }
};

namespace detail {
struct BsgsLevel {
  int base_point = -1;
  std::vector<int> orbit;                  // points in discovery order
  std::vector<Perm> transversal;           // indexed by point; maps base_point -> point
  std::vector<char> in_orbit;              // indexed by point
  std::vector<Perm> gens;                  // generators of this level's stabilizer group
};
}  // namespace detail

// A finite permutation group with a base and strong generating set.
// Immutable after construction; lazy caches are built under a mutex.
class GroupHandle {
 public:
  GroupHandle(int degree, std::vector<Perm> generators,
              const Limits& limits = default_limits());

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Limits& limits() const { return limits_; }

  std::uint64_t order() const { return order_; }
  bool contains(const Perm& g) const;

  // All elements, sorted lexicographically by image table.
  const std::vector<Perm>& elements() const;
  // Index of g in elements(), or -1.
  int element_index(const Perm& g) const;

  const ConjClassTable& classes() const;
  int class_of(const Perm& g) const;

  // Fundamental orbit lengths along the stabilizer chain (their product is the order).
  std::vector<std::uint64_t> fundamental_orbit_lengths() const;
  std::uint64_t exponent() const;

 private:
  void build_bsgs();

  int degree_;
  std::vector<Perm> generators_;
  Limits limits_;
  std::vector<detail::BsgsLevel> levels_;
  std::uint64_t order_ = 1;

  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const std::vector<Perm>> elements;
    std::shared_ptr<const ConjClassTable> classes;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// A subgroup of a fixed parent group, stored as an explicit sorted element
// set plus a small generating set.
class SubgroupRef {
 public:
  static SubgroupRef from_generators(const GroupHandle& parent, std::vector<Perm> gens);
  static SubgroupRef from_elements(const GroupHandle& parent, std::vector<Perm> elements);
  static SubgroupRef trivial(const GroupHandle& parent);
  static SubgroupRef whole_group(const GroupHandle& parent);

  const GroupHandle& parent() const { return *parent_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& g) const;
  bool contains_subgroup(const SubgroupRef& other) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool same_elements(const SubgroupRef& other) const { return elements_ == other.elements_; }

  SubgroupRef conjugated_by(const Perm& g) const;
  // A standalone handle on the same points (for character-table work).
  GroupHandle to_group() const;

 private:
  SubgroupRef(const GroupHandle* parent, std::vector<Perm> elements, std::vector<Perm> gens)
      : parent_(parent), elements_(std::move(elements)), gens_(std::move(gens)) {}
  const GroupHandle* parent_;
  std::vector<Perm> elements_;  // sorted
  std::vector<Perm> gens_;
};

// Closure of a generator list under products; sorted.
std::vector<Perm> generate_closure(int degree, const std::vector<Perm>& gens,
                                   std::uint64_t max_order);
// Greedy small generating set for a sorted element list.
std::vector<Perm> small_generating_set(const std::vector<Perm>& sorted_elements);

SubgroupRef centralizer(const GroupHandle& G, const Perm& g);
SubgroupRef centralizer_of_subgroup(const GroupHandle& G, const SubgroupRef& H);
SubgroupRef normalizer(const GroupHandle& G, const SubgroupRef& H);
SubgroupRef sylow_subgroup(const GroupHandle& G, int p);
SubgroupRef p_core(const GroupHandle& G, int p);
SubgroupRef intersect(const SubgroupRef& a, const SubgroupRef& b);
std::optional<Perm> subgroup_conjugator(const GroupHandle& G, const SubgroupRef& H1,
                                        const SubgroupRef& H2);

bool is_prime(int n);
int p_valuation(std::uint64_t n, int p);

// Abstract group isomorphism, decided by invariant fingerprint then
// generator-image backtracking.
bool is_isomorphic(const GroupHandle& G1, const GroupHandle& G2);

// (order, element-order histogram, center size, derived-subgroup size,
// class-size multiset) -- an isomorphism invariant used for pre-filtering
// and for building isomorphism-invariant hash keys.
std::vector<std::uint64_t> iso_fingerprint(const GroupHandle& G);

}  // namespace chainlocal
