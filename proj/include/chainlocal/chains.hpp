#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chainlocal/group.hpp"

namespace chainlocal {

// All p-subgroups of G (index 0 the trivial group), sorted by order and then
// by element set, with the strict-inclusion relation and the conjugation
// action of the generators of G.
struct PSubgroupPoset {
  int p = 0;
  std::vector<SubgroupRef> subgroups;
  std::vector<std::vector<char>> strictly_below;  // [small][large]
  std::vector<std::vector<int>> generator_action;  // [generator][id] -> id
  std::vector<int> class_rep;                      // least id in the G-orbit
  std::vector<Perm> to_class_rep;                  // conjugator witnesses

  int count() const { return static_cast<int>(subgroups.size()); }
  int id_of(const std::vector<Perm>& sorted_elements) const;
};

PSubgroupPoset enumerate_p_subgroups(const GroupHandle& G, int p);

// Nontrivial Q with Q = O_p(N_G(Q)).
std::vector<int> radical_p_subgroups(const GroupHandle& G, const PSubgroupPoset& poset);

// Strictly increasing id sequences starting at the trivial subgroup.
struct Chain {
  std::vector<int> ids;
  int length() const { return static_cast<int>(ids.size()) - 1; }
  int top() const { return ids.back(); }
  bool operator==(const Chain& o) const { return ids == o.ids; }
  bool operator<(const Chain& o) const { return ids < o.ids; }
};

struct ChainOrbitSet {
  std::vector<Chain> reps;                  // rep 0 is the trivial chain
  std::vector<std::uint64_t> orbit_sizes;
  std::map<std::vector<int>, int> orbit_of;  // every chain -> rep index

  int count() const { return static_cast<int>(reps.size()); }
};

ChainOrbitSet enumerate_chain_orbits(const GroupHandle& G, const PSubgroupPoset& poset);

SubgroupRef chain_stabilizer(const GroupHandle& G, const PSubgroupPoset& poset,
                             const Chain& c);

// Image of a chain under conjugation by g.
Chain conjugate_chain(const PSubgroupPoset& poset, const Chain& c, const Perm& g);

// C -> C* with respect to the nontrivial p-subgroup with the given poset id.
Chain chain_involution(const GroupHandle& G, const PSubgroupPoset& poset, const Chain& c,
                       int p_id);

}  // namespace chainlocal
