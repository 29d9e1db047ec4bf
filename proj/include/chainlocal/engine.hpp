#pragma once

#include <map>
#include <memory>
#include <vector>

#include "chainlocal/blocks.hpp"
#include "chainlocal/chains.hpp"
#include "chainlocal/chartable.hpp"
#include "chainlocal/group.hpp"

namespace chainlocal {

// Character table and block data for one subgroup, owned together so the
// raw pointers inside BlockSystem stay valid.
struct SubgroupData {
  std::shared_ptr<GroupHandle> group;
  std::shared_ptr<CharacterTable> table;
  std::shared_ptr<BlockSystem> blocks;
};

// One (ambient group, prime) context: a shared modular system, the
// p-subgroup poset, chain orbits with stabilizers, and a content-addressed
// cache of block data for every subgroup that comes up.
class Engine {
 public:
  Engine(GroupHandle G, int p, int m_multiplier = 1, int z_variant = 0);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const GroupHandle& group() const { return *g_; }
  int p() const { return p_; }
  std::shared_ptr<const PModularSystem> mod() const { return mod_; }

  const SubgroupData& ambient();
  const SubgroupData& data_for(const std::vector<Perm>& sorted_elements);
  const SubgroupData& data_for(const SubgroupRef& H);

  const PSubgroupPoset& poset();
  const ChainOrbitSet& chain_orbits();
  const SubgroupRef& stabilizer(int chain_rep);

  // Lexicographically least G-conjugate of the element set, with a witness
  // g conjugating the input onto it.
  struct CanonicalSubgroup {
    std::vector<Perm> elements;
    Perm witness;
  };
  const CanonicalSubgroup& canonical_subgroup(const std::vector<Perm>& sorted_elements);

 private:
  std::shared_ptr<GroupHandle> g_;
  int p_;
  std::shared_ptr<const PModularSystem> mod_;
  std::map<std::vector<Perm>, SubgroupData> cache_;
  std::map<std::vector<Perm>, CanonicalSubgroup> canon_cache_;
  std::unique_ptr<PSubgroupPoset> poset_;
  std::unique_ptr<ChainOrbitSet> orbits_;
  std::vector<std::unique_ptr<SubgroupRef>> stabilizers_;
};

// Brauer correspondent of a positive-defect block of the ambient group: the
// unique block of N_G(D) inducing to it with a defect group of the same
// order (Brauer's first main theorem).
struct BrauerCorrespondent {
  SubgroupRef normalizer;
  int block;
};
BrauerCorrespondent brauer_correspondent(Engine& eng, int block);

// Same computation one level down: the correspondent of a positive-defect
// block of an arbitrary cached subgroup at its own defect-group normalizer.
BrauerCorrespondent brauer_correspondent_in(Engine& eng, const SubgroupData& host,
                                            int block);

}  // namespace chainlocal
