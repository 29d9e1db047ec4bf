#include "chainlocal/engine.hpp"

#include <algorithm>

namespace chainlocal {

Engine::Engine(GroupHandle G, int p, int m_multiplier, int z_variant)
    : g_(std::make_shared<GroupHandle>(std::move(G))), p_(p) {
  CHAINLOCAL_CHECK(is_prime(p), "p must be prime");
  mod_ = std::make_shared<PModularSystem>(p, g_->exponent(), m_multiplier, z_variant);
}

const SubgroupData& Engine::ambient() { return data_for(g_->elements()); }

const SubgroupData& Engine::data_for(const std::vector<Perm>& sorted_elements) {
  auto it = cache_.find(sorted_elements);
  if (it != cache_.end()) return it->second;

  SubgroupData data;
  if (sorted_elements.size() == g_->order()) {
    data.group = g_;
  } else {
    data.group = std::make_shared<GroupHandle>(
        g_->degree(), small_generating_set(sorted_elements), g_->limits());
    CHAINLOCAL_CHECK(data.group->order() == sorted_elements.size(),
                     "cached subgroup handle has the wrong order");
  }
  data.table = std::make_shared<CharacterTable>(compute_character_table(*data.group));
  data.blocks = std::make_shared<BlockSystem>(
      compute_blocks(*data.group, *data.table, mod_));
  return cache_.emplace(sorted_elements, std::move(data)).first->second;
}

const SubgroupData& Engine::data_for(const SubgroupRef& H) { return data_for(H.elements()); }

const PSubgroupPoset& Engine::poset() {
  if (!poset_) poset_ = std::make_unique<PSubgroupPoset>(enumerate_p_subgroups(*g_, p_));
  return *poset_;
}

const ChainOrbitSet& Engine::chain_orbits() {
  if (!orbits_) orbits_ = std::make_unique<ChainOrbitSet>(enumerate_chain_orbits(*g_, poset()));
  return *orbits_;
}

const SubgroupRef& Engine::stabilizer(int chain_rep) {
  const ChainOrbitSet& orbits = chain_orbits();
  if (stabilizers_.empty()) stabilizers_.resize(orbits.count());
  CHAINLOCAL_CHECK(chain_rep >= 0 && chain_rep < orbits.count(), "bad chain rep index");
  if (!stabilizers_[chain_rep])
    stabilizers_[chain_rep] = std::make_unique<SubgroupRef>(
        chain_stabilizer(*g_, poset(), orbits.reps[chain_rep]));
  return *stabilizers_[chain_rep];
}

const Engine::CanonicalSubgroup& Engine::canonical_subgroup(
    const std::vector<Perm>& sorted_elements) {
  auto it = canon_cache_.find(sorted_elements);
  if (it != canon_cache_.end()) return it->second;

  CanonicalSubgroup best{sorted_elements, Perm::identity(g_->degree())};
  for (const Perm& g : g_->elements()) {
    std::vector<Perm> conj;
    conj.reserve(sorted_elements.size());
    for (const Perm& x : sorted_elements) conj.push_back(x.conjugated_by(g));
    std::sort(conj.begin(), conj.end());
    if (conj < best.elements) best = CanonicalSubgroup{std::move(conj), g};
  }
  return canon_cache_.emplace(sorted_elements, std::move(best)).first->second;
}

namespace {

BrauerCorrespondent correspondent(Engine& eng, const SubgroupData& host, int block) {
  const Block& b = host.blocks->blocks[block];
  if (b.defect == 0) throw DomainError("Brauer correspondence needs positive defect");
  const SubgroupRef& d = *b.defect_group;
  SubgroupRef m = normalizer(*host.group, d);
  const SubgroupData& mdata = eng.data_for(m.elements());

  int found = -1;
  for (int c = 0; c < mdata.blocks->count(); ++c) {
    if (block_induction(*host.blocks, *mdata.blocks, c) != block) continue;
    if (mdata.blocks->blocks[c].defect_group->order() != d.order()) continue;
    CHAINLOCAL_CHECK(found < 0, "Brauer correspondent is not unique");
    found = c;
  }
  CHAINLOCAL_CHECK(found >= 0, "Brauer correspondent not found");
  return BrauerCorrespondent{std::move(m), found};
}

}  // namespace

BrauerCorrespondent brauer_correspondent(Engine& eng, int block) {
  return correspondent(eng, eng.ambient(), block);
}

BrauerCorrespondent brauer_correspondent_in(Engine& eng, const SubgroupData& host,
                                            int block) {
  return correspondent(eng, host, block);
}

}  // namespace chainlocal
