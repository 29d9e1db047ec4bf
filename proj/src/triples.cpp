#include "chainlocal/triples.hpp"

#include <algorithm>
#include <set>

namespace chainlocal {

TripleFilter accept_all_triples() {
  return [](const Chain&, int) { return true; };
}

namespace {

bool subset(const std::vector<Perm>& small, const std::vector<Perm>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TripleOrbitSet enumerate_triple_orbits(Engine& eng, const TripleFilter& filter) {
  const PSubgroupPoset& poset = eng.poset();
  const ChainOrbitSet& chains = eng.chain_orbits();

  TripleOrbitSet out;
  for (int r = 0; r < chains.count(); ++r) {
    const Chain& c = chains.reps[r];
    const SubgroupRef& stab = eng.stabilizer(r);
    for (int pid = 1; pid < poset.count(); ++pid) {
      if (!subset(poset.subgroups[pid].elements(), stab.elements())) continue;
      if (!filter(c, pid)) continue;
      std::pair<std::vector<int>, int> seed{c.ids, pid};
      if (out.orbit_of.count(seed)) continue;

      int index = out.count();
      std::vector<std::pair<std::vector<int>, int>> queue{seed};
      out.orbit_of.emplace(seed, index);
      std::pair<std::vector<int>, int> least = seed;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto current = queue[qi];
        for (const auto& action : poset.generator_action) {
          std::pair<std::vector<int>, int> image;
          image.first.reserve(current.first.size());
          for (int id : current.first) image.first.push_back(action[id]);
          image.second = action[current.second];
          if (out.orbit_of.emplace(image, index).second) {
            if (image < least) least = image;
            queue.push_back(std::move(image));
          }
        }
      }
      TripleOrbit orbit;
      orbit.rep = NormalisingTriple{Chain{least.first}, least.second};
      orbit.size = queue.size();
      orbit.sign = (c.length() % 2 == 0) ? 1 : -1;
      out.orbits.push_back(std::move(orbit));
    }
  }
  return out;
}

NormalisingTriple triple_involution(Engine& eng, const NormalisingTriple& t) {
  return NormalisingTriple{chain_involution(eng.group(), eng.poset(), t.chain, t.p_id),
                           t.p_id};
}

std::vector<int> orbit_pairing(Engine& eng, const TripleOrbitSet& orbits) {
  std::vector<int> partner(orbits.count(), -1);
  for (int i = 0; i < orbits.count(); ++i) {
    NormalisingTriple star = triple_involution(eng, orbits.orbits[i].rep);
    auto it = orbits.orbit_of.find({star.chain.ids, star.p_id});
    if (it == orbits.orbit_of.end())
      throw DomainError("triple filter is not stable under the involution");
    int j = it->second;
    CHAINLOCAL_CHECK(j != i, "involution fixed a triple orbit");
    CHAINLOCAL_CHECK(orbits.orbits[i].sign + orbits.orbits[j].sign == 0,
                     "paired orbits do not have opposite signs");
    CHAINLOCAL_CHECK(orbits.orbits[i].size == orbits.orbits[j].size,
                     "paired orbits differ in size");
    CHAINLOCAL_CHECK(partner[j] == -1 || partner[j] == i, "pairing is not a matching");
    partner[i] = j;
  }
  for (int i = 0; i < orbits.count(); ++i)
    CHAINLOCAL_CHECK(partner[partner[i]] == i, "pairing is not an involution");
  return partner;
}

TauReport verify_tau_bijection(Engine& eng, const TripleOrbitSet& orbits,
                               const TripleFilter& filter, int chain_rep) {
  const PSubgroupPoset& poset = eng.poset();
  const Chain& c = eng.chain_orbits().reps[chain_rep];
  const SubgroupRef& stab = eng.stabilizer(chain_rep);

  TauReport report;
  report.chain_rep = chain_rep;

  std::vector<int> qset;
  for (int pid = 1; pid < poset.count(); ++pid) {
    if (!subset(poset.subgroups[pid].elements(), stab.elements())) continue;
    if (!filter(c, pid)) continue;
    qset.push_back(pid);
  }

  // G_C-orbits on the Q's (Y = N_{G_C}(Q) rides along with Q).
  std::map<int, int> gc_orbit;
  int gc_count = 0;
  for (int pid : qset) {
    if (gc_orbit.count(pid)) continue;
    int index = gc_count++;
    std::vector<int> queue{pid};
    gc_orbit.emplace(pid, index);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      for (const Perm& g : stab.generators()) {
        int image =
            poset.id_of(poset.subgroups[queue[qi]].conjugated_by(g).elements());
        CHAINLOCAL_CHECK(image >= 0, "G_C-conjugate missing from the poset");
        if (gc_orbit.emplace(image, index).second) queue.push_back(image);
      }
    }
  }
  report.gc_orbit_count = gc_count;

  // tau sends the G_C-orbit of Q to the G-orbit of (C, Q).
  std::vector<int> tau(gc_count, -1);
  for (int pid : qset) {
    auto it = orbits.orbit_of.find({c.ids, pid});
    CHAINLOCAL_CHECK(it != orbits.orbit_of.end(), "triple missing from the orbit set");
    int& slot = tau[gc_orbit[pid]];
    if (slot == -1) {
      slot = it->second;
    } else if (slot != it->second) {
      report.witnesses.push_back("tau ill-defined on G_C-orbit of Q id " +
                                 std::to_string(pid));
    }
  }

  // G-orbits having C as a first component.
  std::set<int> targets;
  for (const auto& [key, index] : orbits.orbit_of)
    if (key.first == c.ids) targets.insert(index);
  report.g_orbit_count = static_cast<int>(targets.size());

  std::set<int> image(tau.begin(), tau.end());
  report.injective = (static_cast<int>(image.size()) == gc_count);
  if (!report.injective) report.witnesses.push_back("tau is not injective");
  report.surjective = (image == targets);
  if (!report.surjective) report.witnesses.push_back("tau does not cover the G-orbits");
  report.pass = report.injective && report.surjective && report.witnesses.empty();
  return report;
}

namespace {

// Truncation of a class-sum idempotent to the centralizer of P, recorded as
// an element -> coefficient map so systems over different groups compare.
std::map<Perm, std::uint32_t> brauer_element_map(const SubgroupData& data,
                                                 const std::vector<Perm>& p_gens,
                                                 const std::vector<std::uint32_t>& idem) {
  std::map<Perm, std::uint32_t> out;
  const ConjClassTable& classes = data.group->classes();
  const std::vector<Perm>& elems = data.group->elements();
  for (int j = 0; j < classes.count(); ++j) {
    if (idem[j] == 0) continue;
    for (int idx : classes.members[j]) {
      const Perm& x = elems[idx];
      bool central = true;
      for (const Perm& g : p_gens)
        if (!(x * g == g * x)) {
          central = false;
          break;
        }
      if (central) out.emplace(x, idem[j]);
    }
  }
  return out;
}

}  // namespace

StarBlock star_block_correspondent(Engine& eng, int ambient_block, const Chain& c,
                                   int block_of_stab, int p_id) {
  const PSubgroupPoset& poset = eng.poset();
  const GroupHandle& G = eng.group();
  const SubgroupRef& P = poset.subgroups[p_id];

  SubgroupRef stab = chain_stabilizer(G, poset, c);
  const SubgroupData& sdata = eng.data_for(stab.elements());
  const Block& b = sdata.blocks->blocks[block_of_stab];
  if (b.defect == 0) throw DomainError("star correspondent excludes defect zero");
  if (!subset(P.elements(), stab.elements()))
    throw DomainError("P is not contained in the chain stabilizer");
  SubgroupRef p_in_stab = SubgroupRef::from_elements(*sdata.group, P.elements());
  if (!subgroup_conjugator(*sdata.group, p_in_stab, *b.defect_group).has_value())
    throw DomainError("P is not a defect group of the block");
  if (block_induction(*eng.ambient().blocks, *sdata.blocks, block_of_stab) !=
      ambient_block)
    throw DomainError("the block does not induce to the ambient block");

  Chain cstar = chain_involution(G, poset, c, p_id);
  SubgroupRef star_stab = chain_stabilizer(G, poset, cstar);
  const SubgroupData& star_data = eng.data_for(star_stab.elements());
  SubgroupRef p_in_star = SubgroupRef::from_elements(*star_data.group, P.elements());

  // Lemma-level sanity: N_{G_C}(P) = N_{G_{C*}}(P).
  CHAINLOCAL_CHECK(normalizer(*sdata.group, p_in_stab)
                       .same_elements(normalizer(*star_data.group, p_in_star)),
                   "normalizers of P in G_C and G_{C*} differ");

  auto target = brauer_element_map(sdata, P.generators(), b.idempotent);
  int found = -1;
  for (int cand = 0; cand < star_data.blocks->count(); ++cand) {
    if (brauer_element_map(star_data, P.generators(),
                           star_data.blocks->blocks[cand].idempotent) != target)
      continue;
    CHAINLOCAL_CHECK(found < 0, "star correspondent is not unique");
    found = cand;
  }
  CHAINLOCAL_CHECK(found >= 0, "no star correspondent found");

  const Block& bstar = star_data.blocks->blocks[found];
  CHAINLOCAL_CHECK(bstar.defect_group->order() == P.order(),
                   "star correspondent has the wrong defect group order");
  CHAINLOCAL_CHECK(
      subgroup_conjugator(*star_data.group, p_in_star, *bstar.defect_group).has_value(),
      "star correspondent defect group is not conjugate to P");
  CHAINLOCAL_CHECK(block_induction(*eng.ambient().blocks, *star_data.blocks, found) ==
                       ambient_block,
                   "star correspondent does not induce to the ambient block");
  return StarBlock{std::move(cstar), found};
}

}  // namespace chainlocal
