#include "chainlocal/chains.hpp"

#include <algorithm>
#include <cstdlib>

namespace chainlocal {

ChainOrbitSet enumerate_chain_orbits(const GroupHandle& G, const PSubgroupPoset& poset) {
  const std::uint64_t guard = G.limits().max_chains;

  // Depth-first enumeration in lexicographic order of id sequences.
  std::vector<Chain> chains;
  // Iterative DFS: at each step, record the current chain, then try to
  // extend by every strictly larger id.
  struct Frame {
    std::vector<int> ids;
    int next_candidate;
  };
  std::vector<Frame> frames{{{0}, 0}};
  chains.push_back(Chain{{0}});
  while (!frames.empty()) {
    Frame& f = frames.back();
    int top = f.ids.back();
    int n = poset.count();
    int j = f.next_candidate;
    while (j < n && !poset.strictly_below[top][j]) ++j;
    if (j == n) {
      frames.pop_back();
      continue;
    }
    f.next_candidate = j + 1;
    std::vector<int> extended = f.ids;
    extended.push_back(j);
    chains.push_back(Chain{extended});
    CHAINLOCAL_CHECK(chains.size() <= guard, "chain count guard exceeded");
    frames.push_back(Frame{std::move(extended), 0});
  }

  ChainOrbitSet orbits;
  for (const Chain& c : chains) {
    if (orbits.orbit_of.count(c.ids)) continue;
    // c is lexicographically least in its orbit: all chains are enumerated
    // in lex order, so any earlier orbit member would already be indexed.
    int rep = orbits.count();
    orbits.reps.push_back(c);
    std::vector<std::vector<int>> queue{c.ids};
    orbits.orbit_of.emplace(c.ids, rep);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      std::vector<int> current = queue[qi];
      for (const auto& action : poset.generator_action) {
        std::vector<int> image(current.size());
        for (size_t i = 0; i < current.size(); ++i) image[i] = action[current[i]];
        if (orbits.orbit_of.emplace(image, rep).second) queue.push_back(std::move(image));
      }
    }
    orbits.orbit_sizes.push_back(queue.size());
  }
  return orbits;
}

SubgroupRef chain_stabilizer(const GroupHandle& G, const PSubgroupPoset& poset,
                             const Chain& c) {
  SubgroupRef stab = SubgroupRef::whole_group(G);
  for (size_t i = 1; i < c.ids.size(); ++i)
    stab = intersect(stab, normalizer(G, poset.subgroups[c.ids[i]]));
  return stab;
}

Chain conjugate_chain(const PSubgroupPoset& poset, const Chain& c, const Perm& g) {
  Chain image;
  for (int id : c.ids) {
    int im = poset.id_of(poset.subgroups[id].conjugated_by(g).elements());
    CHAINLOCAL_CHECK(im >= 0, "conjugate subgroup missing from the poset");
    image.ids.push_back(im);
  }
  return image;
}

namespace {

bool normalizes(const SubgroupRef& a, const SubgroupRef& b) {
  // a normalizes b
  for (const Perm& g : a.generators())
    if (!b.conjugated_by(g).same_elements(b)) return false;
  return true;
}

}  // namespace

Chain chain_involution(const GroupHandle& G, const PSubgroupPoset& poset, const Chain& c,
                       int p_id) {
  const SubgroupRef& P = poset.subgroups[p_id];
  CHAINLOCAL_CHECK(!P.is_trivial(), "the involution needs a nontrivial p-subgroup");

  bool p_normalizes_all = true;
  bool all_normalize_p = true;
  for (int id : c.ids) {
    if (!normalizes(P, poset.subgroups[id])) p_normalizes_all = false;
    if (!normalizes(poset.subgroups[id], P)) all_normalize_p = false;
  }
  if (!p_normalizes_all && !all_normalize_p)
    throw DomainError("involution precondition: no mutual normalizing between P and the chain");

  // Largest m with P not contained in Q_m; exists since Q_0 is trivial.
  int m = -1;
  for (size_t i = 0; i < c.ids.size(); ++i)
    if (!poset.subgroups[c.ids[i]].contains_subgroup(P)) m = static_cast<int>(i);
  CHAINLOCAL_CHECK(m >= 0, "P is contained in the trivial group");

  // The literal product set Q_m P, checked to be a p-subgroup.
  std::vector<Perm> product;
  for (const Perm& q : poset.subgroups[c.ids[m]].elements())
    for (const Perm& x : P.elements()) product.push_back(q * x);
  std::sort(product.begin(), product.end());
  product.erase(std::unique(product.begin(), product.end()), product.end());
  int qp_id = poset.id_of(product);
  if (qp_id < 0) {
    try {
      SubgroupRef::from_elements(G, product);
    } catch (const DomainError&) {
      throw InternalError("Q_m P is not a subgroup");
    }
    throw InternalError("Q_m P is a p-subgroup missing from the poset");
  }

  Chain result = c;
  auto it = std::find(result.ids.begin(), result.ids.end(), qp_id);
  if (it != result.ids.end()) {
    result.ids.erase(it);
  } else {
    result.ids.insert(result.ids.begin() + m + 1, qp_id);
  }
  // Strictly increasing under inclusion.
  for (size_t i = 0; i + 1 < result.ids.size(); ++i)
    CHAINLOCAL_CHECK(poset.strictly_below[result.ids[i]][result.ids[i + 1]],
                     "involution produced a non-chain");
  CHAINLOCAL_CHECK(std::abs(result.length() - c.length()) == 1,
                   "involution changed the length by more than one");
  return result;
}

}  // namespace chainlocal
