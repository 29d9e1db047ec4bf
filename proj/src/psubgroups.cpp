#include "chainlocal/chains.hpp"

#include <algorithm>
#include <set>

namespace chainlocal {

int PSubgroupPoset::id_of(const std::vector<Perm>& sorted_elements) const {
  int lo = 0, hi = count();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    const auto& e = subgroups[mid].elements();
    if (e.size() < sorted_elements.size() ||
        (e.size() == sorted_elements.size() && e < sorted_elements))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count() && subgroups[lo].elements() == sorted_elements) return lo;
  return -1;
}

PSubgroupPoset enumerate_p_subgroups(const GroupHandle& G, int p) {
  CHAINLOCAL_CHECK(is_prime(p), "p must be prime");
  const std::uint64_t guard = G.limits().max_p_subgroups;

  PSubgroupPoset poset;
  poset.p = p;

  // All subgroups of a Sylow p-subgroup, found by closing generated
  // subgroups under one-element extensions, then closed under G-conjugation.
  SubgroupRef sylow = sylow_subgroup(G, p);
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> queue;
  auto push = [&](std::vector<Perm> elems) {
    if (seen.insert(elems).second) {
      CHAINLOCAL_CHECK(seen.size() <= guard,
                       "p-subgroup count guard exceeded at " +
                           std::to_string(seen.size()));
      queue.push_back(std::move(elems));
    }
  };
  push({Perm::identity(G.degree())});
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<Perm> current = queue[qi];
    bool inside_sylow =
        std::includes(sylow.elements().begin(), sylow.elements().end(),
                      current.begin(), current.end());
    if (inside_sylow && current.size() < sylow.order()) {
      for (const Perm& x : sylow.elements()) {
        if (std::binary_search(current.begin(), current.end(), x)) continue;
        std::vector<Perm> gens = current;
        gens.push_back(x);
        push(generate_closure(G.degree(), gens, sylow.order()));
      }
    }
    for (const Perm& g : G.generators()) {
      std::vector<Perm> conj;
      conj.reserve(current.size());
      for (const Perm& e : current) conj.push_back(e.conjugated_by(g));
      std::sort(conj.begin(), conj.end());
      push(std::move(conj));
    }
  }

  std::vector<std::vector<Perm>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& elems : sorted)
    poset.subgroups.push_back(SubgroupRef::from_elements(G, std::move(elems)));

  int n = poset.count();
  poset.strictly_below.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && poset.subgroups[j].contains_subgroup(poset.subgroups[i]))
        poset.strictly_below[i][j] = 1;

  for (const Perm& g : G.generators()) {
    std::vector<int> action(n);
    for (int i = 0; i < n; ++i) {
      int image = poset.id_of(poset.subgroups[i].conjugated_by(g).elements());
      CHAINLOCAL_CHECK(image >= 0, "poset not closed under conjugation");
      action[i] = image;
    }
    poset.generator_action.push_back(std::move(action));
  }

  poset.class_rep.assign(n, -1);
  poset.to_class_rep.assign(n, Perm::identity(G.degree()));
  for (int i = 0; i < n; ++i) {
    if (poset.class_rep[i] >= 0) continue;
    // BFS over the G-orbit, tracking conjugator witnesses back to i.
    std::vector<int> orbit{i};
    std::vector<Perm> from_rep{Perm::identity(G.degree())};
    poset.class_rep[i] = i;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (size_t gi = 0; gi < G.generators().size(); ++gi) {
        int image = poset.generator_action[gi][orbit[qi]];
        if (poset.class_rep[image] >= 0) continue;
        poset.class_rep[image] = i;
        Perm w = from_rep[qi] * G.generators()[gi];
        poset.to_class_rep[image] = w.inverse();
        orbit.push_back(image);
        from_rep.push_back(std::move(w));
      }
    }
  }
  return poset;
}

std::vector<int> radical_p_subgroups(const GroupHandle& G, const PSubgroupPoset& poset) {
  std::vector<int> radical;
  for (int i = 1; i < poset.count(); ++i) {
    SubgroupRef n = normalizer(G, poset.subgroups[i]);
    GroupHandle ng = n.to_group();
    if (p_core(ng, poset.p).elements() == poset.subgroups[i].elements())
      radical.push_back(i);
  }
  return radical;
}

}  // namespace chainlocal
