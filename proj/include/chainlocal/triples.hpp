#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chainlocal/engine.hpp"

namespace chainlocal {

// (C, P, X) with P a nontrivial p-subgroup of G_C. The third component is
// always X = N_{G_C}(P), so it is determined by the first two and stored
// implicitly as the poset id of P.
struct NormalisingTriple {
  Chain chain;
  int p_id = -1;

  bool operator==(const NormalisingTriple& o) const {
    return chain == o.chain && p_id == o.p_id;
  }
  bool operator<(const NormalisingTriple& o) const {
    if (!(chain == o.chain)) return chain < o.chain;
    return p_id < o.p_id;
  }
};

struct TripleOrbit {
  NormalisingTriple rep;
  std::uint64_t size = 0;
  int sign = 0;  // (-1)^{|C|}
};

// Accepts (chain, P id); must be G-invariant.
using TripleFilter = std::function<bool(const Chain&, int)>;

TripleFilter accept_all_triples();

struct TripleOrbitSet {
  std::vector<TripleOrbit> orbits;
  std::map<std::pair<std::vector<int>, int>, int> orbit_of;  // (chain ids, P id)

  int count() const { return static_cast<int>(orbits.size()); }
};

TripleOrbitSet enumerate_triple_orbits(Engine& eng, const TripleFilter& filter);

NormalisingTriple triple_involution(Engine& eng, const NormalisingTriple& t);

// Orbit index -> partner orbit index under the involution. Throws if the
// orbit set is not involution-stable.
std::vector<int> orbit_pairing(Engine& eng, const TripleOrbitSet& orbits);

struct TauReport {
  int chain_rep = -1;
  int gc_orbit_count = 0;       // G_C-orbits on the pairs (Q, N_{G_C}(Q))
  int g_orbit_count = 0;        // G-orbits of triples with C as first component
  bool injective = false;
  bool surjective = false;
  bool pass = false;
  std::vector<std::string> witnesses;
};

TauReport verify_tau_bijection(Engine& eng, const TripleOrbitSet& orbits,
                               const TripleFilter& filter, int chain_rep);

// Lemma-style star correspondent: the unique block bstar of G_{C*} with
// Br_P(e_bstar) = Br_P(e_b), for b a positive-defect block of G_C with
// defect group P and b^G = B.
struct StarBlock {
  Chain star_chain;
  int block = -1;
};
StarBlock star_block_correspondent(Engine& eng, int ambient_block, const Chain& c,
                                   int block_of_stab, int p_id);

}  // namespace chainlocal
