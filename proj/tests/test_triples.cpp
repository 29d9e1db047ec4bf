#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <numeric>

#include "chainlocal/catalog.hpp"
#include "chainlocal/triples.hpp"

using namespace chainlocal;

TEST_CASE("empty filter gives no orbits") {
  Engine eng(resolve_catalog("S3"), 2);
  TripleOrbitSet orbits =
      enumerate_triple_orbits(eng, [](const Chain&, int) { return false; });
  CHECK(orbits.count() == 0);
  CHECK(orbits.orbit_of.empty());
}

TEST_CASE("S3 triples at p = 2") {
  Engine eng(resolve_catalog("S3"), 2);
  TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
  // one orbit of (trivial chain, C2) and one of ({1 < C2}, the same C2)
  REQUIRE(orbits.count() == 2);
  CHECK(orbits.orbits[0].rep.chain.ids == std::vector<int>{0});
  CHECK(orbits.orbits[0].size == 3);
  CHECK(orbits.orbits[0].sign == 1);
  CHECK(orbits.orbits[1].rep.chain.ids == std::vector<int>{0, 1});
  CHECK(orbits.orbits[1].rep.p_id == 1);
  CHECK(orbits.orbits[1].size == 3);
  CHECK(orbits.orbits[1].sign == -1);
  // the three (C0, C2, C2) triples are in one orbit
  for (int pid = 1; pid <= 3; ++pid)
    CHECK(orbits.orbit_of.at({std::vector<int>{0}, pid}) == 0);

  std::vector<int> pairing = orbit_pairing(eng, orbits);
  CHECK(pairing == std::vector<int>{1, 0});
}

TEST_CASE("orbit sizes sum to the number of triples") {
  for (const char* name : {"S3", "S4", "A4", "D8"}) {
    Engine eng(resolve_catalog(name), 2);
    TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
    std::uint64_t total = 0;
    for (const TripleOrbit& o : orbits.orbits) total += o.size;
    CHECK(total == orbits.orbit_of.size());
  }
}

TEST_CASE("triple involution is an involution and fixes X") {
  for (const char* name : {"S3", "S4", "A4", "D8", "Q8"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
      for (const auto& [key, idx] : orbits.orbit_of) {
        NormalisingTriple t{Chain{key.first}, key.second};
        NormalisingTriple star = triple_involution(eng, t);
        CHECK(star.p_id == t.p_id);
        CHECK(std::abs(star.chain.length() - t.chain.length()) == 1);
        CHECK(triple_involution(eng, star) == t);
      }
    }
  }
}

TEST_CASE("involution equivariance on triples") {
  for (const char* name : {"S3", "S4"}) {
    GroupHandle g0 = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g0.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      const PSubgroupPoset& poset = eng.poset();
      TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
      for (const TripleOrbit& o : orbits.orbits) {
        for (size_t gi = 0; gi < eng.group().generators().size(); ++gi) {
          const auto& action = poset.generator_action[gi];
          NormalisingTriple star = triple_involution(eng, o.rep);
          NormalisingTriple conj{
              conjugate_chain(poset, o.rep.chain, eng.group().generators()[gi]),
              action[o.rep.p_id]};
          NormalisingTriple lhs{
              conjugate_chain(poset, star.chain, eng.group().generators()[gi]),
              action[star.p_id]};
          CHECK(triple_involution(eng, conj) == lhs);
        }
      }
    }
  }
}

TEST_CASE("orbit pairing is a perfect sign-reversing matching") {
  for (const char* name : {"S3", "S4", "A4", "A5", "D8", "Q8", "SL(2,3)"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
      std::vector<int> pairing = orbit_pairing(eng, orbits);
      long long signed_total = 0;
      for (const TripleOrbit& o : orbits.orbits) signed_total += o.sign;
      CHECK(signed_total == 0);
      long long signed_sizes = 0;
      for (const TripleOrbit& o : orbits.orbits)
        signed_sizes += o.sign * static_cast<long long>(o.size);
      CHECK(signed_sizes == 0);
      for (int i = 0; i < orbits.count(); ++i) CHECK(pairing[pairing[i]] == i);
    }
  }
}

TEST_CASE("tau bijection") {
  for (const char* name : {"S3", "S4", "A4", "D8"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
      for (int r = 0; r < eng.chain_orbits().count(); ++r) {
        TauReport report = verify_tau_bijection(eng, orbits, accept_all_triples(), r);
        CHECK(report.pass);
        CHECK(report.gc_orbit_count == report.g_orbit_count);
      }
    }
  }
}

TEST_CASE("star block correspondent for S3 at p = 2") {
  Engine eng(resolve_catalog("S3"), 2);
  const PSubgroupPoset& poset = eng.poset();
  // B = principal block; C = trivial chain; b = B itself; P = <(0 1)>
  Chain trivial{{0}};
  int pid = poset.id_of(
      SubgroupRef::from_generators(eng.group(), {parse_cycles("(0 1)", 3)}).elements());
  REQUIRE(pid >= 0);
  StarBlock star = star_block_correspondent(eng, 0, trivial, 0, pid);
  CHECK(star.star_chain.ids == std::vector<int>{0, pid});
  CHECK(star.block == 0);  // unique block of C2
  SubgroupRef stab = chain_stabilizer(eng.group(), poset, star.star_chain);
  CHECK(stab.order() == 2);

  StarBlock back = star_block_correspondent(eng, 0, star.star_chain, star.block, pid);
  CHECK(back.star_chain == trivial);
  CHECK(back.block == 0);

  // defect zero rejected
  CHECK_THROWS_AS(star_block_correspondent(eng, 1, trivial, 1, pid), DomainError);
}

TEST_CASE("star block correspondent is an involution on its domain") {
  for (const char* name : {"S3", "S4", "A4", "D8", "Q8"}) {
    GroupHandle g0 = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g0.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      const PSubgroupPoset& poset = eng.poset();
      const ChainOrbitSet& chains = eng.chain_orbits();
      for (int r = 0; r < chains.count(); ++r) {
        const Chain& c = chains.reps[r];
        const SubgroupData& data = eng.data_for(eng.stabilizer(r).elements());
        for (int b = 0; b < data.blocks->count(); ++b) {
          const Block& blk = data.blocks->blocks[b];
          if (blk.defect == 0) continue;
          auto induced = block_induction(*eng.ambient().blocks, *data.blocks, b);
          if (!induced.has_value()) continue;
          int pid = poset.id_of(blk.defect_group->elements());
          REQUIRE(pid >= 0);
          StarBlock star = star_block_correspondent(eng, *induced, c, b, pid);
          StarBlock back =
              star_block_correspondent(eng, *induced, star.star_chain, star.block, pid);
          CHECK(back.star_chain == c);
          CHECK(back.block == b);
        }
      }
    }
  }
}
