#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chainlocal/catalog.hpp"
#include "chainlocal/report.hpp"

using namespace chainlocal;

// Every criterion accumulates into `ok` and ends with one printed verdict
// line, so the suite output doubles as the acceptance report.
#define REC(cond)                       \
  do {                                  \
    bool rec_v = static_cast<bool>(cond); \
    CHECK(rec_v);                       \
    ok = ok && rec_v;                   \
  } while (0)

namespace {

void verdict(int id, const char* label, bool ok) {
  std::printf("[criterion %02d] %s: %s\n", id, label, ok ? "PASS" : "FAIL");
  std::fflush(stdout);
}

std::vector<std::pair<std::string, int>> catalog_pairs() {
  std::vector<std::pair<std::string, int>> out;
  for (const std::string& name : catalog_names()) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3, 5})
      if (g.order() % p == 0) out.emplace_back(name, p);
  }
  return out;
}

// One engine per (group, prime), shared by all criteria so posets, chain
// orbits and subgroup block data are computed once.
Engine& engine_for(const std::string& name, int p) {
  static std::map<std::pair<std::string, int>, std::unique_ptr<Engine>> cache;
  auto key = std::make_pair(name, p);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Engine>(resolve_catalog(name), p)).first;
  return *it->second;
}

using BlockRecord = std::tuple<std::vector<long long>, int, long long, int, int, bool>;

std::vector<BlockRecord> canonical_records(Engine& eng) {
  const SubgroupData& amb = eng.ambient();
  std::vector<BlockRecord> records;
  for (int b = 0; b < amb.blocks->count(); ++b) {
    const Block& blk = amb.blocks->blocks[b];
    std::vector<long long> degrees;
    for (int chi : blk.chars) degrees.push_back(amb.table->degrees[chi]);
    std::sort(degrees.begin(), degrees.end());
    records.emplace_back(degrees, blk.defect,
                         static_cast<long long>(blk.defect_group->order()),
                         height_zero_count(*amb.blocks, b),
                         defect_one_count(*amb.blocks, b), blk.principal);
  }
  std::sort(records.begin(), records.end(),
            [](const BlockRecord& a, const BlockRecord& b) {
              return std::tie(std::get<0>(a), std::get<1>(a), std::get<3>(a),
                              std::get<4>(a), std::get<5>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b), std::get<3>(b),
                              std::get<4>(b), std::get<5>(b));
            });
  return records;
}

}  // namespace

TEST_CASE("criterion 1: exact character tables") {
  bool ok = true;
  for (const std::string& name : catalog_names()) {
    auto t0 = std::chrono::steady_clock::now();
    GroupHandle g = resolve_catalog(name);
    CharacterTable t = compute_character_table(g);
    REC(t.count() == g.classes().count());
    long long sq = 0;
    for (long long d : t.degrees) sq += d * d;
    REC(sq == static_cast<long long>(g.order()));
    int k = t.count();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Cyclotomic row;
        for (int c = 0; c < k; ++c)
          row = row + t.values[i][c] * t.values[j][c].conjugate() *
                          static_cast<long long>(t.class_sizes[c]);
        REC(row == Cyclotomic::integer(i == j ? static_cast<long long>(g.order()) : 0));
        Cyclotomic col;
        for (int r = 0; r < k; ++r) col = col + t.values[r][i] * t.values[r][j].conjugate();
        long long expect =
            i == j ? static_cast<long long>(g.order() / t.class_sizes[i]) : 0;
        REC(col == Cyclotomic::integer(expect));
      }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    REC(elapsed < 10000);
  }
  verdict(1, "exact character tables with both orthogonality relations", ok);
}

TEST_CASE("criterion 2: block data matches the independent fixtures") {
  bool ok = true;
  std::ifstream in(std::string(CHAINLOCAL_FIXTURES_DIR) + "/block_fixtures.json");
  REQUIRE(in.good());
  Json fixtures = Json::parse(in);
  REC(fixtures.size() == 9);
  for (const auto& [group, by_prime] : fixtures.items()) {
    for (const auto& [prime, expected] : by_prime.items()) {
      std::vector<BlockRecord> got = canonical_records(engine_for(group, std::stoi(prime)));
      REC(expected.size() == got.size());
      if (expected.size() != got.size()) continue;
      for (size_t i = 0; i < got.size(); ++i) {
        const Json& e = expected[i];
        REC(e["degrees"].get<std::vector<long long>>() == std::get<0>(got[i]));
        REC(e["defect"].get<int>() == std::get<1>(got[i]));
        REC(e["defect_group_order"].get<long long>() == std::get<2>(got[i]));
        REC(e["am"].get<int>() == std::get<3>(got[i]));
        REC(e["k1"].get<int>() == std::get<4>(got[i]));
        REC(e["principal"].get<bool>() == std::get<5>(got[i]));
      }
    }
  }
  verdict(2, "block invariants agree with independently computed fixtures", ok);
}

TEST_CASE("criterion 3: am(B) equals am of the Brauer correspondent") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    std::vector<AmReport> reports = verify_am_equality(engine_for(name, p));
    REC(!reports.empty());  // the principal block has positive defect
    for (const AmReport& r : reports) {
      REC(r.equal);
      REC(r.am_g == r.am_n);
    }
  }
  verdict(3, "height-zero counts match at the defect-group normalizer", ok);
}

TEST_CASE("criterion 4: am is block chain local") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs())
    for (const ChainSumReport& r :
         verify_block_chain_local(engine_for(name, p), fn_am(), true))
      REC(r.total == 0);
  verdict(4, "alternating chain sums of am vanish on positive-defect blocks", ok);
}

TEST_CASE("criterion 5: random conjugacy-constant functions when O_p(G) > 1") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    if (p_core(eng.group(), p).order() == 1) continue;
    for (int i = 0; i < 100; ++i) {
      BlockFunction f = fn_random_conjugacy(0xC0FFEEu, i);
      for (const ChainSumReport& r : verify_block_chain_local(eng, f, false))
        REC(r.total == 0);
    }
  }
  verdict(5, "100 random conjugacy-constant functions are local when O_p(G) > 1", ok);
}

TEST_CASE("criterion 6: the indicator functions omega_N and omega_PX") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    const PSubgroupPoset& poset = eng.poset();
    for (int id = 1; id < poset.count(); ++id) {
      if (poset.class_rep[id] != id) continue;
      SubgroupRef n = normalizer(eng.group(), poset.subgroups[id]);
      BlockFunction omega_n = fn_omega_N(std::make_shared<GroupHandle>(n.to_group()));
      for (const ChainSumReport& r : verify_block_chain_local(eng, omega_n, true))
        REC(r.total == 0);
      BlockFunction omega_px =
          fn_omega_PX(poset.subgroups[id].elements(), n.elements());
      for (const ChainSumReport& r : verify_block_chain_local(eng, omega_px, true))
        REC(r.total == 0);
    }
  }
  verdict(6, "omega_N and omega_PX are local for every (P, N_G(P)) class", ok);
}

TEST_CASE("criterion 7: constants and closure combinations") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    for (long long c : {-3LL, 0LL, 1LL, 7LL})
      for (const ChainSumReport& r :
           verify_block_chain_local(eng, fn_constant(c), true))
        REC(r.total == 0);
    // sums and integer multiples of local functions stay local
    BlockFunction combo = fn_sum(fn_am(), fn_scale(-2, fn_k1()));
    for (const ChainSumReport& r : verify_block_chain_local(eng, combo, true))
      REC(r.total == 0);
    // products of conjugacy-constant functions, under the O_p(G) > 1 theorem
    if (p_core(eng.group(), p).order() > 1) {
      BlockFunction prod = fn_product(fn_am(), fn_k1());
      BlockFunction seeded =
          fn_sum(fn_product(fn_random_conjugacy(17, 0), fn_random_conjugacy(17, 1)),
                 fn_scale(5, fn_random_conjugacy(17, 2)));
      for (const BlockFunction& f : {prod, seeded})
        for (const ChainSumReport& r : verify_block_chain_local(eng, f, false))
          REC(r.total == 0);
    }
  }
  verdict(7, "constant functions and closure combinations are local", ok);
}

TEST_CASE("criterion 8: normalizer sums of isomorphism-constant functions") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    for (int i = 0; i < 20; ++i) {
      BlockFunction h = fn_random_isomorphism(0xFEEDu, i);
      for (NormalizerSumMode mode :
           {NormalizerSumMode::AllPSubgroups, NormalizerSumMode::RadicalOnly}) {
        BlockFunction f = fn_normalizer_sum(h, mode);
        for (const ChainSumReport& r : verify_block_chain_local(eng, f, true))
          REC(r.total == 0);
      }
    }
  }
  verdict(8, "20 seeded normalizer-sum functions are local in both modes", ok);
}

TEST_CASE("criterion 9: k1 vanishes in the alternating sum and off defect one") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    for (const ChainSumReport& r : verify_block_chain_local(eng, fn_k1(), false))
      REC(r.total == 0);
    const SubgroupData& amb = eng.ambient();
    for (int b = 0; b < amb.blocks->count(); ++b)
      if (amb.blocks->blocks[b].defect != 1)
        REC(defect_one_count(*amb.blocks, b) == 0);
  }
  verdict(9, "k1 sums vanish on all blocks and k1 is zero off defect one", ok);
}

TEST_CASE("criterion 10: involution, pairing, tau and star blocks") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    if (p == 5) continue;  // no interesting 5-chains in the catalog beyond length 1
    Engine& eng = engine_for(name, p);
    const PSubgroupPoset& poset = eng.poset();
    TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());

    // the involution and its equivariance, on every single triple
    for (const auto& [key, idx] : orbits.orbit_of) {
      NormalisingTriple t{Chain{key.first}, key.second};
      NormalisingTriple star = triple_involution(eng, t);
      REC(star.p_id == t.p_id);
      REC(star.chain.length() == t.chain.length() + 1 ||
          star.chain.length() == t.chain.length() - 1);
      REC(triple_involution(eng, star) == t);
      for (size_t gi = 0; gi < eng.group().generators().size(); ++gi) {
        const Perm& g = eng.group().generators()[gi];
        NormalisingTriple conj{conjugate_chain(poset, t.chain, g),
                               poset.generator_action[gi][t.p_id]};
        NormalisingTriple conj_star{conjugate_chain(poset, star.chain, g),
                                    poset.generator_action[gi][star.p_id]};
        REC(triple_involution(eng, conj) == conj_star);
      }
    }

    // perfect sign-reversing matching on orbits
    std::vector<int> pairing = orbit_pairing(eng, orbits);
    long long signed_orbits = 0, signed_triples = 0;
    for (int i = 0; i < orbits.count(); ++i) {
      REC(pairing[i] != i);
      REC(pairing[pairing[i]] == i);
      REC(orbits.orbits[i].sign == -orbits.orbits[pairing[i]].sign);
      REC(orbits.orbits[i].size == orbits.orbits[pairing[i]].size);
      signed_orbits += orbits.orbits[i].sign;
      signed_triples += orbits.orbits[i].sign *
                        static_cast<long long>(orbits.orbits[i].size);
    }
    REC(signed_orbits == 0);
    REC(signed_triples == 0);

    // tau for every chain orbit representative
    const ChainOrbitSet& chains = eng.chain_orbits();
    for (int r = 0; r < chains.count(); ++r) {
      TauReport tau = verify_tau_bijection(eng, orbits, accept_all_triples(), r);
      REC(tau.pass);
      REC(tau.gc_orbit_count == tau.g_orbit_count);
    }

    // star blocks: existence, uniqueness (built into the computation),
    // defect matching and the double-star identity
    for (int r = 0; r < chains.count(); ++r) {
      const Chain& c = chains.reps[r];
      const SubgroupData& data = eng.data_for(eng.stabilizer(r).elements());
      for (int b = 0; b < data.blocks->count(); ++b) {
        const Block& blk = data.blocks->blocks[b];
        if (blk.defect == 0) continue;
        auto induced = block_induction(*eng.ambient().blocks, *data.blocks, b);
        if (!induced.has_value()) continue;
        int pid = poset.id_of(blk.defect_group->elements());
        REC(pid >= 1);
        StarBlock star = star_block_correspondent(eng, *induced, c, b, pid);
        const SubgroupData& star_data = eng.data_for(
            chain_stabilizer(eng.group(), poset, star.star_chain).elements());
        const Block& star_blk = star_data.blocks->blocks[star.block];
        REC(star_blk.defect_group->order() == blk.defect_group->order());
        REC(block_induction(*eng.ambient().blocks, *star_data.blocks, star.block) ==
            induced);
        StarBlock back =
            star_block_correspondent(eng, *induced, star.star_chain, star.block, pid);
        REC(back.star_chain == c);
        REC(back.block == b);
      }
    }
  }
  verdict(10, "triple involution, sign-reversing pairing, tau and star blocks", ok);
}

TEST_CASE("criterion 11: Brauer summands are exactly the blocks inducing to B") {
  bool ok = true;
  for (const auto& [name, p] : catalog_pairs()) {
    Engine& eng = engine_for(name, p);
    const PSubgroupPoset& poset = eng.poset();
    const ChainOrbitSet& chains = eng.chain_orbits();
    for (int r = 1; r < chains.count(); ++r) {
      const Chain& c = chains.reps[r];
      const SubgroupRef& top = poset.subgroups[c.top()];
      const SubgroupData& data = eng.data_for(eng.stabilizer(r).elements());
      // C_G(top) <= G_C <= N_G(top), so induction from G_C is always defined
      std::vector<std::optional<int>> induced;
      for (int b = 0; b < data.blocks->count(); ++b) {
        induced.push_back(block_induction(*eng.ambient().blocks, *data.blocks, b));
        REC(induced.back().has_value());
      }
      for (int B = 0; B < eng.ambient().blocks->count(); ++B) {
        BCDecomposition dec = bc_summands(*eng.ambient().blocks, B, top, *data.blocks);
        for (int b = 0; b < data.blocks->count(); ++b) {
          bool in_summands = std::find(dec.summands.begin(), dec.summands.end(), b) !=
                             dec.summands.end();
          REC(in_summands == (induced[b] == std::optional<int>(B)));
        }
      }
    }
  }
  verdict(11, "Brauer decomposition matches block induction on every chain", ok);
}

TEST_CASE("criterion 12: identical seeds give identical reports") {
  bool ok = true;
  auto bundle = [](std::uint64_t seed) {
    Engine eng(resolve_catalog("S4"), 2);
    std::vector<ChainSumReport> reports;
    for (int i = 0; i < 3; ++i) {
      auto part = verify_block_chain_local(eng, fn_random_conjugacy(seed, i), false);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    Json out;
    out["blocks"] = block_records("S4", eng);
    out["chains"] = chain_records(eng);
    TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
    out["triples"] = triple_records(eng, orbits, orbit_pairing(eng, orbits));
    out["local"] = localfn_bundle("S4", 2, "random", reports);
    return out.dump(2);
  };
  std::string a = bundle(42), b = bundle(42), c = bundle(43);
  REC(!a.empty());
  REC(a == b);
  REC(a != c);
  verdict(12, "full report bundles are byte-identical for equal seeds", ok);
}
