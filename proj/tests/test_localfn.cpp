#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainlocal/catalog.hpp"
#include "chainlocal/localfn.hpp"

using namespace chainlocal;

TEST_CASE("basic evaluators") {
  Engine eng(resolve_catalog("S3"), 2);
  const SubgroupData& amb = eng.ambient();
  CHECK(fn_constant(0).eval(eng, amb, 0) == 0);
  CHECK(fn_constant(-3).eval(eng, amb, 1) == -3);
  CHECK(fn_am().eval(eng, amb, 0) == 2);
  CHECK(fn_k1().eval(eng, amb, 0) == 2);

  Engine s4(resolve_catalog("S4"), 2);
  CHECK(s4.ambient().blocks->blocks[0].defect == 3);
  CHECK(fn_k1().eval(s4, s4.ambient(), 0) == 0);
}

TEST_CASE("am0 values") {
  Engine s3(resolve_catalog("S3"), 2);
  CHECK(fn_am0().eval(s3, s3.ambient(), 0) == 2);
  CHECK_THROWS_AS(fn_am0().eval(s3, s3.ambient(), 1), DomainError);

  Engine a5(resolve_catalog("A5"), 2);
  CHECK(fn_am0().eval(a5, a5.ambient(), 0) == 4);

  // normal defect group: am0 = am
  Engine d8(resolve_catalog("D8"), 2);
  CHECK(fn_am0().eval(d8, d8.ambient(), 0) == fn_am().eval(d8, d8.ambient(), 0));
}

TEST_CASE("random conjugacy-constant functions vanish when the p-core is nontrivial") {
  for (const char* name : {"S4", "A4", "D8", "Q8", "SL(2,3)"}) {
    Engine eng(resolve_catalog(name), 2);
    for (int i = 0; i < 5; ++i) {
      BlockFunction f = fn_random_conjugacy(12345, i);
      for (const ChainSumReport& r : verify_block_chain_local(eng, f, false))
        CHECK(r.total == 0);
    }
  }
}

TEST_CASE("constant functions are local on positive-defect blocks") {
  for (const char* name : {"S3", "S4", "A5"}) {
    for (int p : {2, 3}) {
      Engine eng(resolve_catalog(name), p);
      for (long long c : {-3LL, 0LL, 1LL, 7LL}) {
        for (const ChainSumReport& r :
             verify_block_chain_local(eng, fn_constant(c), true))
          CHECK(r.total == 0);
      }
    }
  }
}

TEST_CASE("am is local on positive-defect blocks") {
  for (const char* name : {"S3", "S4", "A4", "A5", "D12", "SL(2,3)"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      for (const ChainSumReport& r : verify_block_chain_local(eng, fn_am(), true)) {
        CHECK(r.total == 0);
        // the trivial chain contributes +am(G, B)
        CHECK(r.terms[0].sign == 1);
        CHECK(r.terms[0].summands == std::vector<int>{r.block});
        CHECK(r.terms[0].values[0] == fn_am().eval(eng, eng.ambient(), r.block));
      }
    }
  }
}

TEST_CASE("k1 is local on every block, any defect") {
  for (const char* name : {"S3", "S4", "A4", "A5", "Q8"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      for (const ChainSumReport& r : verify_block_chain_local(eng, fn_k1(), false))
        CHECK(r.total == 0);
    }
  }
}

TEST_CASE("omega_N values and locality") {
  Engine s3(resolve_catalog("S3"), 2);
  auto c2 = std::make_shared<GroupHandle>(GroupHandle(2, {parse_cycles("(0 1)", 2)}));
  CHECK(fn_omega_N(c2).eval(s3, s3.ambient(), 0) == 1);
  auto c4 = std::make_shared<GroupHandle>(GroupHandle(4, {parse_cycles("(0 1 2 3)", 4)}));
  CHECK(fn_omega_N(c4).eval(s3, s3.ambient(), 0) == 0);
  // O_p(N) = 1 forces 0: normalizers of defect groups have nontrivial p-core
  auto s3odd = std::make_shared<GroupHandle>(resolve_catalog("S3"));
  Engine s4(resolve_catalog("S4"), 2);
  CHECK(fn_omega_N(s3odd).eval(s4, s4.ambient(), 0) == 0);

  // locality for every N arising as some N_{G_C}(Q)
  for (const char* name : {"S3", "S4", "A4"}) {
    Engine eng(resolve_catalog(name), 2);
    const PSubgroupPoset& poset = eng.poset();
    for (int id = 1; id < poset.count(); ++id) {
      if (poset.class_rep[id] != id) continue;
      auto n = std::make_shared<GroupHandle>(
          normalizer(eng.group(), poset.subgroups[id]).to_group());
      for (const ChainSumReport& r :
           verify_block_chain_local(eng, fn_omega_N(n), true))
        CHECK(r.total == 0);
    }
  }
}

TEST_CASE("omega_PX values and locality") {
  Engine s3(resolve_catalog("S3"), 2);
  const Block& principal = s3.ambient().blocks->blocks[0];
  SubgroupRef d = *principal.defect_group;
  SubgroupRef x = normalizer(*s3.ambient().group, d);
  BlockFunction f = fn_omega_PX(d.elements(), x.elements());
  CHECK(f.eval(s3, s3.ambient(), 0) == 1);
  CHECK(f.eval(s3, s3.ambient(), 1) == 0);  // defect zero

  // P not conjugate to any defect group of B
  Engine s4(resolve_catalog("S4"), 2);
  SubgroupRef p2 = SubgroupRef::from_generators(s4.group(), {parse_cycles("(0 1)", 4)});
  SubgroupRef x2 = normalizer(s4.group(), p2);
  CHECK(fn_omega_PX(p2.elements(), x2.elements()).eval(s4, s4.ambient(), 0) == 0);

  // locality over every candidate (P, N_G(P)) class
  for (const char* name : {"S3", "S4", "A4"}) {
    Engine eng(resolve_catalog(name), 2);
    const PSubgroupPoset& poset = eng.poset();
    for (int id = 1; id < poset.count(); ++id) {
      if (poset.class_rep[id] != id) continue;
      SubgroupRef xn = normalizer(eng.group(), poset.subgroups[id]);
      BlockFunction fx = fn_omega_PX(poset.subgroups[id].elements(), xn.elements());
      for (const ChainSumReport& r : verify_block_chain_local(eng, fx, true))
        CHECK(r.total == 0);
    }
  }
}

TEST_CASE("normalizer sums") {
  // h = 0 gives 0
  Engine s4(resolve_catalog("S4"), 2);
  BlockFunction zero = fn_normalizer_sum(fn_constant(0), NormalizerSumMode::AllPSubgroups);
  CHECK(zero.eval(s4, s4.ambient(), 0) == 0);

  // p coprime to |H|: empty outer sum
  Engine s35(resolve_catalog("S3"), 5);
  BlockFunction f = fn_normalizer_sum(fn_constant(1), NormalizerSumMode::AllPSubgroups);
  CHECK(f.eval(s35, s35.ambient(), 0) == 0);

  // locality with random isomorphism-constant h, both modes
  for (const char* name : {"S3", "S4", "A4"}) {
    Engine eng(resolve_catalog(name), 2);
    for (int i = 0; i < 3; ++i) {
      for (auto mode :
           {NormalizerSumMode::AllPSubgroups, NormalizerSumMode::RadicalOnly}) {
        BlockFunction h = fn_normalizer_sum(fn_random_isomorphism(99, i), mode);
        for (const ChainSumReport& r : verify_block_chain_local(eng, h, false))
          CHECK(r.total == 0);
      }
    }
  }
}

TEST_CASE("am equality") {
  Engine s3(resolve_catalog("S3"), 2);
  auto reports = verify_am_equality(s3);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].am_g == 2);
  CHECK(reports[0].am_n == 2);
  CHECK(reports[0].equal);

  Engine a5(resolve_catalog("A5"), 2);
  auto a5r = verify_am_equality(a5);
  REQUIRE(!a5r.empty());
  CHECK(a5r[0].am_g == 4);
  CHECK(a5r[0].am_n == 4);
  for (const AmReport& r : a5r) CHECK(r.equal);
}

TEST_CASE("lemma f = g") {
  Engine s4(resolve_catalog("S4"), 2);
  FgReport same = verify_lemma_fg(s4, fn_am(), fn_am());
  CHECK(same.pass);

  FgReport consts = verify_lemma_fg(s4, fn_constant(1), fn_constant(2));
  CHECK(!consts.hypothesis_holds);
  CHECK(!consts.pass);
  CHECK(consts.conclusions.empty());

  FgReport am_vs_am0 = verify_lemma_fg(s4, fn_am(), fn_am0());
  CHECK(am_vs_am0.hypothesis_holds);
  CHECK(am_vs_am0.pass);
}

TEST_CASE("closure under sums, products and integer multiples") {
  Engine eng(resolve_catalog("S4"), 2);
  for (BlockFunction h :
       {fn_sum(fn_am(), fn_constant(7)), fn_product(fn_am(), fn_constant(7)),
        fn_scale(-4, fn_am()), fn_product(fn_am(), fn_k1())}) {
    for (const ChainSumReport& r : verify_block_chain_local(eng, h, true))
      CHECK(r.total == 0);
  }
}

TEST_CASE("g_N counts and group-level alternating sum") {
  GroupHandle s3 = resolve_catalog("S3");
  CHECK(g_N_value(s3, resolve_catalog("S3"), 3, false) == 1);
  // O_p(N) = 1 forces 0
  CHECK(g_N_value(resolve_catalog("S4"), resolve_catalog("S3"), 2, false) == 0);

  for (const char* name : {"S3", "S4", "A4", "D8"}) {
    GroupHandle g = resolve_catalog(name);
    for (int p : {2, 3}) {
      if (g.order() % p != 0) continue;
      Engine eng(resolve_catalog(name), p);
      // every isomorphism type arising as a normalizer of a nontrivial
      // p-subgroup, plus one that does not arise
      std::vector<std::shared_ptr<GroupHandle>> types;
      const PSubgroupPoset& poset = eng.poset();
      for (int id = 1; id < poset.count(); ++id) {
        if (poset.class_rep[id] != id) continue;
        types.push_back(std::make_shared<GroupHandle>(
            normalizer(eng.group(), poset.subgroups[id]).to_group()));
      }
      for (const auto& n : types) {
        GroupSumReport r = alternating_group_sum(eng, [&](const GroupHandle& h) {
          return g_N_value(h, *n, eng.p(), false);
        });
        CHECK(r.signed_total == 0);
      }
    }
  }
}

TEST_CASE("seeded functions are deterministic across engines") {
  long long first = 0;
  for (int round = 0; round < 2; ++round) {
    Engine eng(resolve_catalog("S4"), 2);
    BlockFunction f = fn_random_conjugacy(777, 3);
    ChainSumReport r = alternating_chain_sum(eng, 0, f);
    long long probe = 0;
    for (const ChainTerm& t : r.terms)
      for (size_t i = 0; i < t.values.size(); ++i) probe = probe * 31 + t.values[i];
    if (round == 0)
      first = probe;
    else
      CHECK(probe == first);
    CHECK(r.total == 0);  // O_2(S4) > 1
  }
}
