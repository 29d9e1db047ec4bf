#include "chainlocal/localfn.hpp"

#include <algorithm>
#include <map>

namespace chainlocal {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_perms(const std::vector<Perm>& perms) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (const Perm& g : perms)
    for (int i = 0; i < g.degree(); ++i) h = splitmix64(h ^ static_cast<std::uint64_t>(g[i]));
  return h;
}

// Small signed value from an arbitrary key hash.
long long value_from_hash(std::uint64_t h) {
  return static_cast<long long>(h % 19) - 9;
}

// Block id of the conjugate of block b under the witness taking data.group
// onto the canonical conjugate; identified through the transported lambda
// vector, which determines the block.
int canonical_block_id(Engine& eng, const SubgroupData& data, int b) {
  const Engine::CanonicalSubgroup& canon =
      eng.canonical_subgroup(data.group->elements());
  if (canon.elements == data.group->elements()) return b;
  const SubgroupData& cdata = eng.data_for(canon.elements);
  const ConjClassTable& cclasses = cdata.group->classes();
  Perm back = canon.witness.inverse();
  std::vector<std::uint32_t> target(cclasses.count());
  for (int j = 0; j < cclasses.count(); ++j) {
    Perm pre = cclasses.reps[j].conjugated_by(back);
    target[j] = data.blocks->blocks[b].lambda[data.group->class_of(pre)];
  }
  int found = -1;
  for (int c = 0; c < cdata.blocks->count(); ++c) {
    if (cdata.blocks->blocks[c].lambda != target) continue;
    CHAINLOCAL_CHECK(found < 0, "transported lambda matches two blocks");
    found = c;
  }
  CHAINLOCAL_CHECK(found >= 0, "transported lambda matches no block");
  return found;
}

}  // namespace

BlockFunction fn_am() {
  return BlockFunction{"am", false,
                       [](Engine&, const SubgroupData& data, int b) -> long long {
                         return height_zero_count(*data.blocks, b);
                       }};
}

BlockFunction fn_k1() {
  return BlockFunction{"k1", false,
                       [](Engine&, const SubgroupData& data, int b) -> long long {
                         return defect_one_count(*data.blocks, b);
                       }};
}

BlockFunction fn_constant(long long c) {
  return BlockFunction{"const:" + std::to_string(c), false,
                       [c](Engine&, const SubgroupData&, int) -> long long { return c; }};
}

BlockFunction fn_am0() {
  return BlockFunction{
      "am0", false, [](Engine& eng, const SubgroupData& data, int b) -> long long {
        if (data.blocks->blocks[b].defect == 0)
          throw DomainError("am0 needs positive defect");
        BrauerCorrespondent bc = brauer_correspondent_in(eng, data, b);
        return height_zero_count(*eng.data_for(bc.normalizer.elements()).blocks,
                                 bc.block);
      }};
}

BlockFunction fn_omega_N(std::shared_ptr<GroupHandle> N) {
  return BlockFunction{
      "omegaN", false,
      [N](Engine&, const SubgroupData& data, int b) -> long long {
        const Block& blk = data.blocks->blocks[b];
        if (blk.defect == 0) return 0;
        SubgroupRef m = normalizer(*data.group, *blk.defect_group);
        if (m.order() != N->order()) return 0;
        return is_isomorphic(m.to_group(), *N) ? 1 : 0;
      }};
}

BlockFunction fn_omega_PX(std::vector<Perm> p_elements, std::vector<Perm> x_elements) {
  return BlockFunction{
      "omegaPX", true,
      [p_elements, x_elements](Engine& eng, const SubgroupData& data,
                               int b) -> long long {
        const Block& blk = data.blocks->blocks[b];
        if (blk.defect == 0) return 0;
        if (blk.defect_group->order() != p_elements.size()) return 0;
        // all defect groups of b are H-conjugate: the pairs (Q, N_H(Q)) form
        // one H-orbit, so the count is 0 or 1
        const std::vector<Perm>& d = blk.defect_group->elements();
        std::vector<Perm> y = normalizer(*data.group, *blk.defect_group).elements();
        if (y.size() != x_elements.size()) return 0;
        auto conj_sorted = [](const std::vector<Perm>& set, const Perm& g) {
          std::vector<Perm> out;
          out.reserve(set.size());
          for (const Perm& x : set) out.push_back(x.conjugated_by(g));
          std::sort(out.begin(), out.end());
          return out;
        };
        for (const Perm& g : eng.group().elements()) {
          if (conj_sorted(d, g) != p_elements) continue;
          if (conj_sorted(y, g) == x_elements) return 1;
        }
        return 0;
      }};
}

BlockFunction fn_normalizer_sum(BlockFunction h, NormalizerSumMode mode) {
  auto posets =
      std::make_shared<std::map<std::vector<Perm>,
                                std::shared_ptr<std::pair<PSubgroupPoset, std::vector<int>>>>>();
  std::string name = "normsum[" + h.name + "]" +
                     (mode == NormalizerSumMode::RadicalOnly ? ":radical" : "");
  auto hh = std::make_shared<BlockFunction>(std::move(h));
  return BlockFunction{
      name, hh->conjugacy_constant_only,
      [hh, posets, mode](Engine& eng, const SubgroupData& data, int b) -> long long {
        auto it = posets->find(data.group->elements());
        if (it == posets->end()) {
          auto entry = std::make_shared<std::pair<PSubgroupPoset, std::vector<int>>>();
          entry->first = enumerate_p_subgroups(*data.group, eng.p());
          entry->second = radical_p_subgroups(*data.group, entry->first);
          it = posets->emplace(data.group->elements(), std::move(entry)).first;
        }
        const PSubgroupPoset& poset = it->second->first;
        const std::vector<int>& radical = it->second->second;
        long long total = 0;
        for (int id = 1; id < poset.count(); ++id) {
          if (poset.class_rep[id] != id) continue;
          if (mode == NormalizerSumMode::RadicalOnly &&
              std::find(radical.begin(), radical.end(), id) == radical.end())
            continue;
          SubgroupRef m = normalizer(*data.group, poset.subgroups[id]);
          const SubgroupData& mdata = eng.data_for(m.elements());
          for (int c = 0; c < mdata.blocks->count(); ++c)
            if (block_induction(*data.blocks, *mdata.blocks, c) == b)
              total += hh->eval(eng, mdata, c);
        }
        return total;
      }};
}

BlockFunction fn_random_conjugacy(std::uint64_t seed, int index) {
  std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  return BlockFunction{
      "random:conj:" + std::to_string(index), true,
      [base](Engine& eng, const SubgroupData& data, int b) -> long long {
        const Engine::CanonicalSubgroup& canon =
            eng.canonical_subgroup(data.group->elements());
        std::uint64_t key = hash_perms(canon.elements);
        key = splitmix64(key ^ static_cast<std::uint64_t>(canonical_block_id(eng, data, b)));
        return value_from_hash(splitmix64(base ^ key));
      }};
}

BlockFunction fn_random_isomorphism(std::uint64_t seed, int index) {
  std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) + 0x51ed270b9ULL));
  return BlockFunction{
      "random:iso:" + std::to_string(index), false,
      [base](Engine&, const SubgroupData& data, int b) -> long long {
        std::uint64_t key = 0x9d9f0d81cb1aabcdULL;
        for (std::uint64_t v : iso_fingerprint(*data.group)) key = splitmix64(key ^ v);
        const Block& blk = data.blocks->blocks[b];
        std::vector<std::uint64_t> degrees;
        for (int chi : blk.chars)
          degrees.push_back(static_cast<std::uint64_t>(data.table->degrees[chi]));
        std::sort(degrees.begin(), degrees.end());
        for (std::uint64_t d : degrees) key = splitmix64(key ^ (d + 1));
        key = splitmix64(key ^ static_cast<std::uint64_t>(blk.defect));
        key = splitmix64(key ^ blk.defect_group->order());
        key = splitmix64(key ^ static_cast<std::uint64_t>(blk.principal ? 3 : 5));
        return value_from_hash(splitmix64(base ^ key));
      }};
}

BlockFunction fn_sum(BlockFunction f, BlockFunction g) {
  auto ff = std::make_shared<BlockFunction>(std::move(f));
  auto gg = std::make_shared<BlockFunction>(std::move(g));
  return BlockFunction{"(" + ff->name + "+" + gg->name + ")",
                       ff->conjugacy_constant_only || gg->conjugacy_constant_only,
                       [ff, gg](Engine& eng, const SubgroupData& d, int b) {
                         return ff->eval(eng, d, b) + gg->eval(eng, d, b);
                       }};
}

BlockFunction fn_product(BlockFunction f, BlockFunction g) {
  auto ff = std::make_shared<BlockFunction>(std::move(f));
  auto gg = std::make_shared<BlockFunction>(std::move(g));
  return BlockFunction{"(" + ff->name + "*" + gg->name + ")",
                       ff->conjugacy_constant_only || gg->conjugacy_constant_only,
                       [ff, gg](Engine& eng, const SubgroupData& d, int b) {
                         return ff->eval(eng, d, b) * gg->eval(eng, d, b);
                       }};
}

BlockFunction fn_scale(long long n, BlockFunction f) {
  auto ff = std::make_shared<BlockFunction>(std::move(f));
  return BlockFunction{std::to_string(n) + "*" + ff->name, ff->conjugacy_constant_only,
                       [ff, n](Engine& eng, const SubgroupData& d, int b) {
                         return n * ff->eval(eng, d, b);
                       }};
}

ChainSumReport alternating_chain_sum(Engine& eng, int block, const BlockFunction& f) {
  const ChainOrbitSet& chains = eng.chain_orbits();
  const PSubgroupPoset& poset = eng.poset();
  ChainSumReport report;
  report.function = f.name;
  report.block = block;
  for (int r = 0; r < chains.count(); ++r) {
    const Chain& c = chains.reps[r];
    ChainTerm term;
    term.chain_rep = r;
    term.sign = (c.length() % 2 == 0) ? 1 : -1;
    const SubgroupRef& stab = eng.stabilizer(r);
    const SubgroupData& sdata = eng.data_for(stab.elements());
    BCDecomposition dec = bc_summands(*eng.ambient().blocks, block,
                                      poset.subgroups[c.top()], *sdata.blocks);
    for (int b : dec.summands) {
      term.summands.push_back(b);
      term.values.push_back(f.eval(eng, sdata, b));
    }
    for (long long v : term.values) report.total += term.sign * v;
    report.terms.push_back(std::move(term));
  }
  return report;
}

std::vector<ChainSumReport> verify_block_chain_local(Engine& eng, const BlockFunction& f,
                                                     bool positive_defect_only) {
  std::vector<ChainSumReport> reports;
  const SubgroupData& amb = eng.ambient();
  for (int b = 0; b < amb.blocks->count(); ++b) {
    if (positive_defect_only && amb.blocks->blocks[b].defect == 0) continue;
    reports.push_back(alternating_chain_sum(eng, b, f));
  }
  return reports;
}

std::vector<AmReport> verify_am_equality(Engine& eng) {
  std::vector<AmReport> reports;
  const SubgroupData& amb = eng.ambient();
  for (int b = 0; b < amb.blocks->count(); ++b) {
    if (amb.blocks->blocks[b].defect == 0) continue;
    AmReport r;
    r.block = b;
    r.defect = amb.blocks->blocks[b].defect;
    BrauerCorrespondent bc = brauer_correspondent(eng, b);
    r.normalizer_order = bc.normalizer.order();
    r.am_g = height_zero_count(*amb.blocks, b);
    r.am_n = height_zero_count(*eng.data_for(bc.normalizer.elements()).blocks, bc.block);
    r.equal = (r.am_g == r.am_n);
    reports.push_back(std::move(r));
  }
  return reports;
}

FgReport verify_lemma_fg(Engine& eng, const BlockFunction& f, const BlockFunction& g) {
  FgReport report;
  report.f_local = true;
  report.g_local = true;
  for (const ChainSumReport& r : verify_block_chain_local(eng, f, true))
    if (!r.zero()) {
      report.f_local = false;
      report.witnesses.push_back(f.name + " not local on block " + std::to_string(r.block));
    }
  for (const ChainSumReport& r : verify_block_chain_local(eng, g, true))
    if (!r.zero()) {
      report.g_local = false;
      report.witnesses.push_back(g.name + " not local on block " + std::to_string(r.block));
    }

  // Hypothesis on the pairs the proof consumes: every stabilizer of a
  // nontrivial chain has O_p > 1.
  report.hypothesis_holds = true;
  const ChainOrbitSet& chains = eng.chain_orbits();
  for (int r = 0; r < chains.count(); ++r) {
    if (chains.reps[r].length() == 0) continue;
    const SubgroupData& sdata = eng.data_for(eng.stabilizer(r).elements());
    for (int b = 0; b < sdata.blocks->count(); ++b) {
      if (f.eval(eng, sdata, b) == g.eval(eng, sdata, b)) continue;
      report.hypothesis_holds = false;
      report.witnesses.push_back("hypothesis fails at chain rep " + std::to_string(r) +
                                 ", block " + std::to_string(b));
    }
  }

  bool conclusions_hold = true;
  if (report.f_local && report.g_local && report.hypothesis_holds) {
    const SubgroupData& amb = eng.ambient();
    for (int b = 0; b < amb.blocks->count(); ++b) {
      if (amb.blocks->blocks[b].defect == 0) continue;
      FgConclusion c;
      c.block = b;
      c.f_value = f.eval(eng, amb, b);
      c.g_value = g.eval(eng, amb, b);
      c.equal = (c.f_value == c.g_value);
      conclusions_hold = conclusions_hold && c.equal;
      report.conclusions.push_back(c);
    }
  }
  report.pass = report.f_local && report.g_local && report.hypothesis_holds &&
                conclusions_hold && !report.conclusions.empty();
  return report;
}

long long g_N_value(const GroupHandle& H, const GroupHandle& N, int p, bool radical_only) {
  PSubgroupPoset poset = enumerate_p_subgroups(H, p);
  std::vector<int> radical = radical_p_subgroups(H, poset);
  long long count = 0;
  for (int id = 1; id < poset.count(); ++id) {
    if (poset.class_rep[id] != id) continue;
    if (radical_only && std::find(radical.begin(), radical.end(), id) == radical.end())
      continue;
    SubgroupRef m = normalizer(H, poset.subgroups[id]);
    if (m.order() != N.order()) continue;
    if (is_isomorphic(m.to_group(), N)) ++count;
  }
  return count;
}

GroupSumReport alternating_group_sum(Engine& eng,
                                     const std::function<long long(const GroupHandle&)>& f) {
  GroupSumReport report;
  const ChainOrbitSet& chains = eng.chain_orbits();
  for (int r = 0; r < chains.count(); ++r) {
    const SubgroupData& sdata = eng.data_for(eng.stabilizer(r).elements());
    long long v = f(*sdata.group);
    int sign = (chains.reps[r].length() % 2 == 0) ? 1 : -1;
    report.terms.emplace_back(r, v);
    report.signed_total += sign * v;
    report.unsigned_total += v;
  }
  return report;
}

}  // namespace chainlocal
