#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "chainlocal/engine.hpp"

namespace chainlocal {

// Integer-valued function on (subgroup, block) pairs. The contract flag
// records the guaranteed constancy: conjugacy-constant functions agree on
// G-conjugate pairs, isomorphism-constant ones on isomorphic pairs.
struct BlockFunction {
  std::string name;
  bool conjugacy_constant_only = false;
  std::function<long long(Engine&, const SubgroupData&, int)> eval;
};

BlockFunction fn_am();
BlockFunction fn_k1();
BlockFunction fn_constant(long long c);
// am of the Brauer correspondent at the defect-group normalizer.
BlockFunction fn_am0();
BlockFunction fn_omega_N(std::shared_ptr<GroupHandle> N);
// P, X given by their (ambient-group) element sets.
BlockFunction fn_omega_PX(std::vector<Perm> p_elements, std::vector<Perm> x_elements);

enum class NormalizerSumMode { AllPSubgroups, RadicalOnly };
BlockFunction fn_normalizer_sum(BlockFunction h, NormalizerSumMode mode);

// Seeded random functions honouring their constancy contract exactly:
// values are pure hashes of a canonical conjugacy key (canonical subgroup
// conjugate plus transported block id) or of isomorphism invariants.
BlockFunction fn_random_conjugacy(std::uint64_t seed, int index);
BlockFunction fn_random_isomorphism(std::uint64_t seed, int index);

BlockFunction fn_sum(BlockFunction f, BlockFunction g);
BlockFunction fn_product(BlockFunction f, BlockFunction g);
BlockFunction fn_scale(long long n, BlockFunction f);

struct ChainTerm {
  int chain_rep = -1;
  int sign = 0;
  std::vector<int> summands;      // blocks of G_C cut out by Br(e_B)
  std::vector<long long> values;  // f on those blocks
};

struct ChainSumReport {
  std::string function;
  int block = -1;
  std::vector<ChainTerm> terms;
  long long total = 0;
  bool zero() const { return total == 0; }
};

ChainSumReport alternating_chain_sum(Engine& eng, int block, const BlockFunction& f);

std::vector<ChainSumReport> verify_block_chain_local(Engine& eng, const BlockFunction& f,
                                                     bool positive_defect_only);

struct AmReport {
  int block = -1;
  int defect = 0;
  std::uint64_t normalizer_order = 0;
  long long am_g = 0;
  long long am_n = 0;
  bool equal = false;
};
// One entry per positive-defect block.
std::vector<AmReport> verify_am_equality(Engine& eng);

struct FgConclusion {
  int block = -1;
  long long f_value = 0;
  long long g_value = 0;
  bool equal = false;
};
struct FgReport {
  bool f_local = false;
  bool g_local = false;
  bool hypothesis_holds = false;
  std::vector<std::string> witnesses;
  std::vector<FgConclusion> conclusions;  // positive-defect blocks only
  bool pass = false;
};
FgReport verify_lemma_fg(Engine& eng, const BlockFunction& f, const BlockFunction& g);

// Group-level machinery for the g_N / r_N statements.
long long g_N_value(const GroupHandle& H, const GroupHandle& N, int p, bool radical_only);

struct GroupSumReport {
  std::vector<std::pair<int, long long>> terms;  // (chain rep, value)
  long long signed_total = 0;
  long long unsigned_total = 0;
};
GroupSumReport alternating_group_sum(Engine& eng,
                                     const std::function<long long(const GroupHandle&)>& f);

}  // namespace chainlocal
