#pragma once

#include <cstdint>
#include <vector>

#include "chainlocal/cyclotomic.hpp"
#include "chainlocal/group.hpp"

namespace chainlocal {

// Ordinary character table with exact cyclotomic entries, plus the structure
// constants of the centre of the group algebra. Rows are sorted by degree and
// then lexicographically by value vector; columns follow the class order of
// GroupHandle::classes().
struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 0;
  int num_classes = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<long long> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]

  // a[i][j][k]: coefficient of the k-th class sum in the product of the
  // i-th and j-th class sums.
  std::vector<std::vector<std::vector<std::uint64_t>>> struct_consts;

  int count() const { return static_cast<int>(values.size()); }

  // omega_chi(K-hat) = |K| chi(g_K) / chi(1); always an algebraic integer.
  Cyclotomic central_character(int chi, int cls) const;
};

// Dixon's method: eigenvector computation for the class matrices over an
// auxiliary prime field, followed by an exact cyclotomic lift. The auxiliary
// prime is the least prime congruent to 1 mod exp(G) exceeding 2|G|sqrt(|G|).
CharacterTable compute_character_table(const GroupHandle& G);

// The auxiliary prime used for a given exponent/order pair (exposed for
// cross-checking against an independently chosen larger prime).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order,
                          std::uint64_t min_bound = 0);

// Recompute with a different auxiliary prime and compare; throws
// InternalError on disagreement. Used by self-checks.
CharacterTable compute_character_table_checked(const GroupHandle& G);

}  // namespace chainlocal
