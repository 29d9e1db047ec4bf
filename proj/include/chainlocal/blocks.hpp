#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "chainlocal/chartable.hpp"
#include "chainlocal/group.hpp"
#include "chainlocal/modsystem.hpp"

namespace chainlocal {

struct Block {
  std::vector<int> chars;                 // rows of the character table
  std::vector<std::uint32_t> lambda;      // central character per class, in F_q
  std::vector<std::uint32_t> idempotent;  // e_B as class-sum coefficients
  int defect = 0;
  std::optional<SubgroupRef> defect_group;
  bool principal = false;
};

// Complete p-block data for one group. The modular system is shared with an
// ambient group so that block data of different subgroups live in one field.
struct BlockSystem {
  const GroupHandle* group = nullptr;
  const CharacterTable* table = nullptr;
  std::shared_ptr<const PModularSystem> mod;
  int p = 0;
  std::vector<Block> blocks;
  std::vector<int> block_of_char;

  int count() const { return static_cast<int>(blocks.size()); }
  // lambda_B applied to an arbitrary central element given by class coefficients.
  std::uint32_t lambda_at(int block, const std::vector<std::uint32_t>& v) const;
  // Product in the class algebra Z(F_q G).
  std::vector<std::uint32_t> center_product(const std::vector<std::uint32_t>& u,
                                            const std::vector<std::uint32_t>& v) const;
};

BlockSystem compute_blocks(const GroupHandle& G, const CharacterTable& table,
                           std::shared_ptr<const PModularSystem> mod);

int character_defect(const BlockSystem& sys, int char_row);
int height_zero_count(const BlockSystem& sys, int block);  // the function am
int defect_one_count(const BlockSystem& sys, int block);   // the function k1

// Truncation of the central element v (class coefficients in G) to C_G(Q),
// re-expressed over the classes of H; requires C_G(Q) <= H <= N_G(Q).
std::vector<std::uint32_t> brauer_morphism(const GroupHandle& G, const SubgroupRef& Q,
                                           const std::vector<std::uint32_t>& v,
                                           const BlockSystem& host);

// Blocks b of the chain stabilizer with lambda_b(Br_{Q}(e_B)) = 1, plus the
// Brauer image itself. Verifies the image equals the sum of the summand
// idempotents (zero when the set is empty).
struct BCDecomposition {
  std::vector<std::uint32_t> brauer_image;  // class coefficients over the stabilizer
  std::vector<int> summands;                // block ids of the stabilizer
};
BCDecomposition bc_summands(const BlockSystem& parent, int block, const SubgroupRef& Q,
                            const BlockSystem& stabilizer);

// lambda_b composed with the class-sum embedding: defined iff multiplicative.
std::optional<int> block_induction(const BlockSystem& parent, const BlockSystem& sub,
                                   int block);

}  // namespace chainlocal
