#pragma once

#include <cstdint>
#include <memory>

#include "chainlocal/cyclotomic.hpp"
#include "chainlocal/smallfield.hpp"

namespace chainlocal {

// Reduction from Z[zeta_E] (E the exponent of the ambient group) to F_{p^m}.
// Writing E = p^a * e with p ∤ e, the map kills p-power roots of unity and
// sends zeta_e to a fixed element z of multiplicative order e, so zeta_E
// maps to z^t with t the inverse of p^a mod e. One system serves the ambient
// group and all of its subgroups, whose exponents divide E.
//
// m_multiplier and z_variant pick alternative legal realizations (a larger
// field, or a different order-e image chosen as z^k for the z_variant-th unit
// k mod e); block data must be independent of these choices.
class PModularSystem {
 public:
  PModularSystem(int p, std::uint64_t ambient_exponent, int m_multiplier = 1,
                 int z_variant = 0);

  int p() const { return p_; }
  std::uint64_t ambient_exponent() const { return ambient_exponent_; }
  int e() const { return e_; }
  const GFq& field() const { return *field_; }
  std::uint32_t zeta_image() const { return z_; }

  // v's conductor must divide the ambient exponent.
  std::uint32_t reduce(const Cyclotomic& v) const;

 private:
  int p_;
  std::uint64_t ambient_exponent_;
  int a_;  // p-part exponent: E = p^a * e
  int e_;
  std::unique_ptr<GFq> field_;
  std::uint32_t z_;
  std::vector<std::uint32_t> zeta_powers_;  // image of zeta_E^i for i < E
};

}  // namespace chainlocal
