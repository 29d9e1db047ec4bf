#include "chainlocal/modsystem.hpp"

#include <numeric>

namespace chainlocal {

PModularSystem::PModularSystem(int p, std::uint64_t ambient_exponent, int m_multiplier,
                               int z_variant)
    : p_(p), ambient_exponent_(ambient_exponent) {
  CHAINLOCAL_CHECK(is_prime_u64(static_cast<std::uint64_t>(p)), "p must be prime");
  CHAINLOCAL_CHECK(ambient_exponent >= 1, "exponent must be positive");
  CHAINLOCAL_CHECK(m_multiplier >= 1, "field multiplier must be positive");

  a_ = 0;
  std::uint64_t e = ambient_exponent;
  while (e % p == 0) {
    e /= p;
    ++a_;
  }
  e_ = static_cast<int>(e);

  // Least m with e | p^m - 1, scaled by the requested multiplier.
  int m = 1;
  {
    std::uint64_t pm = static_cast<std::uint64_t>(p) % e;
    while (pm != 1 % e) {
      pm = pm * (p % e) % e;
      ++m;
      CHAINLOCAL_CHECK(m <= 64, "multiplicative order runaway");
    }
  }
  m *= m_multiplier;
  field_ = std::make_unique<GFq>(p, m);
  CHAINLOCAL_CHECK((field_->q() - 1) % e_ == 0, "e does not divide q - 1");

  z_ = field_->element_of_order(static_cast<std::uint32_t>(e_));
  if (z_variant > 0) {
    // The z_variant-th unit mod e beyond 1, applied as an exponent.
    int seen = 0;
    for (int k = 2; k <= e_; ++k) {
      if (std::gcd(k, e_) != 1) continue;
      ++seen;
      if (seen == z_variant) {
        z_ = field_->pow(z_, k);
        break;
      }
    }
  }

  // zeta_E^i -> z^(t*i) with t = (p^a)^(-1) mod e.
  std::uint64_t pa = 1;
  for (int i = 0; i < a_; ++i) pa = pa * p % e_;
  std::uint64_t t = 1 % e_;
  if (e_ > 1) {
    // pa is a unit mod e; find the inverse by scanning (e is small).
    bool found = false;
    for (std::uint64_t c = 1; c < static_cast<std::uint64_t>(e_); ++c)
      if (pa * c % e_ == 1) {
        t = c;
        found = true;
        break;
      }
    CHAINLOCAL_CHECK(found, "p-part is not invertible mod e");
  }
  zeta_powers_.resize(ambient_exponent_);
  for (std::uint64_t i = 0; i < ambient_exponent_; ++i)
    zeta_powers_[i] = field_->pow(z_, static_cast<long long>(t * i % e_));
}

std::uint32_t PModularSystem::reduce(const Cyclotomic& v) const {
  CHAINLOCAL_CHECK(ambient_exponent_ % v.conductor() == 0,
                   "conductor does not divide the ambient exponent");
  Cyclotomic promoted = v.promoted(static_cast<int>(ambient_exponent_));
  const GFq& f = *field_;
  std::uint32_t acc = 0;
  const auto& coeffs = promoted.coeffs();
  for (std::uint64_t i = 0; i < ambient_exponent_; ++i) {
    if (coeffs[i] == 0) continue;
    acc = f.add(acc, f.mul(f.from_int(coeffs[i]), zeta_powers_[i]));
  }
  return acc;
}

}  // namespace chainlocal
