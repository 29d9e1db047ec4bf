#pragma once

#include <cstdint>
#include <vector>

#include "chainlocal/errors.hpp"

namespace chainlocal {

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, sorted
std::uint64_t isqrt_u64(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);  // p prime
std::uint64_t least_primitive_root(std::uint64_t p);

// The field F_{p^m}, elements coded as integers sum c_i p^i where the c_i are
// the coefficients of the residue modulo the lexicographically least monic
// irreducible polynomial of degree m. Multiplication goes through exp/log
// tables for the least generator of the multiplicative group.
class GFq {
 public:
  GFq(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // monic, length m+1
  std::uint32_t generator() const { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;
  std::uint32_t from_int(long long n) const;  // image of a rational integer

  // Discrete log base the generator; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const;
  // generator^k
  std::uint32_t exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  // An element of exact multiplicative order d (d must divide q-1).
  std::uint32_t element_of_order(std::uint32_t d) const;

 private:
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace chainlocal
