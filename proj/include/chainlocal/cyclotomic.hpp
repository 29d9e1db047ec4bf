#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainlocal/errors.hpp"

namespace chainlocal {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

int euler_phi(int n);

// An element of Z[zeta_e] for a fixed conductor e, stored as an integer
// polynomial in zeta_e reduced modulo the e-th cyclotomic polynomial.
// Since Z[zeta_e] is the full ring of integers of Q(zeta_e), exact division
// by a rational integer is well defined whenever the quotient is integral.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, 0) {}

  static Cyclotomic integer(long long n, int conductor = 1);
  static Cyclotomic root_of_unity(int conductor, long long power);

  int conductor() const { return conductor_; }
  // Canonical coefficients on 1, zeta, ..., zeta^(phi(e)-1), padded to length e.
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;
  long long as_integer() const;  // throws DomainError if not an integer

  Cyclotomic promoted(int conductor) const;  // conductor() must divide the target

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(long long n) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const;

  // zeta -> zeta^k; k must be coprime to the conductor.
  Cyclotomic galois(long long k) const;
  Cyclotomic conjugate() const { return galois(conductor_ - 1); }

  // Exact division by a nonzero integer; throws DomainError if any
  // coefficient of the canonical form is not divisible.
  Cyclotomic divided_by(long long n) const;

  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<long long> coeffs);
  void normalize();

  int conductor_;
  std::vector<long long> coeffs_;  // length == conductor_
};

inline Cyclotomic operator*(long long n, const Cyclotomic& c) { return c * n; }

}  // namespace chainlocal
