#pragma once

#include <cstdint>
#include <vector>

#include "chainlocal/errors.hpp"

namespace chainlocal {

// Dense matrix over the prime field F_ell (ell < 2^31).
struct FpMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> data;

  FpMatrix() = default;
  FpMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

  std::uint64_t& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  std::uint64_t at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

FpMatrix fp_mat_mul(const FpMatrix& a, const FpMatrix& b, std::uint64_t ell);
std::vector<std::uint64_t> fp_mat_vec(const FpMatrix& a, const std::vector<std::uint64_t>& v,
                                      std::uint64_t ell);

std::uint64_t fp_det(FpMatrix a, std::uint64_t ell);

// Basis of the right kernel {v : a v = 0}, in reduced echelon form.
std::vector<std::vector<std::uint64_t>> fp_kernel(FpMatrix a, std::uint64_t ell);

// Unique solution of a x = b for square invertible a; throws DomainError if
// the system is singular or inconsistent.
std::vector<std::uint64_t> fp_solve(FpMatrix a, std::vector<std::uint64_t> b,
                                    std::uint64_t ell);

int fp_rank(FpMatrix a, std::uint64_t ell);

// Characteristic polynomial det(xI - a), monic, constant term first.
// Computed by evaluating det(xI - a) at deg+1 points and interpolating.
std::vector<std::uint64_t> fp_charpoly(const FpMatrix& a, std::uint64_t ell);

// Distinct roots in F_ell of a nonzero polynomial, sorted ascending.
std::vector<std::uint64_t> fp_poly_roots(std::vector<std::uint64_t> f, std::uint64_t ell);

}  // namespace chainlocal
