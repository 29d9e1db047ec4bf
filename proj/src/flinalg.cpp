#include "chainlocal/flinalg.hpp"

#include <algorithm>

namespace chainlocal {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t ell) {
  std::uint64_t result = 1, base = a % ell, e = ell - 2;
  while (e > 0) {
    if (e & 1) result = result * base % ell;
    base = base * base % ell;
    e >>= 1;
  }
  return result;
}

using Poly = std::vector<std::uint64_t>;  // little-endian

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t ell) {
  trim(a);
  std::uint64_t lead_inv = inv_mod(m.back(), ell);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lead_inv % ell;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + ell - c * m[i] % ell) % ell;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t ell) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % ell;
  }
  return poly_mod(std::move(prod), m, ell);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t ell) {
  Poly acc{1};
  base = poly_mod(std::move(base), m, ell);
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(acc, base, m, ell);
    base = poly_mulmod(base, base, m, ell);
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = inv_mod(a.back(), ell);
    for (auto& c : a) c = c * inv % ell;
  }
  return a;
}

Poly poly_divide_exact(const Poly& a, const Poly& b, std::uint64_t ell) {
  Poly rem = a;
  trim(rem);
  std::uint64_t lead_inv = inv_mod(b.back(), ell);
  Poly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  while (rem.size() >= b.size()) {
    std::uint64_t c = rem.back() * lead_inv % ell;
    size_t shift = rem.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = (rem[shift + i] + ell - c * b[i] % ell) % ell;
    trim(rem);
  }
  CHAINLOCAL_CHECK(rem.empty(), "inexact polynomial division");
  return q;
}

// f is a monic product of distinct linear factors; collect its roots.
void split_linear(const Poly& f, std::uint64_t ell, std::vector<std::uint64_t>& roots) {
  size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    roots.push_back((ell - f[0] % ell) % ell);
    return;
  }
  CHAINLOCAL_CHECK(ell % 2 == 1, "even characteristic in root splitting");
  for (std::uint64_t shift = 0;; ++shift) {
    CHAINLOCAL_CHECK(shift < ell, "root splitting did not terminate");
    // gcd(f, (x + shift)^((ell-1)/2) - 1) separates the roots r with
    // r + shift a nonzero square from the rest.
    Poly s = poly_powmod(Poly{shift, 1}, (ell - 1) / 2, f, ell);
    if (s.empty())
      s = {ell - 1};
    else
      s[0] = (s[0] + ell - 1) % ell;
    Poly d = poly_gcd(f, s, ell);
    if (d.size() > 1 && d.size() < f.size()) {
      split_linear(d, ell, roots);
      split_linear(poly_divide_exact(f, d, ell), ell, roots);
      return;
    }
  }
}

}  // namespace

FpMatrix fp_mat_mul(const FpMatrix& a, const FpMatrix& b, std::uint64_t ell) {
  CHAINLOCAL_CHECK(a.cols == b.rows, "matrix dimension mismatch");
  FpMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      std::uint64_t v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = (c.at(i, j) + v * b.at(k, j)) % ell;
    }
  return c;
}

std::vector<std::uint64_t> fp_mat_vec(const FpMatrix& a, const std::vector<std::uint64_t>& v,
                                      std::uint64_t ell) {
  CHAINLOCAL_CHECK(a.cols == static_cast<int>(v.size()), "matrix dimension mismatch");
  std::vector<std::uint64_t> out(a.rows, 0);
  for (int i = 0; i < a.rows; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < a.cols; ++j) acc = (acc + a.at(i, j) * v[j]) % ell;
    out[i] = acc;
  }
  return out;
}

std::uint64_t fp_det(FpMatrix a, std::uint64_t ell) {
  CHAINLOCAL_CHECK(a.rows == a.cols, "determinant of a non-square matrix");
  std::uint64_t det = 1;
  for (int col = 0; col < a.cols; ++col) {
    int pivot = -1;
    for (int r = col; r < a.rows; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = ell - det;
    }
    std::uint64_t inv = inv_mod(a.at(col, col), ell);
    det = det % ell * a.at(col, col) % ell;
    for (int r = col + 1; r < a.rows; ++r) {
      std::uint64_t factor = a.at(r, col) * inv % ell;
      if (factor == 0) continue;
      for (int j = col; j < a.cols; ++j)
        a.at(r, j) = (a.at(r, j) + ell - factor * a.at(col, j) % ell) % ell;
    }
  }
  return det % ell;
}

namespace {

// Row reduction; returns pivot column per row (echelon form in place).
std::vector<int> rref(FpMatrix& a, std::uint64_t ell) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
    std::uint64_t inv = inv_mod(a.at(row, col), ell);
    for (int j = 0; j < a.cols; ++j) a.at(row, j) = a.at(row, j) * inv % ell;
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      std::uint64_t factor = a.at(r, col);
      for (int j = 0; j < a.cols; ++j)
        a.at(r, j) = (a.at(r, j) + ell - factor * a.at(row, j) % ell) % ell;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> fp_kernel(FpMatrix a, std::uint64_t ell) {
  std::vector<int> pivots = rref(a, ell);
  std::vector<char> is_pivot(a.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(a.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (ell - a.at(static_cast<int>(r), free)) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

int fp_rank(FpMatrix a, std::uint64_t ell) {
  return static_cast<int>(rref(a, ell).size());
}

std::vector<std::uint64_t> fp_solve(FpMatrix a, std::vector<std::uint64_t> b,
                                    std::uint64_t ell) {
  CHAINLOCAL_CHECK(a.rows == static_cast<int>(b.size()), "matrix dimension mismatch");
  FpMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j) % ell;
    aug.at(i, a.cols) = b[i] % ell;
  }
  std::vector<int> pivots = rref(aug, ell);
  for (int c : pivots)
    if (c == a.cols) throw DomainError("inconsistent linear system");
  if (static_cast<int>(pivots.size()) < a.cols)
    throw DomainError("singular linear system");
  std::vector<std::uint64_t> x(a.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
  return x;
}

std::vector<std::uint64_t> fp_charpoly(const FpMatrix& a, std::uint64_t ell) {
  CHAINLOCAL_CHECK(a.rows == a.cols, "characteristic polynomial of a non-square matrix");
  int n = a.rows;
  CHAINLOCAL_CHECK(static_cast<std::uint64_t>(n) < ell, "field too small for interpolation");
  // Evaluate det(xI - a) at x = 0..n and interpolate with Lagrange.
  std::vector<std::uint64_t> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    FpMatrix m = a;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = (ell - m.at(i, j) % ell) % ell;
      m.at(i, i) = (m.at(i, i) + t) % ell;
    }
    xs[t] = t;
    ys[t] = fp_det(std::move(m), ell);
  }
  std::vector<std::uint64_t> result(n + 1, 0);
  for (int t = 0; t <= n; ++t) {
    // Basis polynomial prod_{s != t} (x - xs[s]) / (xs[t] - xs[s])
    std::vector<std::uint64_t> basis{1};
    std::uint64_t denom = 1;
    for (int s = 0; s <= n; ++s) {
      if (s == t) continue;
      basis.push_back(0);
      for (size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = (basis[k - 1] + basis[k] * (ell - xs[s]) % ell) % ell;
      basis[0] = basis[0] * (ell - xs[s]) % ell;
      denom = denom * ((xs[t] + ell - xs[s]) % ell) % ell;
    }
    std::uint64_t scale = ys[t] * inv_mod(denom, ell) % ell;
    for (int k = 0; k <= n; ++k)
      result[k] = (result[k] + scale * basis[k]) % ell;
  }
  CHAINLOCAL_CHECK(result[n] == 1, "characteristic polynomial is not monic");
  return result;
}

std::vector<std::uint64_t> fp_poly_roots(std::vector<std::uint64_t> f, std::uint64_t ell) {
  for (auto& c : f) c %= ell;
  trim(f);
  CHAINLOCAL_CHECK(!f.empty(), "root finding on the zero polynomial");
  std::vector<std::uint64_t> roots;
  if (f.size() == 1) return roots;
  // Separate the squarefree product of linear factors: gcd(f, x^ell - x).
  Poly xl = poly_powmod(Poly{0, 1}, ell, f, ell);
  if (xl.size() < 2) xl.resize(2, 0);
  xl[1] = (xl[1] + ell - 1) % ell;
  Poly linear_part = poly_gcd(f, xl, ell);
  if (linear_part.size() <= 1) return roots;
  split_linear(linear_part, ell, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace chainlocal
