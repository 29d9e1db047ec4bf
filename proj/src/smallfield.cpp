#include "chainlocal/smallfield.hpp"

#include <algorithm>
#include <cmath>

namespace chainlocal {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  CHAINLOCAL_CHECK(mod > 1 && mod < (std::uint64_t{1} << 31), "modulus out of range");
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  CHAINLOCAL_CHECK(a != 0, "inverse of zero");
  return mod_pow(a, p - 2, p);
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  CHAINLOCAL_CHECK(is_prime_u64(p), "primitive root of a non-prime");
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t r : factors)
      if (mod_pow(g, (p - 1) / r, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw InternalError("no primitive root found");
}

namespace {

// Polynomials over F_p with coefficients coded little-endian.
using Poly = std::vector<int>;

Poly poly_from_code(std::uint32_t code, int p) {
  Poly f;
  while (code > 0) {
    f.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return f;
}

std::uint32_t code_from_poly(const Poly& f, int p) {
  std::uint32_t code = 0;
  for (size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  while (a.size() >= m.size()) {
    int c = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      int v = (a[shift + i] - c * m[i]) % p;
      a[shift + i] = v < 0 ? v + p : v;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

bool is_irreducible(const Poly& f, int p) {
  // Trial division by every monic polynomial of degree 1..deg/2.
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = poly_from_code(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GFq::GFq(int p, int m) : p_(p), m_(m) {
  CHAINLOCAL_CHECK(is_prime_u64(static_cast<std::uint64_t>(p)), "characteristic must be prime");
  CHAINLOCAL_CHECK(m >= 1, "extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    CHAINLOCAL_CHECK(q <= (std::uint64_t{1} << 22), "field size exceeds table guard");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Least monic irreducible of degree m: scan low coefficient codes upward.
  std::uint32_t low_count = q_;
  bool found = false;
  for (std::uint32_t low = 0; low < low_count && !found; ++low) {
    Poly f = poly_from_code(low, p);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      found = true;
    }
  }
  CHAINLOCAL_CHECK(found, "no irreducible polynomial found");

  // Least generator of the multiplicative group.
  Poly mod_poly(modulus_.begin(), modulus_.end());
  auto factors = prime_factors(q_ - 1);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 2; c < q_ && gen == 0; ++c) {
    Poly a = poly_from_code(c, p);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      // a^((q-1)/r) by square and multiply
      Poly acc{1};
      Poly base = a;
      std::uint64_t e = (q_ - 1) / r;
      while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, mod_poly, p);
        base = poly_mulmod(base, base, mod_poly, p);
        e >>= 1;
      }
      if (code_from_poly(acc, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = c;
  }
  CHAINLOCAL_CHECK(gen != 0 || q_ == 2, "no field generator found");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Poly power{1};
  Poly g = poly_from_code(gen == 0 ? 1 : gen, p);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    std::uint32_t code = code_from_poly(power, p);
    exp_[i] = code;
    log_[code] = i;
    power = poly_mulmod(power, g, mod_poly, p);
  }
  CHAINLOCAL_CHECK(code_from_poly(power, p) == 1, "generator order mismatch");
}

std::uint32_t GFq::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t result = 0;
  std::uint32_t mult = 1;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    result += (da + db) % p_ * mult;
    mult *= p_;
  }
  return result;
}

std::uint32_t GFq::neg(std::uint32_t a) const {
  std::uint32_t result = 0;
  std::uint32_t mult = 1;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    result += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
  }
  return result;
}

std::uint32_t GFq::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t GFq::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t GFq::inv(std::uint32_t a) const {
  CHAINLOCAL_CHECK(a != 0, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GFq::pow(std::uint32_t a, long long e) const {
  if (a == 0) {
    CHAINLOCAL_CHECK(e > 0, "zero to a non-positive power");
    return 0;
  }
  long long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_[static_cast<std::uint64_t>(log_[a]) * r % (q_ - 1)];
}

std::uint32_t GFq::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t GFq::log(std::uint32_t a) const {
  CHAINLOCAL_CHECK(a != 0 && a < q_, "log argument out of range");
  return log_[a];
}

std::uint32_t GFq::element_of_order(std::uint32_t d) const {
  CHAINLOCAL_CHECK(d >= 1 && (q_ - 1) % d == 0, "order does not divide q-1");
  return exp_[((q_ - 1) / d) % (q_ - 1)];
}

}  // namespace chainlocal
