#include "chainlocal/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace chainlocal {

namespace {

// Quotient of a by the monic polynomial b; division must be exact.
std::vector<long long> exact_poly_divide(std::vector<long long> a,
                                         const std::vector<long long>& b) {
  CHAINLOCAL_CHECK(!b.empty() && b.back() == 1, "divisor is not monic");
  CHAINLOCAL_CHECK(a.size() >= b.size(), "degree underflow in polynomial division");
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long long c = a[i + b.size() - 1];
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (long long c : a) CHAINLOCAL_CHECK(c == 0, "inexact polynomial division");
  return q;
}

const std::vector<long long>& cached_cyclotomic(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto jt = cache.find(d);
    CHAINLOCAL_CHECK(jt != cache.end(), "divisor not yet cached");
    poly = exact_poly_divide(std::move(poly), jt->second);
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

// Ensures divisors are computed in increasing order before use.
const std::vector<long long>& cyclotomic_with_divisors(int n) {
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) cached_cyclotomic(d);
  return cached_cyclotomic(n);
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  CHAINLOCAL_CHECK(n >= 1, "conductor must be positive");
  return cyclotomic_with_divisors(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<long long> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  coeffs_.resize(conductor_, 0);
  normalize();
}

void Cyclotomic::normalize() {
  const std::vector<long long>& phi = cyclotomic_with_divisors(conductor_);
  size_t deg = phi.size() - 1;  // phi(e)
  for (size_t i = coeffs_.size(); i-- > deg;) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    coeffs_[i] = 0;
    for (size_t j = 0; j < deg; ++j) coeffs_[i - deg + j] -= c * phi[j];
  }
}

Cyclotomic Cyclotomic::integer(long long n, int conductor) {
  std::vector<long long> c(conductor, 0);
  c[0] = n;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long long power) {
  CHAINLOCAL_CHECK(conductor >= 1, "conductor must be positive");
  long long k = ((power % conductor) + conductor) % conductor;
  std::vector<long long> c(conductor, 0);
  c[static_cast<size_t>(k)] = 1;
  return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

bool Cyclotomic::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](long long c) { return c == 0; });
}

long long Cyclotomic::as_integer() const {
  if (!is_integer()) throw DomainError("cyclotomic value " + to_string() + " is not an integer");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int conductor) const {
  if (conductor == conductor_) return *this;
  CHAINLOCAL_CHECK(conductor % conductor_ == 0, "conductor does not divide promotion target");
  int stride = conductor / conductor_;
  std::vector<long long> c(conductor, 0);
  for (int i = 0; i < conductor_; ++i) c[static_cast<size_t>(i) * stride] = coeffs_[i];
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int e = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = promoted(e), b = o.promoted(e);
  for (int i = 0; i < e; ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (long long& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int e = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = promoted(e), b = o.promoted(e);
  std::vector<long long> prod(e, 0);
  for (int i = 0; i < e; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < e; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[(i + j) % e] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(e, std::move(prod));
}

Cyclotomic Cyclotomic::operator*(long long n) const {
  Cyclotomic r = *this;
  for (long long& c : r.coeffs_) c *= n;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return (*this - o).is_zero();
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  int e = std::lcm(conductor_, o.conductor_);
  return promoted(e).coeffs_ < o.promoted(e).coeffs_;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  long long r = ((k % conductor_) + conductor_) % conductor_;
  CHAINLOCAL_CHECK(std::gcd(r, static_cast<long long>(conductor_)) == 1,
                   "galois exponent not coprime to conductor");
  std::vector<long long> c(conductor_, 0);
  for (int i = 0; i < conductor_; ++i)
    c[static_cast<size_t>(i) * r % conductor_] += coeffs_[i];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::divided_by(long long n) const {
  CHAINLOCAL_CHECK(n != 0, "division by zero");
  Cyclotomic r = *this;
  for (long long& c : r.coeffs_) {
    if (c % n != 0)
      throw DomainError("cyclotomic value " + to_string() + " is not divisible by " +
                        std::to_string(n));
    c /= n;
  }
  return r;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < conductor_; ++i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "-");
    else if (c < 0) out << "-";
    long long a = c > 0 ? c : -c;
    if (i == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace chainlocal
