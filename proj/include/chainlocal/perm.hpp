#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chainlocal {

// A permutation of {0, ..., n-1} stored as its image table.
// Products compose left to right: (a * b) maps x to b[a[x]].
class Perm {
 public:
  Perm() = default;
  static Perm identity(int degree);
  // Validates that images form a bijection on [0, degree).
  static Perm from_images(std::vector<std::uint8_t> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& other) const;
  // g^-1 * (*this) * g
  Perm conjugated_by(const Perm& g) const;
  Perm pow(long long exponent) const;
  long long order() const;

  auto operator<=>(const Perm& other) const = default;

  std::string to_cycle_string() const;

 private:
  explicit Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;
};

// Disjoint-cycle notation with 0-based points, e.g. "(0 1)(2 3)"; identity is "()".
// Commas are accepted as separators inside a cycle.
Perm parse_cycles(const std::string& text, int degree);

}  // namespace chainlocal
