#include "chainlocal/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chainlocal/errors.hpp"

namespace chainlocal {

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Perm(std::move(images));
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t image : images) {
    if (image >= images.size() || seen[image])
      throw InputError("permutation images are not a bijection");
    seen[image] = true;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& other) const {
  CHAINLOCAL_CHECK(degree() == other.degree(), "degree mismatch in product");
  std::vector<std::uint8_t> images(images_.size());
  for (int i = 0; i < degree(); ++i) images[i] = other.images_[images_[i]];
  return Perm(std::move(images));
}

Perm Perm::conjugated_by(const Perm& g) const {
  return g.inverse() * (*this) * g;
}

Perm Perm::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Perm result = identity(degree());
  Perm base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

long long Perm::order() const {
  long long result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long length = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<bool> moved(degree, false);

  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0))
      ++pos;
  };
  skip_space();
  if (pos == text.size()) throw InputError("empty permutation string");
  while (pos < text.size()) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos == text.size()) throw InputError("unterminated cycle in: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(text[pos])) == 0)
        throw InputError("unexpected character in cycle notation: " + text);
      int point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        point = point * 10 + (text[pos] - '0');
        ++pos;
      }
      if (point >= degree)
        throw InputError("point " + std::to_string(point) + " out of range for degree " +
                         std::to_string(degree));
      cycle.push_back(point);
    }
    if (cycle.size() < 2) continue;  // "()" or "(3)" are identity factors
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (moved[from]) throw InputError("point repeated across cycles: " + text);
      moved[from] = true;
      images[from] = static_cast<std::uint8_t>(to);
    }
  }
  return Perm::from_images(std::move(images));
}

}  // namespace chainlocal
