#include "chainlocal/catalog.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "chainlocal/errors.hpp"

namespace chainlocal {

namespace {

GroupHandle from_cycles(int degree, const std::vector<std::string>& cycles,
                        const Limits& limits) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  return GroupHandle(degree, std::move(gens), limits);
}

// 2x2 matrices over F_q acting on the nonzero vectors (for SL) or on the
// projective line (for PSL), with points enumerated deterministically.
using Mat2 = std::array<int, 4>;

Perm matrix_perm_on_vectors(const Mat2& m, int q) {
  // Nonzero vectors (a, b), ordered by a * q + b.
  std::vector<int> point_of(q * q, -1);
  std::vector<std::pair<int, int>> vectors;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      point_of[a * q + b] = static_cast<int>(vectors.size());
      vectors.emplace_back(a, b);
    }
  std::vector<std::uint8_t> images(vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    auto [a, b] = vectors[i];
    int a2 = (m[0] * a + m[2] * b) % q;
    int b2 = (m[1] * a + m[3] * b) % q;
    images[i] = static_cast<std::uint8_t>(point_of[a2 * q + b2]);
  }
  return Perm::from_images(std::move(images));
}

Perm moebius_perm(const Mat2& m, int q) {
  // Projective line {0, 1, ..., q-1, infinity=q}; z -> (m0 z + m1) / (m2 z + m3).
  auto inv = [&](int x) {
    for (int y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    throw InternalError("not invertible");
  };
  std::vector<std::uint8_t> images(q + 1);
  for (int z = 0; z <= q; ++z) {
    int num, den;
    if (z == q) {
      num = m[0];
      den = m[2];
    } else {
      num = (m[0] * z + m[1]) % q;
      den = (m[2] * z + m[3]) % q;
    }
    images[z] = static_cast<std::uint8_t>(den == 0 ? q : num * inv(den) % q);
  }
  return Perm::from_images(std::move(images));
}

}  // namespace

GroupHandle resolve_catalog(const std::string& name, const Limits& limits) {
  if (name == "S3") return from_cycles(3, {"(0 1)", "(0 1 2)"}, limits);
  if (name == "S4") return from_cycles(4, {"(0 1)", "(0 1 2 3)"}, limits);
  if (name == "S5") return from_cycles(5, {"(0 1)", "(0 1 2 3 4)"}, limits);
  if (name == "S6") return from_cycles(6, {"(0 1)", "(0 1 2 3 4 5)"}, limits);
  if (name == "A4") return from_cycles(4, {"(0 1 2)", "(1 2 3)"}, limits);
  if (name == "A5") return from_cycles(5, {"(0 1 2)", "(0 1 2 3 4)"}, limits);
  if (name == "A6") return from_cycles(6, {"(0 1 2)", "(1 2 3 4 5)"}, limits);
  if (name == "D8") return from_cycles(4, {"(0 1 2 3)", "(1 3)"}, limits);
  if (name == "D12") return from_cycles(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}, limits);
  if (name == "C2xC2") return from_cycles(4, {"(0 1)", "(2 3)"}, limits);
  if (name == "Q8") {
    // i and j in the action on the nonzero vectors of F_3^2.
    Mat2 i{0, 1, 2, 0};   // [[0,-1],[1,0]] column-major over F_3
    Mat2 j{1, 1, 1, 2};   // [[1,1],[1,-1]] has determinant -2 = 1 mod 3
    GroupHandle g(8, {matrix_perm_on_vectors(i, 3), matrix_perm_on_vectors(j, 3)}, limits);
    CHAINLOCAL_CHECK(g.order() == 8, "Q8 construction");
    return g;
  }
  if (name == "SL(2,3)") {
    Mat2 t{1, 0, 1, 1};   // [[1,1],[0,1]]
    Mat2 s{0, 1, 2, 0};   // [[0,-1],[1,0]]
    GroupHandle g(8, {matrix_perm_on_vectors(t, 3), matrix_perm_on_vectors(s, 3)}, limits);
    CHAINLOCAL_CHECK(g.order() == 24, "SL(2,3) construction");
    return g;
  }
  if (name == "PSL(2,7)") {
    Mat2 t{1, 1, 0, 1};   // z -> z + 1
    Mat2 s{0, 6, 1, 0};   // z -> -1/z
    GroupHandle g(8, {moebius_perm(t, 7), moebius_perm(s, 7)}, limits);
    CHAINLOCAL_CHECK(g.order() == 168, "PSL(2,7) construction");
    return g;
  }
  std::ostringstream msg;
  msg << "unknown catalog group '" << name << "'; known:";
  for (const auto& n : catalog_names()) msg << ' ' << n;
  for (const auto& n : catalog_stretch_names()) msg << ' ' << n;
  throw InputError(msg.str());
}

std::vector<std::string> catalog_names() {
  return {"S3", "S4", "S5", "A4", "A5", "D8", "D12", "Q8", "C2xC2", "SL(2,3)"};
}

std::vector<std::string> catalog_stretch_names() { return {"S6", "A6", "PSL(2,7)"}; }

GroupHandle group_from_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open generator file: " + path);
  std::vector<std::string> lines;
  int max_point = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
    std::istringstream scan(line);
    char ch;
    int value = -1;
    while (scan.get(ch)) {
      if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
        value = (value < 0 ? 0 : value * 10) + (ch - '0');
        max_point = std::max(max_point, value);
      } else {
        value = -1;
      }
    }
  }
  if (lines.empty()) throw InputError("generator file is empty: " + path);
  int degree = max_point + 1;
  std::vector<Perm> gens;
  for (const auto& l : lines) gens.push_back(parse_cycles(l, degree));
  return GroupHandle(degree, std::move(gens), limits);
}

}  // namespace chainlocal
