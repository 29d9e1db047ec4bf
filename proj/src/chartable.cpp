#include "chainlocal/chartable.hpp"

#include <algorithm>

#include "chainlocal/flinalg.hpp"
#include "chainlocal/smallfield.hpp"

namespace chainlocal {

Cyclotomic CharacterTable::central_character(int chi, int cls) const {
  return (values[chi][cls] * static_cast<long long>(class_sizes[cls]))
      .divided_by(degrees[chi]);
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order,
                          std::uint64_t min_bound) {
  std::uint64_t bound = 2 * order * (isqrt_u64(order) + 1);
  if (bound < min_bound) bound = min_bound;
  const std::uint64_t guard = default_limits().max_aux_prime;
  for (std::uint64_t ell = (bound / exponent + 1) * exponent + 1;; ell += exponent) {
    CHAINLOCAL_CHECK(ell <= guard, "auxiliary prime exceeds guard");
    if (is_prime_u64(ell)) return ell;
  }
}

namespace {

// Solves B X = C where every column of C lies in the column span of B.
FpMatrix solve_in_span(const FpMatrix& B, const FpMatrix& C, std::uint64_t ell) {
  CHAINLOCAL_CHECK(B.rows == C.rows, "dimension mismatch");
  int d = B.cols;
  FpMatrix aug(B.rows, d + C.cols);
  for (int i = 0; i < B.rows; ++i) {
    for (int j = 0; j < d; ++j) aug.at(i, j) = B.at(i, j);
    for (int j = 0; j < C.cols; ++j) aug.at(i, d + j) = C.at(i, j);
  }
  // Row reduce; pivots must land exactly in the B part.
  int row = 0;
  for (int col = 0; col < d && row < aug.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < aug.rows; ++r)
      if (aug.at(r, col) != 0) {
        pivot = r;
        break;
      }
    CHAINLOCAL_CHECK(pivot >= 0, "basis matrix is column-deficient");
    if (pivot != row)
      for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
    std::uint64_t inv = mod_inverse(aug.at(row, col), ell);
    for (int j = 0; j < aug.cols; ++j) aug.at(row, j) = aug.at(row, j) * inv % ell;
    for (int r = 0; r < aug.rows; ++r) {
      if (r == row || aug.at(r, col) == 0) continue;
      std::uint64_t factor = aug.at(r, col);
      for (int j = 0; j < aug.cols; ++j)
        aug.at(r, j) = (aug.at(r, j) + ell - factor * aug.at(row, j) % ell) % ell;
    }
    ++row;
  }
  for (int r = d; r < aug.rows; ++r)
    for (int j = d; j < aug.cols; ++j)
      CHAINLOCAL_CHECK(aug.at(r, j) == 0, "column outside span in restriction");
  FpMatrix x(d, C.cols);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < C.cols; ++j) x.at(i, j) = aug.at(i, d + j);
  return x;
}

struct DixonData {
  std::uint64_t ell;
  std::vector<std::vector<std::uint64_t>> chi_mod;  // [character][class]
  std::vector<long long> degrees;
};

DixonData dixon_eigenvectors(const GroupHandle& G, const CharacterTable& shell,
                             std::uint64_t ell) {
  int k = shell.num_classes;

  std::vector<FpMatrix> class_matrices(k);
  for (int i = 0; i < k; ++i) {
    class_matrices[i] = FpMatrix(k, k);
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c)
        class_matrices[i].at(j, c) = shell.struct_consts[i][j][c] % ell;
  }

  // Split the common eigenspaces of the commuting class matrices.
  std::vector<FpMatrix> spaces;
  {
    FpMatrix full(k, k);
    for (int i = 0; i < k; ++i) full.at(i, i) = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                 [](const FpMatrix& s) { return s.cols == 1; });
    if (all_split) break;
    std::vector<FpMatrix> next;
    for (FpMatrix& space : spaces) {
      if (space.cols == 1) {
        next.push_back(std::move(space));
        continue;
      }
      FpMatrix restricted =
          solve_in_span(space, fp_mat_mul(class_matrices[i], space, ell), ell);
      auto roots = fp_poly_roots(fp_charpoly(restricted, ell), ell);
      int total = 0;
      for (std::uint64_t lambda : roots) {
        FpMatrix shifted = restricted;
        for (int t = 0; t < shifted.rows; ++t)
          shifted.at(t, t) = (shifted.at(t, t) + ell - lambda) % ell;
        auto kernel = fp_kernel(std::move(shifted), ell);
        CHAINLOCAL_CHECK(!kernel.empty(), "eigenvalue without eigenvector");
        FpMatrix sub(k, static_cast<int>(kernel.size()));
        for (size_t c = 0; c < kernel.size(); ++c) {
          // Map kernel coordinates back through the subspace basis.
          for (int r = 0; r < k; ++r) {
            std::uint64_t acc = 0;
            for (int t = 0; t < space.cols; ++t)
              acc = (acc + space.at(r, t) * kernel[c][t]) % ell;
            sub.at(r, static_cast<int>(c)) = acc;
          }
        }
        total += sub.cols;
        next.push_back(std::move(sub));
      }
      CHAINLOCAL_CHECK(total == space.cols, "class matrix is not diagonalizable");
    }
    spaces = std::move(next);
  }
  CHAINLOCAL_CHECK(static_cast<int>(spaces.size()) == k,
                   "common eigenspace splitting is incomplete");

  DixonData data;
  data.ell = ell;
  const auto& inverse_class = G.classes().inverse_class;
  for (const FpMatrix& space : spaces) {
    std::vector<std::uint64_t> w(k);
    for (int j = 0; j < k; ++j) w[j] = space.at(j, 0);
    CHAINLOCAL_CHECK(w[0] != 0, "omega vector vanishes on the identity class");
    std::uint64_t scale = mod_inverse(w[0], ell);
    for (auto& v : w) v = v * scale % ell;

    // |G| / d^2 = sum_j omega_j omega_{j*} / |K_j|
    std::uint64_t s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + w[j] * w[inverse_class[j]] % ell *
                   mod_inverse(shell.class_sizes[j] % ell, ell)) %
          ell;
    CHAINLOCAL_CHECK(s != 0, "degree sum vanished");
    std::uint64_t d2 = shell.group_order % ell * mod_inverse(s, ell) % ell;
    std::uint64_t d = isqrt_u64(d2);
    CHAINLOCAL_CHECK(d * d == d2 && d > 0, "degree is not a perfect square residue");

    std::vector<std::uint64_t> chi(k);
    for (int j = 0; j < k; ++j)
      chi[j] = d % ell * w[j] % ell * mod_inverse(shell.class_sizes[j] % ell, ell) % ell;
    data.chi_mod.push_back(std::move(chi));
    data.degrees.push_back(static_cast<long long>(d));
  }
  return data;
}

CharacterTable dixon_table(const GroupHandle& G, std::uint64_t min_prime_bound) {
  const ConjClassTable& classes = G.classes();
  const std::vector<Perm>& elems = G.elements();
  int k = classes.count();

  CharacterTable table;
  table.group_order = G.order();
  table.exponent = G.exponent();
  table.num_classes = k;
  table.class_sizes = classes.sizes;

  table.struct_consts.assign(
      k, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0)));
  for (int kc = 0; kc < k; ++kc) {
    const Perm& z = classes.reps[kc];
    for (int i = 0; i < k; ++i)
      for (int xi : classes.members[i]) {
        int j = G.class_of(elems[xi].inverse() * z);
        ++table.struct_consts[i][j][kc];
      }
  }

  std::uint64_t ell = dixon_prime(table.exponent, table.group_order, min_prime_bound);
  DixonData data = dixon_eigenvectors(G, table, ell);

  // Exact lift: recover root-of-unity multiplicities through the discrete
  // Fourier transform over the powers of each class representative.
  int e = static_cast<int>(table.exponent);
  std::uint64_t z_ell =
      mod_pow(least_primitive_root(ell), (ell - 1) / table.exponent, ell);

  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    int n = static_cast<int>(classes.reps[j].order());
    power_class[j].resize(n);
    for (int u = 0; u < n; ++u) power_class[j][u] = G.class_of(classes.reps[j].pow(u));
  }

  for (int chi = 0; chi < static_cast<int>(data.chi_mod.size()); ++chi) {
    long long d = data.degrees[chi];
    std::vector<Cyclotomic> row(k);
    for (int j = 0; j < k; ++j) {
      int n = static_cast<int>(classes.reps[j].order());
      std::uint64_t zn = mod_pow(z_ell, static_cast<std::uint64_t>(e / n), ell);
      std::vector<long long> mult(n);
      std::uint64_t n_inv = mod_inverse(static_cast<std::uint64_t>(n) % ell, ell);
      long long total = 0;
      for (int m = 0; m < n; ++m) {
        std::uint64_t acc = 0;
        for (int u = 0; u < n; ++u) {
          std::uint64_t phase =
              mod_pow(zn, static_cast<std::uint64_t>(n - m) * u % n, ell);
          acc = (acc + data.chi_mod[chi][power_class[j][u]] * phase) % ell;
        }
        std::uint64_t c = acc * n_inv % ell;
        CHAINLOCAL_CHECK(c <= static_cast<std::uint64_t>(d),
                         "eigenvalue multiplicity out of range");
        mult[m] = static_cast<long long>(c);
        total += mult[m];
      }
      CHAINLOCAL_CHECK(total == d, "eigenvalue multiplicities do not sum to the degree");
      Cyclotomic value;
      for (int m = 0; m < n; ++m)
        if (mult[m] != 0)
          value = value + Cyclotomic::root_of_unity(n, m) * mult[m];
      row[j] = value.promoted(e == 0 ? 1 : e);
    }
    table.values.push_back(std::move(row));
    table.degrees.push_back(d);
  }

  // Deterministic row order: by degree, then by value vector.
  std::vector<int> order(table.count());
  for (int i = 0; i < table.count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    return std::lexicographical_compare(table.values[a].begin(), table.values[a].end(),
                                        table.values[b].begin(), table.values[b].end());
  });
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<long long> degrees;
  for (int i : order) {
    values.push_back(std::move(table.values[i]));
    degrees.push_back(table.degrees[i]);
  }
  table.values = std::move(values);
  table.degrees = std::move(degrees);

  // Row orthogonality, exactly.
  long long degree_square_sum = 0;
  for (long long d : table.degrees) degree_square_sum += d * d;
  CHAINLOCAL_CHECK(degree_square_sum == static_cast<long long>(table.group_order),
                   "degree squares do not sum to the group order");
  for (int a = 0; a < table.count(); ++a)
    for (int b = a; b < table.count(); ++b) {
      Cyclotomic sum;
      for (int j = 0; j < k; ++j)
        sum = sum + table.values[a][j] * table.values[b][j].conjugate() *
                        static_cast<long long>(table.class_sizes[j]);
      Cyclotomic expected =
          Cyclotomic::integer(a == b ? static_cast<long long>(table.group_order) : 0);
      CHAINLOCAL_CHECK(sum == expected, "row orthogonality failed");
    }

  return table;
}

}  // namespace

CharacterTable compute_character_table(const GroupHandle& G) {
  return dixon_table(G, 0);
}

CharacterTable compute_character_table_checked(const GroupHandle& G) {
  CharacterTable first = dixon_table(G, 0);
  std::uint64_t ell = dixon_prime(first.exponent, first.group_order, 0);
  CharacterTable second = dixon_table(G, ell + 1);
  bool same = first.degrees == second.degrees && first.count() == second.count();
  for (int i = 0; same && i < first.count(); ++i)
    for (int j = 0; same && j < first.num_classes; ++j)
      same = first.values[i][j] == second.values[i][j];
  CHAINLOCAL_CHECK(same, "character tables disagree across auxiliary primes");
  return first;
}

}  // namespace chainlocal
