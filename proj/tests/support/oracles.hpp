#pragma once

// Test-only oracles and generators. Nothing here calls the library routine it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pdnet/pdnet.hpp"

namespace pdnet::testing {

using Rng = std::mt19937_64;

/// det by the Leibniz permutation sum.
inline GaussianRational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational det;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    GaussianRational term = 1;
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m(r, perm[r]);
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline GaussianRational leibniz_minor(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  return leibniz_det(m.submatrix(rows, cols));
}

/// Product of factor matrices built entry by entry from the definitions.
inline Matrix naive_factor_product(const FactorSequence& fs, std::size_t n) {
  Matrix acc = Matrix::identity(n);
  for (const JacobiFactor& f : fs) {
    Matrix e = Matrix::identity(n);
    const std::size_t i = f.level - 1;
    if (f.kind == FactorKind::ascending) e(i, i + 1) = f.param;
    if (f.kind == FactorKind::descending) e(i + 1, i) = f.param;
    if (f.kind == FactorKind::diagonal) e(i, i) = f.param;
    acc = acc * e;
  }
  return acc;
}

/// I + t E_{i,j} (1-based).
inline Matrix transvection(std::size_t n, std::size_t i, std::size_t j, const GaussianRational& t) {
  Matrix m = Matrix::identity(n);
  m(i - 1, j - 1) += t;
  return m;
}

/// Every nonempty minor, keyed by "I|J".
inline std::map<std::string, GaussianRational> minor_table(const Matrix& m) {
  std::map<std::string, GaussianRational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k)
    for (const IndexSet& rows : subsets_of_size(m.rows(), k))
      for (const IndexSet& cols : subsets_of_size(m.rows(), k))
        out.emplace(index_label(rows, cols), leibniz_minor(m, rows, cols));
  return out;
}

inline bool in_table(const std::map<std::string, GaussianRational>& table, const GaussianRational& z) {
  return std::any_of(table.begin(), table.end(), [&](const auto& kv) { return kv.second == z; });
}

inline Rational random_rational(Rng& rng, int span = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_positive_rational(Rng& rng, int span = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(1, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(Rng& rng, bool complex = true) {
  if (!complex) return random_rational(rng);
  return {random_rational(rng), random_rational(rng)};
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex = false) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gaussian(rng, complex);
  return m;
}

/// Random n x n matrix of rank exactly r (product of n x r and r x n blocks,
/// retried until the rank is r according to the Leibniz oracle on minors).
inline Matrix random_rank_matrix(Rng& rng, std::size_t n, std::size_t r, bool complex = false) {
  if (r == 0) return Matrix::zero(n);
  while (true) {
    Matrix m = random_matrix(rng, n, r, complex) * random_matrix(rng, r, n, complex);
    bool full = false;
    for (const IndexSet& rows : subsets_of_size(n, r)) {
      for (const IndexSet& cols : subsets_of_size(n, r))
        if (!leibniz_minor(m, rows, cols).is_zero()) {
          full = true;
          break;
        }
      if (full) break;
    }
    if (full) return m;
  }
}

inline Matrix random_invertible(Rng& rng, std::size_t n, bool complex = false) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, complex);
    if (!leibniz_det(m).is_zero()) return m;
  }
}

/// Invertible with every leading principal minor nonzero.
inline Matrix random_ldu_matrix(Rng& rng, std::size_t n, bool complex = false) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, complex);
    bool ok = true;
    for (std::size_t k = 1; k <= n && ok; ++k) ok = !leibniz_minor(m, leading_set(k), leading_set(k)).is_zero();
    if (ok) return m;
  }
}

inline Matrix random_hermitian(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = random_rational(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = random_gaussian(rng);
      m(c, r) = m(r, c).conj();
    }
  }
  return m;
}

/// A* A + I for random complex A: always positive definite.
inline Matrix random_pd(Rng& rng, std::size_t n) {
  const Matrix a = random_matrix(rng, n, n, true);
  return a.conjugate_transpose() * a + Matrix::identity(n);
}

/// Random reduced word (1-based rows) for the longest permutation of n.
inline std::vector<std::size_t> random_reduced_word(Rng& rng, std::size_t n) {
  std::vector<std::size_t> at(n);
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::size_t> word;
  while (true) {
    std::vector<std::size_t> ascents;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (at[k] < at[k + 1]) ascents.push_back(k);
    if (ascents.empty()) return word;
    const std::size_t k = ascents[std::uniform_int_distribution<std::size_t>(0, ascents.size() - 1)(rng)];
    std::swap(at[k], at[k + 1]);
    word.push_back(k + 1);
  }
}

inline DoubleWiringDiagram random_diagram(Rng& rng, std::size_t n) {
  const auto blue = random_reduced_word(rng, n);
  const auto red = random_reduced_word(rng, n);
  std::vector<bool> is_blue(blue.size() + red.size(), false);
  std::fill(is_blue.begin(), is_blue.begin() + static_cast<std::ptrdiff_t>(blue.size()), true);
  std::shuffle(is_blue.begin(), is_blue.end(), rng);
  DoubleWiringDiagram d{n, {}};
  std::size_t b = 0, r = 0;
  for (bool blue_next : is_blue) {
    if (blue_next) d.crossings.push_back({WireColor::blue, blue[b++]});
    else d.crossings.push_back({WireColor::red, red[r++]});
  }
  return d;
}

/// Random quiver: up to `max_vertices` vertices, arrow multiplicities up to
/// `max_mult`, roughly a third frozen.
inline Quiver random_quiver(Rng& rng, std::size_t max_vertices = 8, int max_mult = 3) {
  const std::size_t v = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  std::vector<bool> flags(v);
  for (std::size_t k = 0; k < v; ++k) flags[k] = std::uniform_int_distribution<int>(0, 2)(rng) != 0;
  flags[0] = true;
  Quiver q(flags);
  std::uniform_int_distribution<int> mult(-max_mult, max_mult);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      const int m = mult(rng) / 2;  // biased toward sparse
      if (m > 0) q.add_arrows(a, b, m);
      if (m < 0) q.add_arrows(b, a, -m);
    }
  return q;
}

inline bool has_two_cycle_or_loop(const Quiver& q) {
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (q.arrows(u, u) != 0) return true;
    for (std::size_t v = 0; v < q.size(); ++v)
      if (q.arrows(u, v) > 0 && q.arrows(v, u) > 0) return true;
  }
  return false;
}

inline const Matrix& worked_example() {
  static const Matrix m{{1, 2, 4}, {2, 6, 8}, {4, 8, 18}};
  return m;
}

/// x_1̄(2)x_2̄(-1)x_1̄(-4)x_2̄(1)x_1̄(4)x_②(2)x_③(2)x_1(4)x_2(1)x_1(-4)x_2(-1)x_1(2)
inline FactorSequence worked_example_factors() {
  using K = FactorKind;
  return {{K::descending, 1, 2}, {K::descending, 2, -1}, {K::descending, 1, -4}, {K::descending, 2, 1},
          {K::descending, 1, 4}, {K::diagonal, 2, 2},    {K::diagonal, 3, 2},     {K::ascending, 1, 4},
          {K::ascending, 2, 1},  {K::ascending, 1, -4},  {K::ascending, 2, -1},   {K::ascending, 1, 2}};
}

/// The 3x3 network with weights a..i: descending a (2), b (1), c (2);
/// horizontal d, e, f; ascending g (2), h (1), i (2).
inline PlanarNetwork nine_weight_network(const std::vector<Rational>& w) {
  using K = FactorKind;
  return PlanarNetwork(3, {{K::descending, 2, w[0]}, {K::descending, 1, w[1]}, {K::descending, 2, w[2]},
                           {K::diagonal, 1, w[3]},   {K::diagonal, 2, w[4]},   {K::diagonal, 3, w[5]},
                           {K::ascending, 2, w[6]},  {K::ascending, 1, w[7]},  {K::ascending, 2, w[8]}});
}

/// Closed form of the nine-weight network's weight matrix.
inline Matrix nine_weight_closed_form(const std::vector<Rational>& w) {
  const GaussianRational a = w[0], b = w[1], c = w[2], d = w[3], e = w[4], f = w[5], g = w[6], h = w[7], i = w[8];
  return Matrix{{d, d * h, d * h * i},
                {b * d, b * d * h + e, b * d * h * i + e * g + e * i},
                {a * b * d, a * b * d * h + a * e + c * e, a * b * d * h * i + (a + c) * e * (g + i) + f}};
}

}  // namespace pdnet::testing
