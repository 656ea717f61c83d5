#include "pdnet/jacobi.hpp"

#include <string>

#include "pdnet/errors.hpp"
#include "pdnet/linalg.hpp"

namespace pdnet {

std::string_view kind_name(FactorKind kind) noexcept {
  switch (kind) {
    case FactorKind::ascending: return "asc";
    case FactorKind::descending: return "desc";
    case FactorKind::diagonal: return "diag";
  }
  return "?";
}

FactorKind kind_from_name(std::string_view name) {
  if (name == "asc") return FactorKind::ascending;
  if (name == "desc") return FactorKind::descending;
  if (name == "diag") return FactorKind::diagonal;
  throw ParseError("unknown factor kind '" + std::string(name) + "'", 0);
}

void validate_factor(const JacobiFactor& f, std::size_t n) {
  const std::size_t max_level = f.kind == FactorKind::diagonal ? n : n - 1;
  if (f.level < 1 || f.level > max_level) {
    throw LevelRangeError(std::string(kind_name(f.kind)) + " factor level " + std::to_string(f.level) +
                          " outside [1," + std::to_string(max_level) + "] for n = " + std::to_string(n));
  }
}

Matrix factor_to_matrix(const JacobiFactor& f, std::size_t n) {
  validate_factor(f, n);
  Matrix m = Matrix::identity(n);
  const std::size_t i = f.level - 1;
  switch (f.kind) {
    case FactorKind::ascending: m(i, i + 1) = f.param; break;
    case FactorKind::descending: m(i + 1, i) = f.param; break;
    case FactorKind::diagonal: m(i, i) = f.param; break;
  }
  return m;
}

Matrix factors_product(std::span<const JacobiFactor> factors, std::size_t n) {
  // Right-multiplying by a Jacobi factor is a single column operation.
  Matrix m = Matrix::identity(n);
  for (const JacobiFactor& f : factors) {
    validate_factor(f, n);
    const std::size_t i = f.level - 1;
    switch (f.kind) {
      case FactorKind::ascending:  // col_{i+1} += t col_i
        for (std::size_t r = 0; r < n; ++r)
          if (!m(r, i).is_zero()) m(r, i + 1) += f.param * m(r, i);
        break;
      case FactorKind::descending:  // col_i += t col_{i+1}
        for (std::size_t r = 0; r < n; ++r)
          if (!m(r, i + 1).is_zero()) m(r, i) += f.param * m(r, i + 1);
        break;
      case FactorKind::diagonal:
        for (std::size_t r = 0; r < n; ++r) m(r, i) *= f.param;
        break;
    }
  }
  return m;
}

namespace {

void check_pair(std::size_t i, std::size_t j, std::size_t n) {
  if (i == j) throw InvalidTransvectionError("transvection needs i != j (got " + std::to_string(i) + ")");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw IndexError("transvection indices (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1," +
                     std::to_string(n) + "]");
  }
}

void append_chain(FactorSequence& out, std::size_t i, std::size_t j, const GaussianRational& t) {
  if (j == i + 1) {
    out.push_back({FactorKind::ascending, i, t});
    return;
  }
  if (i == j + 1) {
    out.push_back({FactorKind::descending, j, t});
    return;
  }
  if (i < j) {
    // I + tE_{i,j} = (I + tE_{i,j-1})(I + E_{j-1,j})(I - tE_{i,j-1})(I - E_{j-1,j})
    append_chain(out, i, j - 1, t);
    out.push_back({FactorKind::ascending, j - 1, 1});
    append_chain(out, i, j - 1, -t);
    out.push_back({FactorKind::ascending, j - 1, -1});
  } else {
    // Transpose of the upper identity:
    // I + tE_{i,j} = (I - E_{i,i-1})(I - tE_{i-1,j})(I + E_{i,i-1})(I + tE_{i-1,j})
    out.push_back({FactorKind::descending, i - 1, -1});
    append_chain(out, i - 1, j, -t);
    out.push_back({FactorKind::descending, i - 1, 1});
    append_chain(out, i - 1, j, t);
  }
}

}  // namespace

FactorSequence adjacent_chain_row_addition(std::size_t i, std::size_t j, const GaussianRational& t, std::size_t n) {
  check_pair(i, j, n);
  FactorSequence out;
  append_chain(out, i, j, t);
  return out;
}

FactorSequence row_swap_chain(std::size_t i, std::size_t j, std::size_t n) {
  check_pair(i, j, n);
  FactorSequence out;
  append_chain(out, i, j, -1);
  append_chain(out, j, i, 1);
  append_chain(out, i, j, -1);
  out.push_back({FactorKind::diagonal, j, -1});  // x_ⓙ(-1) = I - 2E_{jj}
  return out;
}

FactorSequence factorize_invertible(const Matrix& m) {
  if (!m.is_square()) throw SizeMismatchError("factorization needs a square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  // Row reduction E_k ... E_1 M = I gives M = E_1^{-1} ... E_k^{-1}; each
  // inverse is expanded and appended as soon as it is known.
  FactorSequence out;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw SingularError("singular matrix has no Jacobi factorization", c + 1);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(p, k));
      const FactorSequence swap = row_swap_chain(c + 1, p + 1, n);
      out.insert(out.end(), swap.begin(), swap.end());
    }
    const GaussianRational pivot = a(c, c);
    if (pivot != GaussianRational(1)) {
      for (std::size_t k = 0; k < n; ++k) a(c, k) /= pivot;
      out.push_back({FactorKind::diagonal, c + 1, pivot});
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) a(r, k) -= f * a(c, k);
      // inverse of (I - f E_{rc}) is I + f E_{rc}
      append_chain(out, r + 1, c + 1, f);
    }
  }
  return out;
}

FactorSequence factorize_general(const Matrix& m) {
  if (!m.is_square()) throw SizeMismatchError("factorization needs a square matrix");
  const std::size_t n = m.rows();
  const RankFactorization rf = rank_factorization(m);
  if (rf.rank == n) return factorize_invertible(m);
  FactorSequence out = factorize_invertible(rf.left);
  for (std::size_t s = rf.rank + 1; s <= n; ++s) out.push_back({FactorKind::diagonal, s, 0});
  const FactorSequence right = factorize_invertible(rf.right);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

FactorSequence factorize_ldu_form(const Matrix& m) {
  const LduDecomposition ldu = ldu_decompose(m);
  const std::size_t n = m.rows();
  FactorSequence out;
  // L = prod over columns j (ascending) of prod_{i>j} (I + l_ij E_ij).
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i)
      if (!ldu.lower(i, j).is_zero()) append_chain(out, i + 1, j + 1, ldu.lower(i, j));
  for (std::size_t k = 0; k < n; ++k)
    if (ldu.diagonal(k, k) != GaussianRational(1)) out.push_back({FactorKind::diagonal, k + 1, ldu.diagonal(k, k)});
  // U = R_{n-1} ... R_1 with R_j = prod_{k>j} (I + u_jk E_jk); the factors
  // inside one row commute, emitted from the far column inwards.
  for (std::size_t j = n; j-- > 0;)
    for (std::size_t k = n; k-- > j + 1;)
      if (!ldu.upper(j, k).is_zero()) append_chain(out, j + 1, k + 1, ldu.upper(j, k));
  return out;
}

}  // namespace pdnet
