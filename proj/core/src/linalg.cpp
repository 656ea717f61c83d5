#include "pdnet/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "pdnet/errors.hpp"

namespace pdnet {

std::string_view reason_name(PdReason reason) noexcept {
  switch (reason) {
    case PdReason::positive_definite: return "positive-definite";
    case PdReason::not_hermitian: return "not-hermitian";
    case PdReason::zero_leading_minor: return "zero-leading-minor";
    case PdReason::negative_value: return "negative-value";
    case PdReason::non_real_value: return "non-real-value";
  }
  return "unknown";
}

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw SizeMismatchError(std::string(what) + " needs a square matrix");
}

GaussianRational laplace_rec(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  GaussianRational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        sub(r - 1, cc++) = m(r, k);
      }
    }
    GaussianRational term = m(0, c) * laplace_rec(sub);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

GaussianRational determinant_laplace(const Matrix& m) {
  require_square(m, "determinant");
  return laplace_rec(m);
}

GaussianRational determinant_bareiss(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix a = m;
  bool negate = false;
  GaussianRational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

GaussianRational minor(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  require_square(m, "minor");
  if (rows.size() != cols.size()) {
    throw SizeMismatchError("minor with |I| = " + std::to_string(rows.size()) + " != |J| = " +
                            std::to_string(cols.size()));
  }
  validate_index_set(rows, m.rows());
  validate_index_set(cols, m.cols());
  const Matrix sub = m.submatrix(rows, cols);
  return rows.size() <= 4 ? laplace_rec(sub) : determinant_bareiss(sub);
}

std::vector<GaussianRational> leading_principal_minors(const Matrix& m) {
  require_square(m, "leading principal minors");
  std::vector<GaussianRational> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    const IndexSet s = leading_set(k);
    out.push_back(minor(m, s, s));
  }
  return out;
}

bool is_hermitian(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (m(r, c) != m(c, r).conj()) return false;
  return true;
}

OracleVerdict pd_oracle(const Matrix& m) {
  OracleVerdict v;
  if (!is_hermitian(m)) {
    v.reason = PdReason::not_hermitian;
    return v;
  }
  v.leading_minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < v.leading_minors.size(); ++k) {
    const GaussianRational& d = v.leading_minors[k];
    if (!d.is_real()) throw std::logic_error("leading principal minor of a Hermitian matrix is not real");
    if (d.is_zero() || d.re().sign() < 0) {
      v.reason = d.is_zero() ? PdReason::zero_leading_minor : PdReason::negative_value;
      v.witness = k + 1;
      return v;
    }
  }
  v.is_pd = true;
  v.reason = PdReason::positive_definite;
  return v;
}

LduDecomposition ldu_decompose(const Matrix& m) {
  require_square(m, "LDU decomposition");
  const std::size_t n = m.rows();
  const bool singular = determinant_bareiss(m).is_zero();

  Matrix a = m;
  LduDecomposition out{Matrix::identity(n), Matrix(n, n), Matrix::identity(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const GaussianRational pivot = a(k, k);
    if (pivot.is_zero()) {
      const std::string msg = "leading principal minor of order " + std::to_string(k + 1) + " vanishes";
      if (singular) throw SingularError("singular matrix: " + msg, k + 1);
      throw NoLduError(msg, k + 1);
    }
    out.diagonal(k, k) = pivot;
    for (std::size_t j = k + 1; j < n; ++j) out.upper(k, j) = a(k, j) / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const GaussianRational l = a(i, k) / pivot;
      out.lower(i, k) = l;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  return out;
}

RankFactorization rank_factorization(const Matrix& m) {
  require_square(m, "rank factorization");
  const std::size_t n = m.rows();
  Matrix a = m;
  // Invariant: M = left * a * right.
  Matrix left = Matrix::identity(n);
  Matrix right = Matrix::identity(n);

  auto swap_rows = [&](std::size_t p, std::size_t q) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(q, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(left(r, p), left(r, q));
  };
  auto swap_cols = [&](std::size_t p, std::size_t q) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
    for (std::size_t c = 0; c < n; ++c) std::swap(right(p, c), right(q, c));
  };

  std::size_t r = 0;
  for (; r < n; ++r) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = r; i < n && pr == n; ++i)
      for (std::size_t j = r; j < n; ++j)
        if (!a(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) break;
    if (pr != r) swap_rows(pr, r);
    if (pc != r) swap_cols(pc, r);

    // Row scale: a <- S^{-1} a, left <- left * S where S = diag(.., pivot, ..).
    const GaussianRational pivot = a(r, r);
    for (std::size_t c = 0; c < n; ++c) a(r, c) /= pivot;
    for (std::size_t i = 0; i < n; ++i) left(i, r) *= pivot;

    // Row eliminations: row_i -= f row_r; left gains column_r += f column_i.
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, r).is_zero()) continue;
      const GaussianRational f = a(i, r);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(r, c);
      for (std::size_t k = 0; k < n; ++k) left(k, r) += f * left(k, i);
    }
    // Column eliminations: col_j -= g col_r; right gains row_r += g row_j.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == r || a(r, j).is_zero()) continue;
      const GaussianRational g = a(r, j);
      for (std::size_t k = 0; k < n; ++k) a(k, j) -= g * a(k, r);
      for (std::size_t c = 0; c < n; ++c) right(r, c) += g * right(j, c);
    }
  }
  return {std::move(left), r, std::move(right)};
}

std::size_t rank(const Matrix& m) { return rank_factorization(m).rank; }

Matrix rank_projector(std::size_t n, std::size_t r) {
  Matrix p(n, n);
  for (std::size_t k = 0; k < r && k < n; ++k) p(k, k) = 1;
  return p;
}

}  // namespace pdnet
