#pragma once

#include <cstddef>
#include <vector>

#include "pdnet/matrix.hpp"
#include "pdnet/verdict.hpp"

namespace pdnet {

/// Determinant by cofactor expansion along the first row. Exponential; meant
/// for blocks of size <= 5.
GaussianRational determinant_laplace(const Matrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
GaussianRational determinant_bareiss(const Matrix& m);

/// Delta_{I,J}(M). Laplace expansion for |I| <= 4, Bareiss above. The empty
/// minor is 1.
GaussianRational minor(const Matrix& m, const IndexSet& rows, const IndexSet& cols);

/// (Delta_[1,1], ..., Delta_[1,n])
std::vector<GaussianRational> leading_principal_minors(const Matrix& m);

bool is_hermitian(const Matrix& m);

struct OracleVerdict : Verdict {
  std::vector<GaussianRational> leading_minors;
};

/// Hermitian + every leading principal minor a positive real.
OracleVerdict pd_oracle(const Matrix& m);

struct LduDecomposition {
  Matrix lower;     ///< unit lower triangular
  Matrix diagonal;  ///< diagonal D, D_kk = Delta_[1,k] / Delta_[1,k-1]
  Matrix upper;     ///< unit upper triangular
};

/// Doolittle elimination without pivoting. Throws SingularError for a
/// singular input and NoLduError when some leading principal minor vanishes.
LduDecomposition ldu_decompose(const Matrix& m);

struct RankFactorization {
  Matrix left;  ///< invertible M1
  std::size_t rank = 0;
  Matrix right;  ///< invertible M2
};

/// M = M1 * diag(I_r, 0) * M2 by full Gauss-Jordan elimination with row and
/// column operations.
RankFactorization rank_factorization(const Matrix& m);

std::size_t rank(const Matrix& m);

/// diag(1, ..., 1, 0, ..., 0) with r ones.
Matrix rank_projector(std::size_t n, std::size_t r);

}  // namespace pdnet
