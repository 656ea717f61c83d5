#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pdnet/gaussian.hpp"
#include "pdnet/matrix.hpp"

namespace pdnet {

enum class FactorKind {
  ascending,   ///< x_i(t)  = I + t E_{i,i+1}
  descending,  ///< x_ī(t)  = I + t E_{i+1,i}
  diagonal,    ///< x_ⓘ(t) = I + (t-1) E_{i,i}; t = 0 allowed (generalized)
};

std::string_view kind_name(FactorKind kind) noexcept;  // "asc" | "desc" | "diag"
FactorKind kind_from_name(std::string_view name);

/// One generalized elementary Jacobi matrix. Levels are 1-based.
struct JacobiFactor {
  FactorKind kind = FactorKind::diagonal;
  std::size_t level = 1;
  GaussianRational param;

  friend bool operator==(const JacobiFactor&, const JacobiFactor&) = default;
};

using FactorSequence = std::vector<JacobiFactor>;

/// Throws LevelRangeError unless the level fits an n x n matrix.
void validate_factor(const JacobiFactor& f, std::size_t n);

Matrix factor_to_matrix(const JacobiFactor& f, std::size_t n);

/// Ordered product of the factor matrices (identity for an empty sequence).
Matrix factors_product(std::span<const JacobiFactor> factors, std::size_t n);

/// Adjacent-factor expansion of the transvection I + t E_{i,j}, i != j.
/// Upper case (i < j) uses only ascending factors, lower case only descending.
FactorSequence adjacent_chain_row_addition(std::size_t i, std::size_t j, const GaussianRational& t, std::size_t n);

/// Expansion of the row-switching matrix I + E_{ij} + E_{ji} - E_{ii} - E_{jj}
/// as (I - E_{ij})(I + E_{ji})(I - E_{ij})(I - 2E_{jj}).
FactorSequence row_swap_chain(std::size_t i, std::size_t j, std::size_t n);

/// Factorization of an invertible matrix. Never emits a zero diagonal factor.
FactorSequence factorize_invertible(const Matrix& m);

/// Factorization of an arbitrary square matrix via its rank factorization.
FactorSequence factorize_general(const Matrix& m);

/// Factorization grouped as descending*, diagonal*, ascending*, built from the
/// LDU decomposition. Throws NoLduError / SingularError.
FactorSequence factorize_ldu_form(const Matrix& m);

}  // namespace pdnet
