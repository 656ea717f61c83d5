#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pdnet/gaussian.hpp"

namespace pdnet {

/// 1-based, strictly increasing row or column indices.
using IndexSet = std::vector<std::size_t>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix diagonal(const std::vector<GaussianRational>& d);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] const std::vector<GaussianRational>& entries() const noexcept { return entries_; }

  /// 0-based element access.
  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// 1-based element access with bounds checking, matching the x_{ij} notation.
  [[nodiscard]] const GaussianRational& at1(std::size_t i, std::size_t j) const;

  [[nodiscard]] Matrix conjugate_transpose() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// Checks that `s` is strictly increasing within [1, n].
void validate_index_set(const IndexSet& s, std::size_t n);

/// {1, ..., k}
IndexSet leading_set(std::size_t k);

/// Every k-subset of [1, n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k);

/// Label such as "1,2|1,3" for the pair (I, J).
std::string index_label(const IndexSet& rows, const IndexSet& cols);

}  // namespace pdnet
