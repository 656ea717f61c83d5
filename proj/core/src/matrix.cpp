#include "pdnet/matrix.hpp"

#include <sstream>

#include "pdnet/errors.hpp"

namespace pdnet {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw SizeMismatchError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw SizeMismatchError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<GaussianRational>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

const GaussianRational& Matrix::at1(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  return (*this)(i - 1, j - 1);
}

Matrix Matrix::conjugate_transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out(a, b) = (*this)(rows[a] - 1, cols[b] - 1);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatchError("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

void validate_index_set(const IndexSet& s, std::size_t n) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > n) {
      throw IndexError("index " + std::to_string(s[k]) + " outside [1," + std::to_string(n) + "]");
    }
    if (k > 0 && s[k] <= s[k - 1]) throw IndexError("index set is not strictly increasing");
  }
}

IndexSet leading_set(std::size_t k) {
  IndexSet s(k);
  for (std::size_t j = 0; j < k; ++j) s[j] = j + 1;
  return s;
}

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur = leading_set(k);
  while (true) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - k + pos) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t j = pos; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string index_label(const IndexSet& rows, const IndexSet& cols) {
  std::string out;
  auto append = [&out](const IndexSet& s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(s[k]);
    }
  };
  append(rows);
  out += '|';
  append(cols);
  return out;
}

}  // namespace pdnet
