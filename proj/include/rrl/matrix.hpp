#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rrl/errors.hpp"

namespace rrl {

// Dense row-major rectangular matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix r(row_idx.size(), col_idx.size(), data_.empty() ? T{} : data_.front());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) {
        r(i, j) = (*this)(row_idx[i], col_idx[j]);
      }
    }
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_, data_.empty() ? T{} : data_.front());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace rrl
