#pragma once

#include <cstddef>
#include <vector>

#include "circ/errors.hpp"
#include "circ/types.hpp"

namespace circ {

/// Row-major dense complex matrix. Bare storage for materialized operators
/// and residual checks; deliberately not a linear-algebra library.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

DenseMatrix identity_matrix(std::size_t n);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<Complex> multiply(const DenseMatrix& a, const std::vector<Complex>& v);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace circ
