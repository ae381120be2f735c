#pragma once

#include <cstddef>
#include <vector>

namespace latentfs {

// Dense row-major matrix of doubles. Small and deliberately plain: the
// pipeline works on matrices of a few dozen rows, so there is no blocking,
// no views, just contiguous storage and the handful of operations the
// library needs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix &other) const;
  Matrix &operator+=(const Matrix &other);
  Matrix &operator-=(const Matrix &other);
  Matrix &operator*=(double s);

  std::vector<double> row_sums() const;
  double max_abs() const;
  double max_abs_diff(const Matrix &other) const;

  // Inverse via LU decomposition with partial pivoting. Throws
  // Error("SingularMatrix", ...) when the best available pivot falls below
  // pivot_floor in magnitude.
  Matrix inverse(double pivot_floor = 1e-14) const;

  const std::vector<double> &data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace latentfs
