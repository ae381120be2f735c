#include "latentfs/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "latentfs/errors.hpp"

namespace latentfs {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix &other) const {
  if (cols_ != other.rows_) {
    throw Error("ShapeMismatch", "cannot multiply " + std::to_string(rows_) + "x" +
                                     std::to_string(cols_) + " by " +
                                     std::to_string(other.rows_) + "x" +
                                     std::to_string(other.cols_));
  }
  Matrix out(rows_, other.cols_);
  // i-k-j order so the inner loop streams over contiguous rows.
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += aik * other(k, j);
      }
    }
  }
  return out;
}

Matrix &Matrix::operator+=(const Matrix &other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix &Matrix::operator*=(double s) {
  for (double &v : data_) v *= s;
  return *this;
}

std::vector<double> Matrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  }
  return sums;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

double Matrix::max_abs_diff(const Matrix &other) const {
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m = std::max(m, std::fabs(data_[i] - other.data_[i]));
  }
  return m;
}

Matrix Matrix::inverse(double pivot_floor) const {
  if (rows_ != cols_) {
    throw Error("ShapeMismatch", "inverse of non-square matrix");
  }
  const std::size_t n = rows_;
  Matrix lu(*this);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::fabs(lu(i, k));
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best < pivot_floor) {
      throw Error("SingularMatrix",
                  "pivot " + std::to_string(best) + " below floor at column " +
                      std::to_string(k));
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      std::swap(perm[k], perm[pivot]);
    }
    const double diag = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu(i, k) / diag;
      lu(i, k) = factor;  // unit lower triangle lives below the diagonal
      for (std::size_t j = k + 1; j < n; ++j) {
        lu(i, j) -= factor * lu(k, j);
      }
    }
  }

  // Solve LU x = P e_c column by column.
  Matrix inv(n, n);
  std::vector<double> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (perm[i] == c) ? 1.0 : 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
      x[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double acc = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= lu(ii, j) * x[j];
      x[ii] = acc / lu(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = x[i];
  }
  return inv;
}

}  // namespace latentfs
