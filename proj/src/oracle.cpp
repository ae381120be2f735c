#include "latentfs/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "latentfs/errors.hpp"

namespace latentfs::oracle {

namespace {

// Depth-first walk over intermediate nodes, accumulating edge products.
// Visits nodes in index order so the summation order is deterministic.
double walk_sum(const Matrix &a, std::size_t current, std::size_t target,
                int hops_left, double product) {
  if (hops_left == 1) return product * a(current, target);
  double total = 0.0;
  for (std::size_t next = 0; next < a.rows(); ++next) {
    total += walk_sum(a, next, target, hops_left - 1, product * a(current, next));
  }
  return total;
}

}  // namespace

double enumerate_paths(const Matrix &a, std::size_t i, std::size_t j, int l) {
  const std::size_t n = a.rows();
  if (i >= n || j >= n) {
    throw Error("OutOfRange", "node index out of range");
  }
  if (n > kMaxEnumerationNodes || l < 1 || l > kMaxEnumerationLength) {
    throw Error("BudgetExceeded",
                "enumeration limited to n <= " + std::to_string(kMaxEnumerationNodes) +
                    " and 1 <= l <= " + std::to_string(kMaxEnumerationLength) +
                    ", got n = " + std::to_string(n) + ", l = " + std::to_string(l));
  }
  return walk_sum(a, i, j, l, 1.0);
}

Matrix truncated_energy(const Matrix &a, double r, int L) {
  if (L < 1) throw Error("OutOfRange", "series length must be at least 1");
  Matrix power(a);
  Matrix total(a);
  double r_l = r;
  total *= r_l;
  for (int l = 2; l <= L; ++l) {
    power = power * a;
    r_l *= r;
    Matrix term(power);
    term *= r_l;
    total += term;
  }
  return total;
}

AbsorbingChain::AbsorbingChain(Matrix t, std::size_t n_absorbing)
    : t_(std::move(t)), q_(n_absorbing) {
  const std::size_t size = t_.rows();
  if (t_.cols() != size || q_ == 0 || q_ > size) {
    throw Error("InvalidChain", "canonical form needs a square matrix with at least "
                                "one absorbing state");
  }
  for (std::size_t i = 0; i < size; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      if (t_(i, j) < 0.0) {
        throw Error("InvalidChain", "negative entry at row " + std::to_string(i));
      }
      row_sum += t_(i, j);
    }
    if (std::fabs(row_sum - 1.0) > 1e-12) {
      throw Error("InvalidChain", "row " + std::to_string(i) + " sums to " +
                                      std::to_string(row_sum));
    }
  }
  for (std::size_t i = 0; i < q_; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (t_(i, j) != (i == j ? 1.0 : 0.0)) {
        throw Error("InvalidChain", "absorbing row " + std::to_string(i) +
                                        " is not a unit row");
      }
    }
  }
  // Every transient state must reach absorption; reverse reachability from
  // the absorbing block over positive entries.
  std::vector<bool> reaches(size, false);
  for (std::size_t i = 0; i < q_; ++i) reaches[i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = q_; i < size; ++i) {
      if (reaches[i]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (t_(i, j) > 0.0 && reaches[j]) {
          reaches[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  for (std::size_t i = q_; i < size; ++i) {
    if (!reaches[i]) {
      throw Error("InvalidChain", "transient state " + std::to_string(i) +
                                      " can never be absorbed");
    }
  }
}

Matrix AbsorbingChain::r_block() const {
  const std::size_t n = num_transient();
  Matrix r(n, q_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < q_; ++j) r(i, j) = t_(q_ + i, j);
  }
  return r;
}

Matrix AbsorbingChain::a_block() const {
  const std::size_t n = num_transient();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = t_(q_ + i, q_ + j);
  }
  return a;
}

Matrix fundamental_matrix(const AbsorbingChain &chain) {
  const Matrix a = chain.a_block();
  Matrix system = Matrix::identity(a.rows());
  system -= a;
  return system.inverse();
}

AbsorbLimit absorb_limit(const AbsorbingChain &chain, int l) {
  if (l < 1) throw Error("OutOfRange", "power must be at least 1");
  const Matrix &t = chain.t();
  const std::size_t q = chain.num_absorbing();
  const std::size_t n = chain.num_transient();

  AbsorbLimit out;
  out.t_power = t;
  for (int k = 2; k <= l; ++k) out.t_power = out.t_power * t;

  // sum_{k=0..l-1} A^k, term by term.
  const Matrix a = chain.a_block();
  Matrix partial = Matrix::identity(n);
  Matrix a_pow = Matrix::identity(n);
  for (int k = 1; k < l; ++k) {
    a_pow = a_pow * a;
    partial += a_pow;
  }
  const Matrix expected_lower_left = partial * chain.r_block();

  out.lower_left_dev = 0.0;
  out.lower_right_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const double dev = std::fabs(out.t_power(q + i, j) - expected_lower_left(i, j));
      out.lower_left_dev = std::max(out.lower_left_dev, dev);
    }
    for (std::size_t j = 0; j < n; ++j) {
      out.lower_right_max = std::max(out.lower_right_max, std::fabs(out.t_power(q + i, q + j)));
    }
  }
  return out;
}

}  // namespace latentfs::oracle
