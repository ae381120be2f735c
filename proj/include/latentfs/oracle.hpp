#pragma once

#include <cstddef>

#include "latentfs/matrix.hpp"

namespace latentfs::oracle {

// Ground-truth reference computations for the walk-energy algebra. These
// are deliberately slow and direct (explicit enumeration, term-by-term
// series) so the fast closed-form code elsewhere has something independent
// to be checked against. Nothing in the ranking pipeline calls this.

// Enumeration is exponential, so inputs are capped hard.
inline constexpr std::size_t kMaxEnumerationNodes = 8;
inline constexpr int kMaxEnumerationLength = 12;

// Sum over every walk from i to j of exactly l hops of the product of edge
// weights along the walk, enumerated over all n^(l-1) intermediate node
// sequences. Equals (A^l)(i, j).
double enumerate_paths(const Matrix &a, std::size_t i, std::size_t j, int l);

// Partial series sum_{l=1..L} r^l A^l by iterated multiplication, the
// definition the closed form (I - rA)^-1 - I is the limit of.
Matrix truncated_energy(const Matrix &a, double r, int L);

// Absorbing Markov chain in canonical block layout, absorbing states first:
//
//       t = | I  0 |      q absorbing rows, then n transient rows
//           | R  A |
//
// Construction checks the layout: rows are stochastic to 1e-12, absorbing
// rows are exact unit rows, entries are nonnegative, and every transient
// state can reach an absorbing one (otherwise the chain never absorbs and
// the fundamental matrix is meaningless).
class AbsorbingChain {
 public:
  AbsorbingChain(Matrix t, std::size_t n_absorbing);

  const Matrix &t() const { return t_; }
  std::size_t num_absorbing() const { return q_; }
  std::size_t num_transient() const { return t_.rows() - q_; }
  Matrix r_block() const;  // n x q, transient to absorbing
  Matrix a_block() const;  // n x n, transient to transient

 private:
  Matrix t_;
  std::size_t q_;
};

// (I - A)^-1 over the transient block: expected visit counts before
// absorption.
Matrix fundamental_matrix(const AbsorbingChain &chain);

struct AbsorbLimit {
  Matrix t_power;          // T^l
  double lower_left_dev;   // max |T^l lower-left - (sum_{k<l} A^k) R|
  double lower_right_max;  // max |T^l lower-right|, decays to zero in l
};

// Raises the chain matrix to the l-th power and measures it against the
// block identity T^l = [[I, 0], [(I + A + ... + A^(l-1)) R, A^l]].
AbsorbLimit absorb_limit(const AbsorbingChain &chain, int l);

}  // namespace latentfs::oracle
