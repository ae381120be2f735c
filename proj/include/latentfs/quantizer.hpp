#pragma once

#include <vector>

#include "latentfs/dataset.hpp"
#include "latentfs/matrix.hpp"

namespace latentfs {

// How the per-class score table is filled from squared distances to the
// class means of a feature column:
//
//   kProse   scores class k by the distance to the OTHER classes' means,
//            so a sample sitting right on its own class mean, far from the
//            rest, gets a score near 1 for its class. Default.
//   kLiteral scores class k by the distance to class k's own mean. Kept as
//            a switch because it reads naturally from the formula but
//            rewards samples far from their own class, the opposite
//            separability signal.
enum class PhiMode { kProse, kLiteral };

// Per-sample class score table for one feature. Rows are normalized to sum
// to one; a row whose raw scores are all zero (constant column) falls back
// to uniform 1/K. normalizer keeps the pre-normalization row sums, mostly
// as a diagnostic for that fallback.
struct PhiScores {
  Matrix phi;                      // m x K
  std::vector<double> normalizer;  // length m
};

// Token stream and histogram for every feature.
struct TokenizedFeatures {
  std::vector<std::vector<int>> tokens;  // n rows of m tokens, values 1..n_tokens
  Matrix counts;                         // n x n_tokens histogram per feature
  int n_tokens = 0;
};

// Guards the variance denominator; a constant column has zero variance in
// every class and would otherwise divide by zero.
inline constexpr double kVarianceFloor = 1e-12;

PhiScores phi_scores(const std::vector<double> &column,
                     const std::vector<double> &class_means,
                     double sigma_sq_sum, PhiMode mode);

// pi[s] = phi[s][label of s]: the score the sample's own class received.
std::vector<double> priors(const PhiScores &phi, const std::vector<int> &labels);

// Equal-width binning of [0, 1] into n_tokens bins; bin t covers
// [(t-1)/T, t/T) and the last bin closes at 1. Values may stray outside
// [0, 1] by at most 1e-12 (they are clamped); anything further is an error.
std::vector<int> tokenize(const std::vector<double> &pi, int n_tokens);

TokenizedFeatures quantize_all(const FeatureMatrix &data, int n_tokens, PhiMode mode);

}  // namespace latentfs
