#pragma once

#include <vector>

#include "latentfs/dataset.hpp"
#include "latentfs/graph.hpp"
#include "latentfs/matrix.hpp"
#include "latentfs/plsa.hpp"
#include "latentfs/quantizer.hpp"

namespace latentfs {

struct SpectralResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;  // false means max_iterations ran out; value is the best estimate
};

// Dominant eigenvalue magnitude of a nonnegative matrix by power iteration
// from the all-ones direction. For the rank-one graphs built here the first
// iterate is already exact.
SpectralResult spectral_radius(const Matrix &a, double tol = 1e-13,
                               int max_iterations = 1000);

// Walk scaling factor: damping / rho, so that r * rho = damping < 1 keeps
// the walk energy series convergent regardless of the graph's scale. A
// spectral radius at or below 1e-12 is treated as zero and r is just the
// damping itself.
double choose_r(double rho, double damping);

// Total discounted walk energy between every pair of nodes,
//   sum over l >= 1 of r^l A^l  ==  (I - rA)^-1 - I,
// evaluated in closed form through the LU inverse.
Matrix energy_matrix(const Matrix &a, double r);

// Row sums of the energy matrix: node i's total outgoing walk energy.
std::vector<double> scores(const Matrix &energy);

// Closed-form scores for the intact rank-one graph, used to cross-check
// the LU route: (I - r vv^T)^-1 reduces to I + r vv^T / (1 - r |v|^2).
std::vector<double> rank_one_scores(const std::vector<double> &relevancy, double r);

struct Ranking {
  std::vector<int> order;      // feature indices, best first
  std::vector<double> scores;  // index-aligned with the input features
  double r = 0.0;
  double spectral_radius = 0.0;
};

struct RankParams {
  int n_tokens = 6;
  PhiMode phi_mode = PhiMode::kProse;
  EmConfig em;
  double damping = 0.9;
  bool zero_diagonal = false;
};

// Scores the graph and sorts features by non-increasing score, ties by
// ascending index. Features whose relevancy values are exactly equal are
// mathematically tied, so they are given the identical score value before
// sorting; otherwise the last-ulp noise of the LU solve would order them
// arbitrarily.
Ranking rank_graph(const AffinityGraph &graph, double damping);

// The whole pipeline: quantize, fit the two-topic model, build the
// relevancy graph, score it.
Ranking rank(const FeatureMatrix &data, const RankParams &params);

}  // namespace latentfs
