#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "latentfs/matrix.hpp"

namespace latentfs {

// The aspect model always has exactly two latent topics: topic 0 is wired
// to high token values by the initial token distributions, topic 1 to low
// ones, so P(topic 0 | feature) reads directly as a relevancy weight.
inline constexpr int kNumTopics = 2;

struct EmConfig {
  int max_iterations = 100;
  double rel_tolerance = 1e-6;  // stop when |dLL| / max(|LL|, eps) drops below
  double smoothing = 0.0;       // added to every count cell before fitting
};

struct PlsaModel {
  std::array<double, kNumTopics> p_z{0.5, 0.5};
  Matrix p_f_given_z;  // n x 2
  Matrix p_t_given_z;  // T x 2
  Matrix p_z_given_f;  // n x 2, Bayes posterior from the final parameters
  std::vector<double> log_likelihood_trace;  // one entry per completed iteration
  int iterations_run = 0;
  bool converged = false;
};

// Responsibility P(z | f, t) for every count cell, stored flat.
class Posteriors {
 public:
  Posteriors(std::size_t n_features, std::size_t n_tokens)
      : n_tokens_(n_tokens), data_(n_features * n_tokens * kNumTopics, 0.0) {}

  double &at(std::size_t f, std::size_t t, int z) {
    return data_[(f * n_tokens_ + t) * kNumTopics + static_cast<std::size_t>(z)];
  }
  double at(std::size_t f, std::size_t t, int z) const {
    return data_[(f * n_tokens_ + t) * kNumTopics + static_cast<std::size_t>(z)];
  }

 private:
  std::size_t n_tokens_;
  std::vector<double> data_;
};

// Deterministic starting point. Token distributions are mirrored linear
// ramps, P(t | topic 0) proportional to 1..T and P(t | topic 1) the
// reverse; features start uniform and the topic prior is split evenly.
// Fitting is deterministic because of this fixed start: no restarts.
PlsaModel init_priors(std::size_t n_features, std::size_t n_tokens);

// One expectation step: P(z | f, t) from the current parameters. Cells
// whose mixture probability is zero get the uniform 0.5/0.5 fallback.
Posteriors e_step(const PlsaModel &model, const Matrix &counts);

// One maximization step: re-estimates P(t|z), P(f|z) and P(z) in place
// from count-weighted responsibilities. A topic with zero total weight
// falls back to uniform distributions.
void m_step(const Posteriors &post, const Matrix &counts, PlsaModel &model);

// Sum over cells of count * log P(t | f), with P(t | f) mixed through the
// Bayes posterior P(z | f). Probabilities are clamped at 1e-300 before the
// log so empty models yield a large negative number instead of -inf.
double log_likelihood(const PlsaModel &model, const Matrix &counts);

// P(z | f) by Bayes from P(f | z) and P(z); uniform when both topics give
// the feature zero mass.
Matrix topic_posterior(const PlsaModel &model);

// Alternates e_step and m_step from init_priors until the relative
// log-likelihood improvement drops below config.rel_tolerance or
// max_iterations is hit. The trace holds the likelihood after each
// iteration and is non-decreasing.
PlsaModel fit(const Matrix &counts, const EmConfig &config);

}  // namespace latentfs
