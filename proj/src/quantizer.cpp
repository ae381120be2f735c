#include "latentfs/quantizer.hpp"

#include <cmath>
#include <string>

#include "latentfs/errors.hpp"

namespace latentfs {

PhiScores phi_scores(const std::vector<double> &column,
                     const std::vector<double> &class_means,
                     double sigma_sq_sum, PhiMode mode) {
  const std::size_t m = column.size();
  const std::size_t K = class_means.size();
  PhiScores out;
  out.phi = Matrix(m, K);
  out.normalizer.assign(m, 0.0);

  std::vector<double> d2(K);
  for (std::size_t s = 0; s < m; ++s) {
    double total = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double d = column[s] - class_means[k];
      d2[k] = (d * d) / (sigma_sq_sum + kVarianceFloor);
      total += d2[k];
    }
    double z = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double raw = (mode == PhiMode::kProse) ? total - d2[k] : d2[k];
      out.phi(s, k) = raw;
      z += raw;
    }
    out.normalizer[s] = z;
    if (z > 0.0) {
      for (std::size_t k = 0; k < K; ++k) out.phi(s, k) /= z;
    } else {
      for (std::size_t k = 0; k < K; ++k) out.phi(s, k) = 1.0 / static_cast<double>(K);
    }
  }
  return out;
}

std::vector<double> priors(const PhiScores &phi, const std::vector<int> &labels) {
  std::vector<double> pi(labels.size());
  for (std::size_t s = 0; s < labels.size(); ++s) {
    pi[s] = phi.phi(s, static_cast<std::size_t>(labels[s] - 1));
  }
  return pi;
}

std::vector<int> tokenize(const std::vector<double> &pi, int n_tokens) {
  constexpr double kSlack = 1e-12;
  std::vector<int> tokens(pi.size());
  for (std::size_t s = 0; s < pi.size(); ++s) {
    double v = pi[s];
    if (v < -kSlack || v > 1.0 + kSlack) {
      throw Error("OutOfRange", "prior " + std::to_string(v) + " at sample " +
                                    std::to_string(s) + " is outside [0, 1]");
    }
    v = std::min(1.0, std::max(0.0, v));
    int t = static_cast<int>(v * n_tokens) + 1;
    if (t > n_tokens) t = n_tokens;  // v == 1 lands in the closed last bin
    tokens[s] = t;
  }
  return tokens;
}

TokenizedFeatures quantize_all(const FeatureMatrix &data, int n_tokens, PhiMode mode) {
  const std::size_t m = data.num_samples();
  const std::size_t n = data.num_features();
  const int K = data.num_classes;
  const ClassStats stats = class_stats(data);

  TokenizedFeatures out;
  out.n_tokens = n_tokens;
  out.tokens.resize(n);
  out.counts = Matrix(n, n_tokens);

  std::vector<double> column(m);
  std::vector<double> means(K);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t s = 0; s < m; ++s) column[s] = data.values(s, f);
    for (int k = 0; k < K; ++k) means[k] = stats.mu(k, f);
    const PhiScores phi = phi_scores(column, means, stats.sigma_sq_sum[f], mode);
    out.tokens[f] = tokenize(priors(phi, data.labels), n_tokens);
    for (int t : out.tokens[f]) out.counts(f, t - 1) += 1.0;
  }
  return out;
}

}  // namespace latentfs
