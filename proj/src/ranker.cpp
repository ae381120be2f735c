#include "latentfs/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numeric>

#include "latentfs/errors.hpp"

namespace latentfs {

SpectralResult spectral_radius(const Matrix &a, double tol, int max_iterations) {
  const std::size_t n = a.rows();
  SpectralResult res;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);

  auto apply = [&](const std::vector<double> &in, std::vector<double> &out) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * in[j];
      out[i] = acc;
    }
  };

  apply(x, y);
  double prev = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      // The iterate died: every walk from the ones direction vanishes.
      return {0.0, it, true};
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    apply(x, y);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += x[i] * y[i];
    res.value = lambda;
    res.iterations = it;
    if (it > 1 && std::fabs(lambda - prev) <= tol * std::max(std::fabs(lambda), 1e-30)) {
      res.converged = true;
      return res;
    }
    prev = lambda;
  }
  return res;  // converged stays false; caller decides what to do with the estimate
}

double choose_r(double rho, double damping) {
  constexpr double kRhoFloor = 1e-12;
  if (rho <= kRhoFloor) return damping;
  return damping / rho;
}

Matrix energy_matrix(const Matrix &a, double r) {
  const std::size_t n = a.rows();
  Matrix system = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      system(i, j) -= r * a(i, j);
    }
  }
  Matrix energy = system.inverse();
  for (std::size_t i = 0; i < n; ++i) energy(i, i) -= 1.0;
  return energy;
}

std::vector<double> scores(const Matrix &energy) { return energy.row_sums(); }

std::vector<double> rank_one_scores(const std::vector<double> &relevancy, double r) {
  double norm_sq = 0.0, sum = 0.0;
  for (double v : relevancy) {
    norm_sq += v * v;
    sum += v;
  }
  const double denom = 1.0 - r * norm_sq;
  if (denom <= 0.0) {
    throw Error("SingularMatrix", "r too large for the closed form");
  }
  const double c = r / denom * sum;
  std::vector<double> s(relevancy.size());
  for (std::size_t i = 0; i < relevancy.size(); ++i) s[i] = c * relevancy[i];
  return s;
}

Ranking rank_graph(const AffinityGraph &graph, double damping) {
  const std::size_t n = graph.a.rows();
  Ranking ranking;

  const SpectralResult rho = spectral_radius(graph.a);
  ranking.spectral_radius = rho.value;
  ranking.r = choose_r(rho.value, damping);
  ranking.scores = scores(energy_matrix(graph.a, ranking.r));

  // Features with bit-identical relevancy are mathematically tied; give
  // them one shared score (the first one computed) so the index tie-break
  // below is what actually orders them.
  std::map<double, double> canonical;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = canonical.emplace(graph.relevancy[i], ranking.scores[i]);
    if (!inserted) ranking.scores[i] = it->second;
  }

  ranking.order.resize(n);
  std::iota(ranking.order.begin(), ranking.order.end(), 0);
  std::sort(ranking.order.begin(), ranking.order.end(), [&](int lhs, int rhs) {
    if (ranking.scores[lhs] != ranking.scores[rhs]) {
      return ranking.scores[lhs] > ranking.scores[rhs];
    }
    return lhs < rhs;
  });
  return ranking;
}

Ranking rank(const FeatureMatrix &data, const RankParams &params) {
  const TokenizedFeatures tokenized =
      quantize_all(data, params.n_tokens, params.phi_mode);
  const PlsaModel model = fit(tokenized.counts, params.em);
  const AffinityGraph graph = build_graph(model, params.zero_diagonal);
  return rank_graph(graph, params.damping);
}

}  // namespace latentfs
