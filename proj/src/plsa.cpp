#include "latentfs/plsa.hpp"

#include <cmath>

#include "latentfs/errors.hpp"

namespace latentfs {

namespace {
constexpr double kLogFloor = 1e-300;
}

PlsaModel init_priors(std::size_t n_features, std::size_t n_tokens) {
  PlsaModel model;
  model.p_f_given_z = Matrix(n_features, kNumTopics, 1.0 / static_cast<double>(n_features));
  model.p_t_given_z = Matrix(n_tokens, kNumTopics);
  const double ramp_sum = static_cast<double>(n_tokens * (n_tokens + 1)) / 2.0;
  for (std::size_t t = 0; t < n_tokens; ++t) {
    model.p_t_given_z(t, 0) = static_cast<double>(t + 1) / ramp_sum;
    model.p_t_given_z(t, 1) = static_cast<double>(n_tokens - t) / ramp_sum;
  }
  model.p_z = {0.5, 0.5};
  model.p_z_given_f = topic_posterior(model);
  return model;
}

Posteriors e_step(const PlsaModel &model, const Matrix &counts) {
  const std::size_t n = counts.rows();
  const std::size_t T = counts.cols();
  Posteriors post(n, T);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < T; ++t) {
      double num[kNumTopics];
      double denom = 0.0;
      for (int z = 0; z < kNumTopics; ++z) {
        num[z] = model.p_z[z] * model.p_f_given_z(f, z) * model.p_t_given_z(t, z);
        denom += num[z];
      }
      for (int z = 0; z < kNumTopics; ++z) {
        post.at(f, t, z) = denom > 0.0 ? num[z] / denom : 1.0 / kNumTopics;
      }
    }
  }
  return post;
}

void m_step(const Posteriors &post, const Matrix &counts, PlsaModel &model) {
  const std::size_t n = counts.rows();
  const std::size_t T = counts.cols();

  double total = 0.0;
  double topic_weight[kNumTopics] = {0.0, 0.0};
  Matrix t_weight(T, kNumTopics);
  Matrix f_weight(n, kNumTopics);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < T; ++t) {
      const double q = counts(f, t);
      total += q;
      if (q == 0.0) continue;
      for (int z = 0; z < kNumTopics; ++z) {
        const double w = q * post.at(f, t, z);
        t_weight(t, z) += w;
        f_weight(f, z) += w;
        topic_weight[z] += w;
      }
    }
  }

  for (int z = 0; z < kNumTopics; ++z) {
    if (topic_weight[z] > 0.0) {
      for (std::size_t t = 0; t < T; ++t) {
        model.p_t_given_z(t, z) = t_weight(t, z) / topic_weight[z];
      }
      for (std::size_t f = 0; f < n; ++f) {
        model.p_f_given_z(f, z) = f_weight(f, z) / topic_weight[z];
      }
    } else {
      // Dead topic: nothing was assigned to it. Keep its distributions
      // proper so later Bayes steps stay well defined.
      for (std::size_t t = 0; t < T; ++t) {
        model.p_t_given_z(t, z) = 1.0 / static_cast<double>(T);
      }
      for (std::size_t f = 0; f < n; ++f) {
        model.p_f_given_z(f, z) = 1.0 / static_cast<double>(n);
      }
    }
    model.p_z[z] = total > 0.0 ? topic_weight[z] / total : 1.0 / kNumTopics;
  }
}

Matrix topic_posterior(const PlsaModel &model) {
  const std::size_t n = model.p_f_given_z.rows();
  Matrix posterior(n, kNumTopics);
  for (std::size_t f = 0; f < n; ++f) {
    double num[kNumTopics];
    double denom = 0.0;
    for (int z = 0; z < kNumTopics; ++z) {
      num[z] = model.p_f_given_z(f, z) * model.p_z[z];
      denom += num[z];
    }
    for (int z = 0; z < kNumTopics; ++z) {
      posterior(f, z) = denom > 0.0 ? num[z] / denom : 1.0 / kNumTopics;
    }
  }
  return posterior;
}

double log_likelihood(const PlsaModel &model, const Matrix &counts) {
  const std::size_t n = counts.rows();
  const std::size_t T = counts.cols();
  const Matrix posterior = topic_posterior(model);
  double ll = 0.0;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < T; ++t) {
      const double q = counts(f, t);
      if (q == 0.0) continue;
      double p_t_given_f = 0.0;
      for (int z = 0; z < kNumTopics; ++z) {
        p_t_given_f += model.p_t_given_z(t, z) * posterior(f, z);
      }
      ll += q * std::log(std::max(p_t_given_f, kLogFloor));
    }
  }
  return ll;
}

PlsaModel fit(const Matrix &counts, const EmConfig &config) {
  const std::size_t n = counts.rows();
  const std::size_t T = counts.cols();

  Matrix q(counts);
  if (config.smoothing != 0.0) {
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t t = 0; t < T; ++t) q(f, t) += config.smoothing;
    }
  }
  double total = 0.0;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < T; ++t) {
      if (q(f, t) < 0.0) throw Error("DegenerateCounts", "negative count cell");
      total += q(f, t);
    }
  }
  if (total <= 0.0) {
    throw Error("DegenerateCounts", "count table sums to zero; nothing to fit");
  }

  PlsaModel model = init_priors(n, T);
  double prev_ll = 0.0;
  for (int it = 1; it <= config.max_iterations; ++it) {
    const Posteriors post = e_step(model, q);
    m_step(post, q, model);
    const double ll = log_likelihood(model, q);
    model.log_likelihood_trace.push_back(ll);
    model.iterations_run = it;
    if (it > 1) {
      const double rel = std::fabs(ll - prev_ll) / std::max(std::fabs(prev_ll), 1e-12);
      if (rel < config.rel_tolerance) {
        model.converged = true;
        break;
      }
    }
    prev_ll = ll;
  }
  model.p_z_given_f = topic_posterior(model);
  return model;
}

}  // namespace latentfs
