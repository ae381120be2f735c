#include "latentfs/synth.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "latentfs/errors.hpp"
#include "latentfs/rng.hpp"

namespace latentfs {

SynthData generate(const SynthSpec &spec) {
  if (spec.n_informative < 1) {
    throw Error("InvalidSpec", "need at least one informative feature");
  }
  if (spec.n_samples < 2) {
    throw Error("InvalidSpec", "need at least two samples");
  }
  if (!(spec.separation > 0.0)) {
    throw Error("InvalidSpec", "separation must be positive");
  }

  const std::size_t m = spec.n_samples;
  const std::size_t n = spec.n_informative + spec.n_noise;
  const std::size_t m1 = (m + 1) / 2;  // class 1 takes the first half (and the odd one)
  const double offset = spec.separation / 2.0;

  Xoshiro256pp rng(spec.seed);

  // Draw column by column in pre-shuffle order: informative columns first,
  // then noise. Keeping the draw order fixed is what makes the output a
  // pure function of the spec.
  Matrix columns(n, m);
  for (std::size_t f = 0; f < n; ++f) {
    const bool informative = f < spec.n_informative;
    for (std::size_t s = 0; s < m; ++s) {
      double mean = 0.0;
      if (informative) mean = (s < m1) ? -offset : offset;
      columns(f, s) = mean + rng.next_normal();
    }
  }

  std::vector<std::size_t> source(n);
  std::iota(source.begin(), source.end(), 0);
  shuffle(source, rng);

  SynthData out;
  out.data.values = Matrix(m, n);
  out.data.feature_names.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t s = 0; s < m; ++s) out.data.values(s, c) = columns(source[c], s);
    out.data.feature_names.push_back("f" + std::to_string(c));
    if (source[c] < spec.n_informative) out.informative.push_back(static_cast<int>(c));
  }
  out.data.labels.resize(m);
  for (std::size_t s = 0; s < m; ++s) out.data.labels[s] = (s < m1) ? 1 : 2;
  out.data.num_classes = 2;
  return out;
}

double nearest_centroid_accuracy(const FeatureMatrix &train, const FeatureMatrix &test,
                                 const std::vector<int> &selected) {
  if (selected.empty()) {
    throw Error("EmptySelection", "no feature columns selected");
  }
  if (train.num_features() != test.num_features()) {
    throw Error("ShapeMismatch", "train and test disagree on feature count");
  }
  for (int idx : selected) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= train.num_features()) {
      throw Error("OutOfRange", "selected feature " + std::to_string(idx));
    }
  }

  const int K = train.num_classes;
  const std::size_t d = selected.size();
  Matrix centroids(K, d);
  std::vector<std::size_t> counts(K, 0);
  for (std::size_t s = 0; s < train.num_samples(); ++s) {
    const int k = train.labels[s] - 1;
    ++counts[k];
    for (std::size_t c = 0; c < d; ++c) {
      centroids(k, c) += train.values(s, static_cast<std::size_t>(selected[c]));
    }
  }
  for (int k = 0; k < K; ++k) {
    for (std::size_t c = 0; c < d; ++c) {
      centroids(k, c) /= static_cast<double>(counts[k]);
    }
  }

  std::size_t correct = 0;
  for (std::size_t s = 0; s < test.num_samples(); ++s) {
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < K; ++k) {
      double dist = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff =
            test.values(s, static_cast<std::size_t>(selected[c])) - centroids(k, c);
        dist += diff * diff;
      }
      if (dist < best_dist) {  // strict: ties keep the lower class id
        best_dist = dist;
        best = k;
      }
    }
    if (best + 1 == test.labels[s]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.num_samples());
}

}  // namespace latentfs
