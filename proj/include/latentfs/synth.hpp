#pragma once

#include <cstdint>
#include <vector>

#include "latentfs/dataset.hpp"

namespace latentfs {

// Recipe for a two-class benchmark table: n_informative columns whose
// class means sit +-separation/2 apart at unit variance, n_noise columns of
// pure standard normal, columns shuffled so informative ones are not
// trivially first. Everything, values and shuffle, comes from one seeded
// generator, so a spec is a complete description of the file it produces.
struct SynthSpec {
  std::size_t n_samples = 200;
  std::size_t n_informative = 5;
  std::size_t n_noise = 45;
  double separation = 3.0;
  std::uint64_t seed = 1;
};

struct SynthData {
  FeatureMatrix data;
  std::vector<int> informative;  // post-shuffle column indices, ascending
};

SynthData generate(const SynthSpec &spec);

// Classifies every test sample to the nearest class centroid (computed on
// the training rows, restricted to the selected feature columns) and
// returns the fraction of correct labels. Distance ties go to the lower
// class id.
double nearest_centroid_accuracy(const FeatureMatrix &train, const FeatureMatrix &test,
                                 const std::vector<int> &selected);

}  // namespace latentfs
