#pragma once

#include <string>
#include <vector>

#include "latentfs/matrix.hpp"

namespace latentfs {

// Samples-by-features table with integer class labels.
//
// Labels are re-encoded to 1..K in order of first appearance in the file,
// whatever strings the label column held. At least two classes and one
// feature are required; anything else refuses to load.
struct FeatureMatrix {
  Matrix values;                           // m x n, samples by features
  std::vector<int> labels;                 // length m, values in 1..K
  std::vector<std::string> feature_names;  // length n
  int num_classes = 0;

  std::size_t num_samples() const { return values.rows(); }
  std::size_t num_features() const { return values.cols(); }
};

// Per-class moments of every feature column. sigma holds population
// standard deviations (divide by the class count, not count minus one).
struct ClassStats {
  Matrix mu;                          // K x n class means
  Matrix sigma;                       // K x n population standard deviations
  std::vector<double> sigma_sq_sum;   // length n, sum over classes of sigma^2
};

// Plain comma-separated parsing: a header row, one row per sample, no
// quoting. Cells containing a double quote are rejected so silently
// misparsing quoted fields is impossible. Feature cells must be finite
// real numbers.
FeatureMatrix load_csv(const std::string &path, const std::string &label_column);

// Writes the table back out with the label column (named "label") last.
// Values are printed with enough digits to reload bit-exactly.
void save_csv(const FeatureMatrix &data, const std::string &path);

ClassStats class_stats(const FeatureMatrix &data);

}  // namespace latentfs
