#pragma once

#include <vector>

#include "latentfs/matrix.hpp"
#include "latentfs/plsa.hpp"

namespace latentfs {

// Fully connected feature graph whose edge (i, j) is the product of the
// endpoints' topic-0 posteriors, i.e. a rank-one outer product of the
// relevancy vector. Self loops are kept: a feature's own relevancy feeds
// back into its walk energy. Symmetry holds by construction.
struct AffinityGraph {
  Matrix a;                       // n x n, nonnegative, symmetric
  std::vector<double> relevancy;  // n, P(topic 0 | feature)
};

// zero_diagonal drops the self loops, which is occasionally useful to see
// how much of a feature's score is self-reinforcement. Note the graph is
// no longer rank one with the diagonal removed.
AffinityGraph build_graph(const PlsaModel &model, bool zero_diagonal = false);

}  // namespace latentfs
