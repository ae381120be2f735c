#include "latentfs/graph.hpp"

namespace latentfs {

AffinityGraph build_graph(const PlsaModel &model, bool zero_diagonal) {
  const std::size_t n = model.p_z_given_f.rows();
  AffinityGraph graph;
  graph.relevancy.resize(n);
  for (std::size_t i = 0; i < n; ++i) graph.relevancy[i] = model.p_z_given_f(i, 0);

  graph.a = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double w = graph.relevancy[i] * graph.relevancy[j];
      graph.a(i, j) = w;
      graph.a(j, i) = w;
    }
    if (zero_diagonal) graph.a(i, i) = 0.0;
  }
  return graph;
}

}  // namespace latentfs
