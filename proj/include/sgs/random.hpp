#pragma once

#include <random>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// G(n, p) with each edge independently negative with probability q.
inline SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double p = 0.5, double q = 0.5) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution negative(q);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, negative(rng) ? -1 : 1});
    }
  }
  return SignedGraph::build(n, edges);
}

/// Random signed graph with a connected underlying graph: a random
/// spanning tree plus G(n, p) extra edges.
inline SignedGraph random_connected_signed_graph(std::mt19937_64& rng, int n, double p = 0.5,
                                                 double q = 0.5) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution negative(q);
  std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    present[u][v] = true;
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present[u][v] || edge(rng)) edges.push_back({u, v, negative(rng) ? -1 : 1});
    }
  }
  return SignedGraph::build(n, edges);
}

}  // namespace sgs
