#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "charnet/error.hpp"
#include "charnet/graph.hpp"

namespace charnet {

struct GlobalStats {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  double avg_degree = 0.0;
  double degree_std = 0.0;  // population deviation
  double density = 0.0;
  double clustering = 0.0;
};

// 2M / (N(N-1))
inline double density(const CharacterGraph& g) {
  const auto n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) throw DomainError("density needs at least 2 nodes");
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

// Mean and population standard deviation of the node degrees.
inline std::pair<double, double> average_degree(const CharacterGraph& g) {
  if (g.empty()) throw DomainError("average degree of an empty graph");
  const auto n = static_cast<double>(g.node_count());
  const double mean = 2.0 * static_cast<double>(g.edge_count()) / n;
  double ss = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double d = static_cast<double>(g.degree(i)) - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / n)};
}

// Local clustering coefficient of one node; 0 when K_i <= 1.
inline double local_clustering(const CharacterGraph& g, NodeId i) {
  const auto nb = g.neighbors(i);
  const auto k = nb.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.adjacent(nb[a], nb[b])) ++links;
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

// Average of local coefficients over all N nodes (low-degree nodes count as 0).
inline double clustering_coefficient(const CharacterGraph& g) {
  if (g.empty()) throw DomainError("clustering coefficient of an empty graph");
  double sum = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) sum += local_clustering(g, i);
  return sum / static_cast<double>(g.node_count());
}

inline GlobalStats global_stats(const CharacterGraph& g) {
  GlobalStats s;
  s.n_nodes = g.node_count();
  s.n_edges = g.edge_count();
  std::tie(s.avg_degree, s.degree_std) = average_degree(g);
  s.density = density(g);
  s.clustering = clustering_coefficient(g);
  return s;
}

}  // namespace charnet
