#pragma once

// Node centralities over the unweighted (hop-distance) structure.
//
// All measures are normalized to [0, 1]:
//   degree       K_i / (N-1)
//   betweenness  pair-dependency sum over (N-1)(N-2)/2 pairs
//   closeness    (r_i/(N-1)) * (r_i/S_i), r_i reachable nodes, S_i their
//                distance sum; equals (N-1)/S_i on connected graphs
//   lobby        L_i / (N-1), L_i the largest l with >= l neighbors of
//                degree >= l

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

#include "charnet/error.hpp"
#include "charnet/format.hpp"
#include "charnet/graph.hpp"

namespace charnet {

enum class Measure { Degree, Betweenness, Closeness, Lobby };

inline constexpr std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Degree: return "degree";
    case Measure::Betweenness: return "betweenness";
    case Measure::Closeness: return "closeness";
    case Measure::Lobby: return "lobby";
  }
  return "?";
}

// Indexed by NodeId.
struct CentralityVector {
  Measure measure;
  std::vector<double> values;

  double operator[](NodeId i) const { return values.at(i); }
  std::size_t size() const noexcept { return values.size(); }
};

inline CentralityVector degree_centrality(const CharacterGraph& g) {
  const auto n = g.node_count();
  if (n < 2) throw DomainError("degree centrality needs at least 2 nodes");
  CentralityVector out{Measure::Degree, std::vector<double>(n)};
  for (NodeId i = 0; i < n; ++i)
    out.values[i] = static_cast<double>(g.degree(i)) / static_cast<double>(n - 1);
  return out;
}

// Brandes accumulation, one BFS per source, sources in id order so the
// floating-point reduction order is fixed.
inline CentralityVector betweenness_centrality(const CharacterGraph& g) {
  const auto n = g.node_count();
  if (n < 3) throw DomainError("betweenness centrality needs at least 3 nodes");

  std::vector<double> score(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<NodeId> order;
  std::vector<NodeId> queue;
  order.reserve(n);
  queue.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    order.clear();
    queue.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      order.push_back(v);
      for (auto w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are the neighbors one hop closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }

  // Each unordered pair was visited from both ends.
  const double scale = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  CentralityVector out{Measure::Betweenness, std::move(score)};
  for (auto& v : out.values) v /= scale;
  return out;
}

inline CentralityVector closeness_centrality(const CharacterGraph& g) {
  const auto n = g.node_count();
  if (n < 2) throw DomainError("closeness centrality needs at least 2 nodes");

  CentralityVector out{Measure::Closeness, std::vector<double>(n, 0.0)};
  std::vector<long> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1L);
    queue.assign(1, s);
    dist[s] = 0;
    long reached = 0;
    long total = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      for (auto w : g.neighbors(v)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        ++reached;
        total += dist[w];
        queue.push_back(w);
      }
    }
    if (reached == 0) continue;
    const double r = static_cast<double>(reached);
    out.values[s] = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(total));
  }
  return out;
}

// Raw lobby index of every node. Zero for isolated nodes.
inline std::vector<std::size_t> lobby_raw(const CharacterGraph& g) {
  const auto n = g.node_count();
  std::vector<std::size_t> out(n, 0);
  std::vector<std::size_t> nd;
  for (NodeId i = 0; i < n; ++i) {
    nd.clear();
    for (auto j : g.neighbors(i)) nd.push_back(g.degree(j));
    std::sort(nd.begin(), nd.end(), std::greater<>{});
    std::size_t l = 0;
    while (l < nd.size() && nd[l] >= l + 1) ++l;
    out[i] = l;
  }
  return out;
}

struct LobbyIndex {
  std::vector<std::size_t> raw;
  CentralityVector normalized;
};

inline LobbyIndex lobby_index(const CharacterGraph& g) {
  const auto n = g.node_count();
  if (n < 2) throw DomainError("normalized lobby index needs at least 2 nodes");
  LobbyIndex out{lobby_raw(g), {Measure::Lobby, std::vector<double>(n)}};
  for (NodeId i = 0; i < n; ++i)
    out.normalized.values[i] = static_cast<double>(out.raw[i]) / static_cast<double>(n - 1);
  return out;
}

// node,degree,degree_norm,betweenness_norm,closeness_norm,lobby_raw,lobby_norm
// Betweenness is NA on graphs with fewer than 3 nodes.
inline void write_centrality_csv(std::ostream& out, const CharacterGraph& g) {
  const auto deg = degree_centrality(g);
  const auto clo = closeness_centrality(g);
  const auto lob = lobby_index(g);
  std::vector<double> bet(g.node_count(), std::numeric_limits<double>::quiet_NaN());
  if (g.node_count() >= 3) bet = betweenness_centrality(g).values;

  out << "node,degree,degree_norm,betweenness_norm,closeness_norm,lobby_raw,lobby_norm\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << g.label(i) << ',' << g.degree(i) << ',' << format_real(deg[i]) << ',' << format_real(bet[i]) << ','
        << format_real(clo[i]) << ',' << lob.raw[i] << ',' << format_real(lob.normalized[i]) << '\n';
  }
}

}  // namespace charnet
