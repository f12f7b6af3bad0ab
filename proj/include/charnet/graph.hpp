#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charnet/corpus_format.hpp"
#include "charnet/error.hpp"

namespace charnet {

using NodeId = std::size_t;

// Endpoints are stored with u < v (lexicographically).
struct WeightedEdge {
  std::string u;
  std::string v;
  unsigned weight = 0;

  bool operator==(const WeightedEdge&) const = default;
};

// Undirected simple graph of characters. Immutable once built.
//
// Node ids follow first appearance in the encounter list. Edge weight counts
// the cliques in which both endpoints occur; appearances counts the cliques
// containing the node.
class CharacterGraph {
 public:
  CharacterGraph() = default;

  // Generic construction from labelled nodes and an edge list. Repeated edges
  // accumulate weight; self-loops are dropped. Appearances default to 1.
  static CharacterGraph from_edges(std::vector<std::string> labels,
                                   std::span<const std::pair<NodeId, NodeId>> edges) {
    CharacterGraph g;
    g.labels_ = std::move(labels);
    g.names_ = g.labels_;
    g.appearances_.assign(g.labels_.size(), 1);
    for (NodeId i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);
    std::map<std::pair<NodeId, NodeId>, unsigned> weights;
    for (auto [a, b] : edges) {
      if (a >= g.labels_.size() || b >= g.labels_.size()) throw LookupError("edge endpoint out of range");
      if (a == b) continue;
      ++weights[std::minmax(a, b)];
    }
    g.finish(std::move(weights));
    return g;
  }

  // Unlabelled convenience form: nodes are named V0..V{n-1}.
  static CharacterGraph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "V" + std::to_string(i);
    return from_edges(std::move(labels), edges);
  }

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(NodeId i) const { return labels_.at(i); }
  const std::string& name(NodeId i) const { return names_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<NodeId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeId index_of(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw LookupError("unknown character '" + std::string(label) + "'");
  }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_.at(i); }

  std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
  std::size_t degree(std::string_view label) const { return degree(index_of(label)); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(node_count());
    for (NodeId i = 0; i < node_count(); ++i) out[i] = adjacency_[i].size();
    return out;
  }

  bool adjacent(NodeId a, NodeId b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  // Zero when the pair is not linked.
  unsigned weight(NodeId a, NodeId b) const {
    auto it = weights_.find(std::minmax(a, b));
    return it == weights_.end() ? 0u : it->second;
  }

  unsigned appearances(NodeId i) const { return appearances_.at(i); }

  unsigned total_weight() const {
    unsigned sum = 0;
    for (const auto& [key, w] : weights_) sum += w;
    return sum;
  }

  // All edges, sorted by (u, v) label order.
  std::vector<WeightedEdge> edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) {
      auto [a, b] = key;
      const auto& la = labels_[a];
      const auto& lb = labels_[b];
      if (lb < la)
        out.push_back({lb, la, w});
      else
        out.push_back({la, lb, w});
    }
    std::sort(out.begin(), out.end(),
              [](const WeightedEdge& x, const WeightedEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return out;
  }

 private:
  friend CharacterGraph build_graph(const ParsedBook& book);

  void finish(std::map<std::pair<NodeId, NodeId>, unsigned> weights) {
    adjacency_.assign(labels_.size(), {});
    for (const auto& [key, w] : weights) {
      adjacency_[key.first].push_back(key.second);
      adjacency_[key.second].push_back(key.first);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    edge_count_ = weights.size();
    weights_ = std::move(weights);
  }

  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::map<std::pair<NodeId, NodeId>, unsigned> weights_;
  std::vector<unsigned> appearances_;
  std::size_t edge_count_ = 0;
};

// Every clique of size s adds +1 to each of its s(s-1)/2 pairs. Declared
// characters that never appear are not nodes.
inline CharacterGraph build_graph(const ParsedBook& book) {
  CharacterGraph g;
  std::map<std::pair<NodeId, NodeId>, unsigned> weights;
  std::vector<NodeId> members;
  for (const auto& rec : book.encounters) {
    for (const auto& clique : rec.cliques) {
      members.clear();
      for (const auto& code : clique) {
        auto [it, inserted] = g.index_.try_emplace(code, g.labels_.size());
        if (inserted) {
          g.labels_.push_back(code);
          g.names_.push_back(book.display_name(code));
          g.appearances_.push_back(0);
        }
        if (std::find(members.begin(), members.end(), it->second) == members.end())
          members.push_back(it->second);
      }
      for (auto id : members) ++g.appearances_[id];
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) ++weights[std::minmax(members[a], members[b])];
    }
  }
  g.finish(std::move(weights));
  return g;
}

// Heaviest edge and its share of the summed edge weight. Ties go to the
// lexicographically smallest (u, v).
inline std::pair<WeightedEdge, double> top_weighted_edge(const CharacterGraph& g) {
  if (g.edge_count() == 0) throw DomainError("top_weighted_edge: graph has no edges");
  const auto all = g.edges();
  const WeightedEdge* best = &all.front();
  for (const auto& e : all)
    if (e.weight > best->weight) best = &e;
  return {*best, static_cast<double>(best->weight) / static_cast<double>(g.total_weight())};
}

// `u,v,weight` lines sorted by endpoints.
inline void write_edge_list(std::ostream& out, const CharacterGraph& g) {
  for (const auto& e : g.edges()) out << e.u << ',' << e.v << ',' << e.weight << '\n';
}

}  // namespace charnet
