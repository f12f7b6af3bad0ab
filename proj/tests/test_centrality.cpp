#include <gtest/gtest.h>

#include <sstream>

#include "charnet/centrality.hpp"
#include "support/oracles.hpp"

namespace charnet {
namespace {

using testing::EdgeList;

CharacterGraph graph(std::size_t n, const EdgeList& e) { return CharacterGraph::from_edges(n, e); }

const EdgeList kStar5{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
const EdgeList kK4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const EdgeList kP3{{0, 1}, {1, 2}};
const EdgeList kC4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};

TEST(DegreeCentrality, Examples) {
  const auto star = degree_centrality(graph(5, kStar5));
  EXPECT_DOUBLE_EQ(star[0], 1.0);
  for (NodeId i = 1; i < 5; ++i) EXPECT_DOUBLE_EQ(star[i], 0.25);
  for (double v : degree_centrality(graph(4, kK4)).values) EXPECT_DOUBLE_EQ(v, 1.0);
  const auto p3 = degree_centrality(graph(3, kP3));
  EXPECT_DOUBLE_EQ(p3[1], 1.0);
  EXPECT_DOUBLE_EQ(p3[0], 0.5);
  EXPECT_THROW(degree_centrality(graph(1, {})), DomainError);
}

TEST(BetweennessCentrality, Examples) {
  const auto p3 = betweenness_centrality(graph(3, kP3));
  EXPECT_DOUBLE_EQ(p3[1], 1.0);
  EXPECT_DOUBLE_EQ(p3[0], 0.0);
  EXPECT_DOUBLE_EQ(p3[2], 0.0);
  for (double v : betweenness_centrality(graph(4, kK4)).values) EXPECT_DOUBLE_EQ(v, 0.0);
  EXPECT_THROW(betweenness_centrality(graph(2, {{0, 1}})), DomainError);
}

// Frozen from the walk-count oracle: each node lies on one of the two
// shortest paths of its opposite pair, 0.5 / 3 pairs.
TEST(BetweennessCentrality, FourCycle) {
  const auto oracle = testing::betweenness_oracle(4, kC4);
  for (double v : oracle) ASSERT_DOUBLE_EQ(v, 1.0 / 6.0);
  for (double v : betweenness_centrality(graph(4, kC4)).values) EXPECT_NEAR(v, 1.0 / 6.0, 1e-15);
}

TEST(ClosenessCentrality, Examples) {
  for (double v : closeness_centrality(graph(4, kK4)).values) EXPECT_DOUBLE_EQ(v, 1.0);
  const auto p3 = closeness_centrality(graph(3, kP3));
  EXPECT_DOUBLE_EQ(p3[1], 1.0);
  EXPECT_DOUBLE_EQ(p3[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(p3[2], 2.0 / 3.0);
  const auto isolated = closeness_centrality(graph(4, {{0, 1}, {1, 2}}));
  EXPECT_DOUBLE_EQ(isolated[3], 0.0);
  EXPECT_THROW(closeness_centrality(graph(1, {})), DomainError);
}

TEST(ClosenessCentrality, ComponentCorrected) {
  // Two disjoint edges: each node reaches one node at distance 1 of 3 others.
  const auto c = closeness_centrality(graph(4, {{0, 1}, {2, 3}}));
  for (double v : c.values) EXPECT_DOUBLE_EQ(v, 1.0 / 3.0);
}

TEST(LobbyIndex, Examples) {
  EXPECT_EQ(lobby_raw(graph(5, kStar5))[0], 1u);
  const EdgeList k5{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (auto l : lobby_raw(graph(5, k5))) EXPECT_EQ(l, 4u);
  EXPECT_EQ(lobby_raw(graph(3, {{0, 1}}))[2], 0u);
}

// A=0,B=1,C=2,D=3 with edges AB,AC,AD,BC,BD. Neighbour degrees of A are
// 3,2,2 so L(A)=2; frozen from the definitional scan.
TEST(LobbyIndex, SmallGraphAgainstDefinition) {
  const EdgeList e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const auto oracle = testing::lobby_oracle(4, e);
  ASSERT_EQ(oracle[0], 2u);
  EXPECT_EQ(lobby_raw(graph(4, e))[0], 2u);
  const auto lobby = lobby_index(graph(4, e));
  EXPECT_DOUBLE_EQ(lobby.normalized[0], 2.0 / 3.0);
}

TEST(LobbyIndex, NormalizedNeedsTwoNodes) { EXPECT_THROW(lobby_index(graph(1, {})), DomainError); }

void expect_matches_oracles(std::size_t n, const EdgeList& edges) {
  const auto g = graph(n, edges);
  const auto lobby = lobby_raw(g);
  const auto lobby_ref = testing::lobby_oracle(n, edges);
  for (NodeId i = 0; i < n; ++i) {
    ASSERT_EQ(lobby[i], lobby_ref[i]);
    ASSERT_LE(lobby[i], g.degree(i));
  }
  if (n < 2) return;
  const auto clo = closeness_centrality(g);
  const auto clo_ref = testing::closeness_oracle(n, edges);
  for (NodeId i = 0; i < n; ++i) ASSERT_NEAR(clo[i], clo_ref[i], 1e-12);
  const auto deg = degree_centrality(g);
  for (NodeId i = 0; i < n; ++i) {
    ASSERT_GE(deg[i], 0.0);
    ASSERT_LE(deg[i], 1.0);
    ASSERT_EQ(deg[i] == 1.0, g.degree(i) == n - 1);
    ASSERT_GE(clo[i], 0.0);
    ASSERT_LE(clo[i], 1.0);
  }
  if (n < 3) return;
  const auto bet = betweenness_centrality(g);
  const auto bet_ref = testing::betweenness_oracle(n, edges);
  for (NodeId i = 0; i < n; ++i) {
    ASSERT_NEAR(bet[i], bet_ref[i], 1e-12);
    ASSERT_GE(bet[i], 0.0);
    ASSERT_LE(bet[i], 1.0 + 1e-12);
  }
}

TEST(CentralityOracle, AllGraphsUpToSixNodes) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      expect_matches_oracles(n, testing::graph_from_mask(n, m));
      if (::testing::Test::HasFatalFailure()) FAIL() << "n=" << n << " mask=" << m;
    }
  }
}

TEST(CentralityOracle, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto [n, edges] = testing::random_graph(seed, 3, 40);
    expect_matches_oracles(n, edges);
    if (::testing::Test::HasFatalFailure()) FAIL() << "seed=" << seed;
  }
}

TEST(CentralityOracle, LobbyBoundedByMaxNeighbourDegree) {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const auto [n, edges] = testing::random_graph(seed, 2, 30);
    const auto g = graph(n, edges);
    const auto l = lobby_raw(g);
    for (NodeId i = 0; i < n; ++i) {
      std::size_t max_nd = 0;
      for (auto j : g.neighbors(i)) max_nd = std::max(max_nd, g.degree(j));
      EXPECT_LE(l[i], max_nd);
    }
  }
}

TEST(CentralityCsv, SevenColumns) {
  std::ostringstream out;
  write_centrality_csv(out, graph(3, kP3));
  EXPECT_EQ(out.str(),
            "node,degree,degree_norm,betweenness_norm,closeness_norm,lobby_raw,lobby_norm\n"
            "V0,1,0.5,0,0.666667,1,0.5\n"
            "V1,2,1,1,1,1,0.5\n"
            "V2,1,0.5,0,0.666667,1,0.5\n");
}

}  // namespace
}  // namespace charnet
