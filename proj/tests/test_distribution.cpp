#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>

#include "charnet/distribution.hpp"
#include "support/oracles.hpp"
#include "support/power_law_sampler.hpp"

namespace charnet {
namespace {

using testing::EdgeList;
using Big = boost::multiprecision::cpp_bin_float_50;

CharacterGraph graph(std::size_t n, const EdgeList& e) { return CharacterGraph::from_edges(n, e); }

// zeta(s, q) for integer q from the Riemann zeta minus a partial sum, in
// 50-digit arithmetic.
double hurwitz_reference(double s, unsigned q) {
  Big z = boost::math::zeta(Big(s));
  for (unsigned k = 1; k < q; ++k) z -= boost::multiprecision::pow(Big(k), -Big(s));
  return z.convert_to<double>();
}

// Double-precision variant for dense scans.
double hurwitz_reference_fast(double s, unsigned q) {
  long double z = boost::math::zeta(static_cast<long double>(s));
  for (unsigned k = 1; k < q; ++k) z -= std::pow(static_cast<long double>(k), -static_cast<long double>(s));
  return static_cast<double>(z);
}

// ---------------------------------------------------------------------------

TEST(Ccdf, Examples) {
  const std::vector<unsigned> deg{1, 1, 2, 4};
  const auto c = ccdf(deg);
  ASSERT_EQ(c.points.size(), 3u);
  EXPECT_EQ(c.points[0].k, 1u);
  EXPECT_DOUBLE_EQ(c.points[0].p, 1.0);
  EXPECT_DOUBLE_EQ(c.points[1].p, 0.5);
  EXPECT_DOUBLE_EQ(c.points[2].p, 0.25);
}

TEST(Ccdf, ZerosIgnoredAndEmptyRejected) {
  const std::vector<unsigned> deg{0, 0, 3, 3};
  const auto c = ccdf(deg);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_DOUBLE_EQ(c.points[0].p, 1.0);
  const std::vector<unsigned> zeros{0, 0};
  EXPECT_THROW(ccdf(zeros), DomainError);
}

TEST(Ccdf, MonotoneOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto [n, edges] = testing::random_graph(seed, 5, 50);
    const auto deg = degree_samples(graph(n, edges));
    if (std::all_of(deg.begin(), deg.end(), [](unsigned k) { return k == 0; })) continue;
    const auto c = ccdf(deg);
    EXPECT_DOUBLE_EQ(c.points.front().p, 1.0);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      EXPECT_GT(c.points[i].k, c.points[i - 1].k);
      EXPECT_LT(c.points[i].p, c.points[i - 1].p);
    }
  }
}

TEST(Ccdf, Csv) {
  std::ostringstream out;
  const std::vector<unsigned> deg{1, 2, 2};
  write_ccdf_csv(out, ccdf(deg));
  EXPECT_EQ(out.str(), "k,P\n1,1\n2,0.666667\n");
}

// ---------------------------------------------------------------------------

TEST(HurwitzZeta, ClosedForms) {
  const double pi = boost::math::constants::pi<double>();
  EXPECT_NEAR(hurwitz_zeta(2.0, 1.0), pi * pi / 6.0, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(3.0, 1.0), 1.2020569031595942, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(4.0, 1.0), std::pow(pi, 4) / 90.0, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(2.0, 2.0), pi * pi / 6.0 - 1.0, 1e-13);
}

TEST(HurwitzZeta, AgainstMultiprecisionReference) {
  for (double s : {1.05, 1.3, 1.8, 2.5, 3.0, 4.4, 6.0})
    for (unsigned q : {1u, 2u, 3u, 7u, 20u, 150u}) {
      const double ref = hurwitz_reference(s, q);
      EXPECT_NEAR(hurwitz_zeta(s, q), ref, 1e-10 * ref) << "s=" << s << " q=" << q;
    }
}

TEST(HurwitzZeta, DomainErrors) {
  EXPECT_THROW(hurwitz_zeta(1.0, 1.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
}

// The maximiser of the likelihood built on the reference zeta, by a plain
// grid scan, must agree with the golden-section search.
TEST(FitAlpha, AgreesWithGridScan) {
  const std::vector<std::vector<unsigned>> samples{
      {1, 1, 1, 2, 2, 3, 5, 9},
      {2, 2, 3, 3, 3, 4, 6, 8, 13, 30},
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 2},
  };
  for (const auto& s : samples) {
    const unsigned k_min = *std::min_element(s.begin(), s.end());
    double sum_log = 0.0;
    for (auto k : s) sum_log += std::log(static_cast<double>(k));
    double best_a = 0.0, best_ll = -1e300;
    for (double a = 1.0001; a <= 6.0; a += 1e-4) {
      const double ll = -static_cast<double>(s.size()) * std::log(hurwitz_reference_fast(a, k_min)) - a * sum_log;
      if (ll > best_ll) {
        best_ll = ll;
        best_a = a;
      }
    }
    EXPECT_NEAR(fit_alpha(s, k_min), best_a, 2e-4);
  }
}

TEST(FitAlpha, RejectsSamplesBelowKmin) {
  const std::vector<unsigned> s{1, 2, 3};
  EXPECT_THROW(fit_alpha(s, 2), DomainError);
  EXPECT_THROW(fit_alpha(std::vector<unsigned>{}, 1), DomainError);
}

TEST(KsDistance, ExactFitIsSmall) {
  // Sample whose empirical frequencies follow a truncated power law closely.
  std::vector<unsigned> s;
  const double z = hurwitz_zeta(2.5, 1.0);
  for (unsigned k = 1; k <= 40; ++k) {
    const auto count = static_cast<int>(std::lround(1e5 * std::pow(k, -2.5) / z));
    s.insert(s.end(), count, k);
  }
  // Truncating at 40 drops about 0.25% of the mass, which bounds the gap.
  EXPECT_LT(power_law_ks_distance(s, 1, 2.5), 3e-3);
  EXPECT_GT(power_law_ks_distance(s, 1, 3.5), 0.05);
}

class PowerLawRecovery : public ::testing::TestWithParam<double> {};

TEST_P(PowerLawRecovery, TenThousandSamples) {
  const double alpha = GetParam();
  const testing::DiscretePowerLawSampler sampler(alpha);
  const auto sample = sampler.draw(10'000, 20240501);
  const auto fit = fit_power_law(sample);
  EXPECT_NEAR(fit.alpha, alpha, 0.1);
  EXPECT_LE(fit.k_min, 2u);
  EXPECT_GE(fit.tail_size, 5u);
}

INSTANTIATE_TEST_SUITE_P(Alphas, PowerLawRecovery, ::testing::Values(1.8, 2.5, 3.0));

// The continuous approximation is only good once k_min is well above 1.
TEST(FitAlpha, ContinuousApproximationForLargeKmin) {
  const auto sample = testing::DiscretePowerLawSampler(2.5).draw(200'000, 11);
  std::vector<unsigned> tail;
  for (auto k : sample)
    if (k >= 10) tail.push_back(k);
  ASSERT_GT(tail.size(), 1000u);
  EXPECT_NEAR(continuous_alpha_estimate(tail, 10), fit_alpha(tail, 10), 0.05);
}

TEST(FitPowerLaw, Degenerate) {
  const std::vector<unsigned> s{3, 3, 3, 3, 3};
  EXPECT_THROW(fit_power_law(s), DegenerateDistributionError);
}

TEST(FitPowerLaw, InsufficientTail) {
  const std::vector<unsigned> s{1, 2};
  EXPECT_THROW(fit_power_law(s), InsufficientTailError);
  const std::vector<unsigned> zeros{0, 0, 0};
  EXPECT_THROW(fit_power_law(zeros), InsufficientTailError);
  EXPECT_NO_THROW(fit_power_law(s, FitOptions{2}));
}

TEST(FitPowerLaw, KminIsAnObservedValueWithAdmissibleTail) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto sample = testing::DiscretePowerLawSampler(2.2, 100'000).draw(300, seed);
    const auto fit = fit_power_law(sample);
    EXPECT_NE(std::find(sample.begin(), sample.end(), fit.k_min), sample.end());
    const auto tail = std::count_if(sample.begin(), sample.end(), [&](unsigned k) { return k >= fit.k_min; });
    EXPECT_EQ(static_cast<std::size_t>(tail), fit.tail_size);
    EXPECT_GE(fit.tail_size, 5u);
    EXPECT_GE(fit.alpha, kAlphaLow);
    EXPECT_LE(fit.alpha, kAlphaHigh);
    EXPECT_GE(fit.ks_distance, 0.0);
    EXPECT_LE(fit.ks_distance, 1.0);
  }
}

TEST(FitPowerLaw, Csv) {
  std::ostringstream out;
  write_fit_csv(out, PowerLawFit{2.5, 3, 0.125, 40});
  EXPECT_EQ(out.str(), "alpha,kmin,ks,tail_size\n2.5,3,0.125,40\n");
}

// ---------------------------------------------------------------------------

TEST(Knn, Star) {
  const auto c = knn_curve(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  ASSERT_EQ(c.averaged.size(), 2u);
  EXPECT_DOUBLE_EQ(c.averaged[0].k, 1.0);
  EXPECT_DOUBLE_EQ(c.averaged[0].knn, 4.0);
  EXPECT_DOUBLE_EQ(c.averaged[1].k, 4.0);
  EXPECT_DOUBLE_EQ(c.averaged[1].knn, 1.0);
  const auto norm = c.normalized_averaged();
  EXPECT_DOUBLE_EQ(norm[1].k, 1.0);
  EXPECT_DOUBLE_EQ(norm[1].knn, 0.25);
  ASSERT_TRUE(c.slope);
  EXPECT_LT(*c.slope, 0.0);
  EXPECT_EQ(c.mixing(), Mixing::Disassortative);
}

TEST(Knn, RegularGraphsAreDegenerate) {
  const auto c5 = knn_curve(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  EXPECT_FALSE(c5.slope);
  EXPECT_EQ(c5.mixing(), Mixing::Degenerate);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto e = testing::graph_from_mask(n, ~std::uint64_t{0} >> (64 - n * (n - 1) / 2));
    EXPECT_EQ(knn_curve(graph(n, e)).mixing(), Mixing::Degenerate);
  }
}

TEST(Knn, EdgelessRejected) { EXPECT_THROW(knn_curve(graph(3, {})), DomainError); }

TEST(Knn, AssortativeExample) {
  // K4 plus a disjoint edge: high degree nodes link to high degree nodes.
  const auto c = knn_curve(graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}}));
  ASSERT_TRUE(c.slope);
  EXPECT_GT(*c.slope, 0.0);
  EXPECT_EQ(c.mixing(), Mixing::Assortative);
}

// Sum over nodes of K_i * knn_i equals the sum of squared degrees.
TEST(KnnProperty, HandshakeConsistency) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto [n, edges] = testing::random_graph(seed, 3, 40);
    if (edges.empty()) continue;
    const auto g = graph(n, edges);
    const auto c = knn_curve(g);
    double lhs = 0.0, rhs = 0.0;
    for (const auto& p : c.scatter) lhs += p.k * p.knn;
    for (NodeId i = 0; i < n; ++i) rhs += static_cast<double>(g.degree(i) * g.degree(i));
    EXPECT_NEAR(lhs, rhs, 1e-9 * rhs);
    for (const auto& p : c.normalized_scatter()) {
      EXPECT_GT(p.k, 0.0);
      EXPECT_LE(p.k, 1.0);
      EXPECT_LE(p.knn, 1.0);
    }
  }
}

TEST(LeastSquares, Line) {
  const std::vector<KnnPoint> pts{{0.0, 1.0}, {1.0, 3.0}, {2.0, 5.0}};
  EXPECT_DOUBLE_EQ(*least_squares_slope(pts), 2.0);
  const std::vector<KnnPoint> one{{1.0, 1.0}};
  EXPECT_FALSE(least_squares_slope(one));
}

TEST(Knn, Csv) {
  std::ostringstream out;
  write_assortativity_csv(out, knn_curve(graph(3, {{0, 1}, {1, 2}})));
  EXPECT_EQ(out.str(), "k_norm,knn_norm,is_average\n0.5,1,0\n1,0.5,0\n0.5,1,0\n0.5,1,1\n1,0.5,1\n");
}

}  // namespace
}  // namespace charnet
