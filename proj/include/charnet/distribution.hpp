#pragma once

// Degree-distribution analysis: empirical CCDF, discrete power-law fitting
// (maximum likelihood for alpha, Kolmogorov-Smirnov selection of k_min) and
// the nearest-neighbour degree curve used for assortativity.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charnet/error.hpp"
#include "charnet/format.hpp"
#include "charnet/graph.hpp"

namespace charnet {

// ---------------------------------------------------------------------------
// CCDF

struct CcdfPoint {
  unsigned k;
  double p;
};

struct DegreeCCDF {
  std::vector<CcdfPoint> points;  // ascending k, strictly decreasing p
};

// P(k) = |{i : k_i >= k}| / n over the distinct observed values. Zeros are
// ignored.
inline DegreeCCDF ccdf(std::span<const unsigned> samples) {
  std::vector<unsigned> sorted;
  sorted.reserve(samples.size());
  for (auto k : samples)
    if (k > 0) sorted.push_back(k);
  if (sorted.empty()) throw DomainError("ccdf of an empty sample");
  std::sort(sorted.begin(), sorted.end());

  DegreeCCDF out;
  const auto n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    out.points.push_back({sorted[i], static_cast<double>(sorted.size() - i) / n});
    const auto k = sorted[i];
    while (i < sorted.size() && sorted[i] == k) ++i;
  }
  return out;
}

inline void write_ccdf_csv(std::ostream& out, const DegreeCCDF& c) {
  out << "k,P\n";
  for (const auto& [k, p] : c.points) out << k << ',' << format_real(p) << '\n';
}

// ---------------------------------------------------------------------------
// Discrete power law, P(k) = k^-alpha / zeta(alpha, k_min) for k >= k_min.

// Hurwitz zeta sum_{k>=q} k^-s for s > 1, q >= 1: the first terms are summed
// directly and the remainder is closed with an Euler-Maclaurin tail, giving a
// relative error well below 1e-10 on s in (1, 6].
inline double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: q must be positive");
  constexpr int kDirect = 16;
  double sum = 0.0;
  for (int i = 0; i < kDirect; ++i) sum += std::pow(q + i, -s);

  const double a = q + kDirect;
  const double a_s = std::pow(a, -s);
  const double inv_a2 = 1.0 / (a * a);
  double tail = a * a_s / (s - 1.0) + 0.5 * a_s;
  // B_2j/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
  constexpr double kCoef[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0};
  double rising = s;
  double power = a_s / a;
  for (int j = 0; j < 5; ++j) {
    tail += kCoef[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power *= inv_a2;
  }
  return sum + tail;
}

// Log-likelihood of a tail sample, given the sum of its logs.
inline double power_law_log_likelihood(double alpha, unsigned k_min, std::size_t n, double sum_log) {
  return -static_cast<double>(n) * std::log(hurwitz_zeta(alpha, k_min)) - alpha * sum_log;
}

inline constexpr double kAlphaLow = 1.0 + 1e-7;
inline constexpr double kAlphaHigh = 6.0;
inline constexpr double kAlphaTolerance = 1e-6;

// Golden-section maximisation of a concave function on [lo, hi].
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Maximum-likelihood alpha for samples already restricted to k >= k_min.
// The log-likelihood is concave in alpha, so the bracket search is exact up
// to tolerance.
inline double fit_alpha(std::span<const unsigned> tail, unsigned k_min) {
  if (tail.empty()) throw DomainError("fit_alpha: empty tail");
  double sum_log = 0.0;
  for (auto k : tail) {
    if (k < k_min) throw DomainError("fit_alpha: sample below k_min");
    sum_log += std::log(static_cast<double>(k));
  }
  return golden_section_max(
      [&](double a) { return power_law_log_likelihood(a, k_min, tail.size(), sum_log); }, kAlphaLow,
      kAlphaHigh, kAlphaTolerance);
}

// Closed-form continuous approximation, 1 + n / sum ln(k / (k_min - 1/2)).
// Only meant as a cross-check of fit_alpha.
inline double continuous_alpha_estimate(std::span<const unsigned> tail, unsigned k_min) {
  if (tail.empty()) throw DomainError("continuous_alpha_estimate: empty tail");
  double s = 0.0;
  for (auto k : tail) s += std::log(static_cast<double>(k) / (k_min - 0.5));
  return 1.0 + static_cast<double>(tail.size()) / s;
}

// Largest gap between the empirical and fitted tail CDFs. `tail` is sorted.
inline double power_law_ks_distance(std::span<const unsigned> tail, unsigned k_min, double alpha) {
  const double norm = hurwitz_zeta(alpha, k_min);
  const auto n = static_cast<double>(tail.size());
  auto fitted_cdf = [&](unsigned k) { return 1.0 - hurwitz_zeta(alpha, k + 1.0) / norm; };

  double worst = 0.0;
  double below = 0.0;  // empirical CDF just below the current value
  for (std::size_t i = 0; i < tail.size();) {
    const auto k = tail[i];
    std::size_t j = i;
    while (j < tail.size() && tail[j] == k) ++j;
    // The empirical CDF is flat on [previous value, k-1]; the fitted one is
    // monotone, so the gap there peaks at an endpoint.
    if (k > k_min) worst = std::max(worst, std::abs(below - fitted_cdf(k - 1)));
    const double at = static_cast<double>(j) / n;
    worst = std::max(worst, std::abs(at - fitted_cdf(k)));
    below = at;
    i = j;
  }
  return worst;
}

struct PowerLawFit {
  double alpha = 0.0;
  unsigned k_min = 0;
  double ks_distance = 0.0;
  std::size_t tail_size = 0;
};

struct FitOptions {
  std::size_t tail_min = 5;  // smallest admissible tail sample
};

// Fits alpha for every observed k_min whose tail holds at least tail_min
// samples and two distinct values; keeps the k_min with the smallest KS
// distance (smaller k_min wins ties within 1e-12). Zeros are dropped first.
inline PowerLawFit fit_power_law(std::span<const unsigned> samples, FitOptions options = {}) {
  std::vector<unsigned> sorted;
  for (auto k : samples)
    if (k > 0) sorted.push_back(k);
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() == sorted.back())
    throw DegenerateDistributionError("power-law fit: all samples equal " + std::to_string(sorted.front()));
  if (sorted.empty() || sorted.size() < options.tail_min)
    throw InsufficientTailError("power-law fit: " + std::to_string(sorted.size()) +
                                " positive samples, tail threshold is " + std::to_string(options.tail_min));

  std::optional<PowerLawFit> best;
  for (std::size_t start = 0; start < sorted.size();) {
    const auto k_min = sorted[start];
    const std::span<const unsigned> tail(sorted.data() + start, sorted.size() - start);
    if (tail.size() < options.tail_min || tail.front() == tail.back()) break;

    PowerLawFit fit;
    fit.k_min = k_min;
    fit.tail_size = tail.size();
    fit.alpha = fit_alpha(tail, k_min);
    fit.ks_distance = power_law_ks_distance(tail, k_min, fit.alpha);
    if (!best || fit.ks_distance < best->ks_distance - 1e-12) best = fit;

    while (start < sorted.size() && sorted[start] == k_min) ++start;
  }
  if (!best)
    throw InsufficientTailError("power-law fit: no k_min leaves a tail of " + std::to_string(options.tail_min) +
                                " samples with two distinct values");
  return *best;
}

inline std::vector<unsigned> degree_samples(const CharacterGraph& g) {
  std::vector<unsigned> out;
  out.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out.push_back(static_cast<unsigned>(g.degree(i)));
  return out;
}

inline void write_fit_csv(std::ostream& out, const PowerLawFit& fit) {
  out << "alpha,kmin,ks,tail_size\n"
      << format_real(fit.alpha) << ',' << fit.k_min << ',' << format_real(fit.ks_distance) << ',' << fit.tail_size
      << '\n';
}

// ---------------------------------------------------------------------------
// Assortativity

struct KnnPoint {
  double k;
  double knn;
};

enum class Mixing { Assortative, Disassortative, Degenerate };

inline constexpr std::string_view mixing_name(Mixing m) {
  switch (m) {
    case Mixing::Assortative: return "assortative";
    case Mixing::Disassortative: return "disassortative";
    case Mixing::Degenerate: return "degenerate";
  }
  return "?";
}

struct AssortativityCurve {
  std::vector<KnnPoint> scatter;   // one per node with K_i >= 1, node order
  std::vector<KnnPoint> averaged;  // one per distinct degree, ascending k
  unsigned k_max = 0;
  double knn_max = 0.0;
  // Least-squares slope of the normalized averaged curve; empty when the
  // graph has a single distinct degree.
  std::optional<double> slope;

  Mixing mixing() const {
    if (!slope || *slope == 0.0) return Mixing::Degenerate;
    return *slope < 0.0 ? Mixing::Disassortative : Mixing::Assortative;
  }

  std::vector<KnnPoint> normalized_scatter() const { return normalize(scatter); }
  std::vector<KnnPoint> normalized_averaged() const { return normalize(averaged); }

 private:
  std::vector<KnnPoint> normalize(const std::vector<KnnPoint>& pts) const {
    std::vector<KnnPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.k / k_max, p.knn / knn_max});
    return out;
  }
};

inline std::optional<double> least_squares_slope(std::span<const KnnPoint> pts) {
  if (pts.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.k;
    my += p.knn;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& p : pts) {
    sxy += (p.k - mx) * (p.knn - my);
    sxx += (p.k - mx) * (p.k - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

inline AssortativityCurve knn_curve(const CharacterGraph& g) {
  if (g.edge_count() == 0) throw DomainError("assortativity curve of an edgeless graph");
  AssortativityCurve c;
  std::map<unsigned, std::pair<double, std::size_t>> by_degree;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto k = static_cast<unsigned>(g.degree(i));
    if (k == 0) continue;
    double sum = 0.0;
    for (auto j : g.neighbors(i)) sum += static_cast<double>(g.degree(j));
    const double knn = sum / k;
    c.scatter.push_back({static_cast<double>(k), knn});
    auto& [acc, count] = by_degree[k];
    acc += knn;
    ++count;
    c.k_max = std::max(c.k_max, k);
    c.knn_max = std::max(c.knn_max, knn);
  }
  for (const auto& [k, acc] : by_degree)
    c.averaged.push_back({static_cast<double>(k), acc.first / static_cast<double>(acc.second)});
  const auto norm = c.normalized_averaged();
  c.slope = least_squares_slope(norm);
  return c;
}

// k_norm,knn_norm,is_average: scatter rows first, then the averaged curve.
inline void write_assortativity_csv(std::ostream& out, const AssortativityCurve& c) {
  out << "k_norm,knn_norm,is_average\n";
  for (const auto& p : c.normalized_scatter()) out << format_real(p.k) << ',' << format_real(p.knn) << ",0\n";
  for (const auto& p : c.normalized_averaged()) out << format_real(p.k) << ',' << format_real(p.knn) << ",1\n";
}

}  // namespace charnet
