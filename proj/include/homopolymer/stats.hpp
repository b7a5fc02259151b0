#ifndef HOMOPOLYMER_STATS_HPP
#define HOMOPOLYMER_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace homopoly {

// Fixed-order pairwise summation.  Deterministic for a given input order and
// more accurate than naive accumulation on long Monte Carlo reductions.
inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

struct MeanCi {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  double half_width(double z = 1.96) const { return z * std_error; }
};

inline MeanCi mean_ci(const std::vector<double>& xs) {
  MeanCi out;
  out.n = static_cast<std::int64_t>(xs.size());
  if (out.n == 0) return out;
  out.mean = pairwise_sum(xs) / static_cast<double>(out.n);
  double ss = 0.0;
  for (double x : xs) {
    const double d = x - out.mean;
    ss += d * d;
  }
  if (out.n > 1)
    out.std_error = std::sqrt(ss / (static_cast<double>(out.n) - 1.0) /
                              static_cast<double>(out.n));
  return out;
}

// One-sample Kolmogorov-Smirnov statistic against a cdf, with optional
// per-sample weights (self-normalized).  sup runs over both one-sided gaps.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  const std::size_t n = samples.size();
  if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(f - lo, hi - f));
  }
  return d;
}

inline double weighted_ks_statistic(
    std::vector<double> samples, std::vector<double> weights,
    const std::function<double(double)>& cdf) {
  const std::size_t n = samples.size();
  if (n == 0 || weights.size() != n)
    throw std::invalid_argument("weighted_ks_statistic: bad sample");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a] < samples[b];
  });
  const double total = pairwise_sum(weights);
  if (!(total > 0.0))
    throw std::invalid_argument("weighted_ks_statistic: nonpositive mass");
  double cum = 0.0, d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(samples[order[i]]);
    const double lo = cum / total;
    cum += weights[order[i]];
    const double hi = cum / total;
    d = std::max(d, std::max(f - lo, hi - f));
  }
  return d;
}

// Two-sample KS; used for sign-flip symmetry checks.
inline double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("two_sample_ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::fabs(static_cast<double>(ia) / a.size() -
                              static_cast<double>(ib) / b.size()));
  }
  return d;
}

// Total-variation distance between a weighted empirical pmf on {0,1,...}
// and a reference pmf, with everything above `k_max` lumped into one bucket.
inline double tv_distance_pmf(const std::vector<std::int64_t>& values,
                              const std::vector<double>& weights,
                              const std::function<double(std::int64_t)>& pmf,
                              std::int64_t k_max) {
  if (values.size() != weights.size() || values.empty())
    throw std::invalid_argument("tv_distance_pmf: bad sample");
  std::vector<double> emp(static_cast<std::size_t>(k_max) + 2, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t k = values[i];
    if (k < 0) throw std::invalid_argument("tv_distance_pmf: negative value");
    emp[static_cast<std::size_t>(std::min(k, k_max + 1))] += weights[i];
    total += weights[i];
  }
  double ref_tail = 1.0, tv = 0.0;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const double p = pmf(k);
    ref_tail -= p;
    tv += std::fabs(emp[static_cast<std::size_t>(k)] / total - p);
  }
  tv += std::fabs(emp[static_cast<std::size_t>(k_max) + 1] / total -
                  std::max(ref_tail, 0.0));
  return 0.5 * tv;
}

// Energy distance between two point clouds in R^k (Szekely-Rizzo).
// O(n*m) pairwise; callers subsample to keep this affordable.
inline double energy_distance(const std::vector<std::vector<double>>& xs,
                              const std::vector<std::vector<double>>& ys) {
  auto dist = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  };
  const std::size_t n = xs.size(), m = ys.size();
  if (n == 0 || m == 0)
    throw std::invalid_argument("energy_distance: empty sample");
  double axy = 0.0, axx = 0.0, ayy = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) axy += dist(xs[i], ys[j]);
  axy /= static_cast<double>(n) * static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) axx += dist(xs[i], xs[j]);
  axx *= 2.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) ayy += dist(ys[i], ys[j]);
  ayy *= 2.0 / (static_cast<double>(m) * static_cast<double>(m));
  return 2.0 * axy - axx - ayy;
}

// Effective sample size of self-normalized importance weights.
inline double effective_sample_size(const std::vector<double>& weights) {
  const double s1 = pairwise_sum(weights);
  double s2 = 0.0;
  for (double w : weights) s2 += w * w;
  if (!(s2 > 0.0)) return 0.0;
  return s1 * s1 / s2;
}

} // namespace homopoly

#endif
