#ifndef HOMOPOLYMER_QUADRATURE_HPP
#define HOMOPOLYMER_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace homopoly {

inline constexpr double kPi = 3.14159265358979323846;

enum class QuadScheme {
  tensor_gauss_legendre,
  // Tensor Gauss-Legendre on dyadically subdivided boxes toward phi = 0,
  // where the momentum-space integrands peak.
  tensor_gauss_legendre_dyadic,
};

struct QuadratureSpec {
  int nodes_per_axis = 24;
  QuadScheme scheme = QuadScheme::tensor_gauss_legendre_dyadic;
  double abs_tol = 1e-9;
  int max_depth = 60;

  void validate() const {
    if (nodes_per_axis < 8)
      throw std::invalid_argument("QuadratureSpec: nodes_per_axis must be >= 8");
    if (!(abs_tol > 0.0))
      throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
  }
};

template <typename T>
struct QuadOutcome {
  T value{};
  double error_estimate = 0.0;
  bool converged = false;
};

using QuadResult = QuadOutcome<double>;
using QuadResultC = QuadOutcome<std::complex<double>>;

namespace detail {

struct GlRule {
  std::vector<double> nodes;   // on (-1, 1)
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; standard and accurate to ~1e-15.
inline GlRule compute_gl_rule(int n) {
  GlRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return rule;
}

inline const GlRule& gl_rule(int n) {
  thread_local std::map<int, GlRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl_rule(n)).first;
  return it->second;
}

} // namespace detail

// Tensor Gauss-Legendre over the box [lo, hi]^d (componentwise bounds).
// The integrand receives the point as a pointer to d doubles.
template <typename T, typename Fn>
T integrate_box_gl(const Fn& f, const std::array<double, 3>& lo,
                   const std::array<double, 3>& hi, int d, int n) {
  const auto& rule = detail::gl_rule(n);
  std::array<std::vector<double>, 3> pts, wts;
  for (int a = 0; a < d; ++a) {
    pts[a].resize(n);
    wts[a].resize(n);
    const double c = 0.5 * (hi[a] + lo[a]);
    const double h = 0.5 * (hi[a] - lo[a]);
    for (int i = 0; i < n; ++i) {
      pts[a][i] = c + h * rule.nodes[i];
      wts[a][i] = h * rule.weights[i];
    }
  }
  T total{};
  std::array<double, 3> phi{};
  if (d == 1) {
    for (int i = 0; i < n; ++i) {
      phi[0] = pts[0][i];
      total += wts[0][i] * f(phi.data());
    }
  } else if (d == 2) {
    for (int i = 0; i < n; ++i) {
      phi[0] = pts[0][i];
      T row{};
      for (int j = 0; j < n; ++j) {
        phi[1] = pts[1][j];
        row += wts[1][j] * f(phi.data());
      }
      total += wts[0][i] * row;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      phi[0] = pts[0][i];
      for (int j = 0; j < n; ++j) {
        phi[1] = pts[1][j];
        T row{};
        for (int k = 0; k < n; ++k) {
          phi[2] = pts[2][k];
          row += wts[2][k] * f(phi.data());
        }
        total += wts[0][i] * wts[1][j] * row;
      }
    }
  }
  return total;
}

namespace detail {

// One pass of the dyadic-corner scheme at a fixed node count.  The cube
// [0,pi]^d is peeled into shells [0,a]^d \ [0,a/2]^d; each shell splits into
// 2^d - 1 boxes on which the integrand is smooth relative to the box size.
template <typename T, typename Fn>
T corner_dyadic_pass(const Fn& f, int d, int n, double abs_tol, int max_depth,
                     double* tail_out) {
  T total{};
  double a = kPi;
  double prev_mag = -1.0;
  double tail = 0.0;
  int k = 0;
  for (; k < max_depth; ++k) {
    const double b = 0.5 * a;
    T shell{};
    for (int mask = 1; mask < (1 << d); ++mask) {
      std::array<double, 3> lo{}, hi{};
      for (int axis = 0; axis < d; ++axis) {
        if (mask & (1 << axis)) {
          lo[axis] = b;
          hi[axis] = a;
        } else {
          lo[axis] = 0.0;
          hi[axis] = b;
        }
      }
      shell += integrate_box_gl<T>(f, lo, hi, d, n);
    }
    total += shell;
    const double mag = std::abs(shell);
    if (prev_mag > 0.0 && mag < 0.25 * abs_tol) {
      const double r = std::min(mag / prev_mag, 0.75);
      tail = mag * r / (1.0 - r);
      if (tail < 0.25 * abs_tol) {
        a = b;
        ++k;
        break;
      }
    }
    prev_mag = std::max(mag, 1e-300);
    a = b;
  }
  // Core box: either negligible by the tail estimate or the integrand is
  // bounded there; a direct rule picks up whatever mass remains.
  std::array<double, 3> lo{}, hi{};
  for (int axis = 0; axis < d; ++axis) hi[axis] = a;
  const T core = integrate_box_gl<T>(f, lo, hi, d, n);
  total += core;
  if (tail_out) *tail_out = tail + (k >= max_depth ? std::abs(core) : 0.0);
  return total;
}

} // namespace detail

// Integrate f over [0, pi]^d per the spec's scheme.  The error estimate
// combines a node-refinement delta with the dyadic tail estimate.
template <typename T, typename Fn>
QuadOutcome<T> integrate_momentum_cube(const Fn& f, int d,
                                       const QuadratureSpec& spec) {
  spec.validate();
  if (d < 1 || d > 3)
    throw std::invalid_argument("integrate_momentum_cube: d must be 1..3");
  QuadOutcome<T> out;
  if (spec.scheme == QuadScheme::tensor_gauss_legendre) {
    std::array<double, 3> lo{}, hi{};
    for (int a = 0; a < d; ++a) hi[a] = kPi;
    const T v1 = integrate_box_gl<T>(f, lo, hi, d, spec.nodes_per_axis);
    const T v2 = integrate_box_gl<T>(f, lo, hi, d, spec.nodes_per_axis + 8);
    out.value = v2;
    out.error_estimate = std::abs(v2 - v1);
  } else {
    double tail1 = 0.0, tail2 = 0.0;
    const T v1 = detail::corner_dyadic_pass<T>(f, d, spec.nodes_per_axis,
                                               spec.abs_tol, spec.max_depth,
                                               &tail1);
    const T v2 = detail::corner_dyadic_pass<T>(f, d, spec.nodes_per_axis + 8,
                                               spec.abs_tol, spec.max_depth,
                                               &tail2);
    out.value = v2;
    out.error_estimate = std::abs(v2 - v1) + std::max(tail1, tail2);
  }
  out.converged = out.error_estimate <= spec.abs_tol;
  return out;
}

// Adaptive Gauss-Legendre on an interval, complex-valued.  Used where an
// integrand has a sharp interior feature the dyadic scheme does not target.
template <typename T, typename Fn>
T integrate_adaptive_1d(const Fn& f, double a, double b, double tol,
                        int depth = 0) {
  auto gl = [&](double lo, double hi) {
    const auto& rule = detail::gl_rule(15);
    const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
    T s{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      s += h * rule.weights[i] * f(c + h * rule.nodes[i]);
    return s;
  };
  const T whole = gl(a, b);
  const double m = 0.5 * (a + b);
  const T split = gl(a, m) + gl(m, b);
  if (std::abs(split - whole) <= tol || depth >= 48) return split;
  return integrate_adaptive_1d<T>(f, a, m, 0.5 * tol, depth + 1) +
         integrate_adaptive_1d<T>(f, m, b, 0.5 * tol, depth + 1);
}

// Composite Simpson on a uniform grid (odd point count preferred; a trailing
// trapezoid handles an even count).
inline double simpson_uniform(const std::vector<double>& values, double h) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  std::size_t last = (n % 2 == 1) ? n - 1 : n - 2;
  for (std::size_t i = 0; i + 2 <= last; i += 2)
    total += h / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  if (n % 2 == 0) total += 0.5 * h * (values[n - 2] + values[n - 1]);
  return total;
}

} // namespace homopoly

#endif
