#ifndef HOMOPOLYMER_LATTICE_HPP
#define HOMOPOLYMER_LATTICE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "homopolymer/rng.hpp"

namespace homopoly {

// A lattice site in Z^d, d in {1,2,3}.  Unused coordinates stay zero.
struct Site {
  std::array<std::int32_t, 3> coord{};
  int dim = 1;

  static Site origin(int d) {
    check_dim(d);
    Site s;
    s.dim = d;
    return s;
  }

  static Site of(int d, std::int32_t x, std::int32_t y = 0,
                 std::int32_t z = 0) {
    check_dim(d);
    Site s;
    s.dim = d;
    s.coord = {x, y, z};
    if (d < 3 && z != 0) throw std::invalid_argument("Site: z in d<3");
    if (d < 2 && y != 0) throw std::invalid_argument("Site: y in d<2");
    return s;
  }

  static void check_dim(int d) {
    if (d < 1 || d > 3)
      throw std::invalid_argument("Site: dimension must be 1, 2 or 3");
  }

  bool is_origin() const {
    return coord[0] == 0 && coord[1] == 0 && coord[2] == 0;
  }

  std::int64_t norm1() const {
    return std::llabs(coord[0]) + std::llabs(coord[1]) + std::llabs(coord[2]);
  }

  std::int64_t norm_inf() const {
    std::int64_t m = 0;
    for (int a = 0; a < 3; ++a)
      m = std::max<std::int64_t>(m, std::llabs(coord[a]));
    return m;
  }

  double norm2() const {
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
      s += static_cast<double>(coord[a]) * coord[a];
    return std::sqrt(s);
  }

  Site neighbor(int axis, int dir) const {
    Site s = *this;
    s.coord[axis] += dir;
    return s;
  }

  Site negated() const {
    Site s = *this;
    for (int a = 0; a < dim; ++a) s.coord[a] = -s.coord[a];
    return s;
  }

  friend bool operator==(const Site& a, const Site& b) {
    return a.dim == b.dim && a.coord == b.coord;
  }
  friend bool operator!=(const Site& a, const Site& b) { return !(a == b); }
};

inline bool is_unit_step(const Site& a, const Site& b) {
  if (a.dim != b.dim) return false;
  std::int64_t diff = 0;
  for (int axis = 0; axis < 3; ++axis)
    diff += std::llabs(static_cast<std::int64_t>(b.coord[axis]) -
                       a.coord[axis]);
  return diff == 1;
}

// Cadlag nearest-neighbor trajectory stored sparsely: jump times plus the
// visited sites.  sites[k] is occupied on [jump_times[k-1], jump_times[k]).
struct Path {
  double horizon = 0.0;
  std::vector<double> jump_times;  // strictly increasing, all <= horizon
  std::vector<Site> sites;         // size = jump_times.size() + 1

  Path(double horizon_, std::vector<double> times, std::vector<Site> visited)
      : horizon(horizon_),
        jump_times(std::move(times)),
        sites(std::move(visited)) {
    validate();
  }

  void validate() const {
    if (horizon < 0.0) throw std::invalid_argument("Path: negative horizon");
    if (sites.size() != jump_times.size() + 1)
      throw std::invalid_argument("Path: site/jump count mismatch");
    double prev = 0.0;
    for (std::size_t i = 0; i < jump_times.size(); ++i) {
      const double t = jump_times[i];
      if (!(t > prev))
        throw std::invalid_argument("Path: jump times not increasing");
      if (t > horizon) throw std::invalid_argument("Path: jump past horizon");
      if (!is_unit_step(sites[i], sites[i + 1]))
        throw std::invalid_argument("Path: non-unit step");
      prev = t;
    }
  }

  const Site& start() const { return sites.front(); }
  const Site& endpoint() const { return sites.back(); }

  // Position at time t (right-continuous).
  const Site& at(double t) const {
    if (t < 0.0 || t > horizon) throw std::out_of_range("Path::at: time");
    std::size_t k = 0;
    while (k < jump_times.size() && jump_times[k] <= t) ++k;
    return sites[k];
  }
};

// Occupation functionals of a path: Lebesgue time at the origin, the last
// time the origin is occupied, and the number of jumps landing at the origin
// (a start at the origin counts as visit number zero, not as a jump).
struct OccupationStats {
  double occupation_time_at_origin = 0.0;
  double last_zero_time = 0.0;
  std::int64_t zero_visit_count = 0;
};

inline OccupationStats occupation_stats(const Path& path) {
  OccupationStats out;
  const std::size_t m = path.jump_times.size();
  for (std::size_t k = 0; k <= m; ++k) {
    const double seg_start = (k == 0) ? 0.0 : path.jump_times[k - 1];
    const double seg_end = (k == m) ? path.horizon : path.jump_times[k];
    if (path.sites[k].is_origin()) {
      out.occupation_time_at_origin += seg_end - seg_start;
      out.last_zero_time = seg_end;
      if (k > 0) ++out.zero_visit_count;
    }
  }
  return out;
}

// Restriction of the occupation functionals to [0, t].
inline OccupationStats occupation_stats_until(const Path& path, double t) {
  OccupationStats out;
  const std::size_t m = path.jump_times.size();
  for (std::size_t k = 0; k <= m; ++k) {
    const double seg_start = (k == 0) ? 0.0 : path.jump_times[k - 1];
    if (seg_start >= t) break;
    const double seg_end =
        std::min((k == m) ? path.horizon : path.jump_times[k], t);
    if (path.sites[k].is_origin()) {
      out.occupation_time_at_origin += seg_end - seg_start;
      out.last_zero_time = seg_end;
      if (k > 0) ++out.zero_visit_count;
    }
  }
  return out;
}

// Free walk: total jump rate 1 from every site, uniform over the 2d unit
// neighbors.  Deterministic given the stream.
inline Path simulate_free_walk(int d, const Site& start, double horizon,
                               RngStream& rng) {
  Site::check_dim(d);
  if (start.dim != d)
    throw std::invalid_argument("simulate_free_walk: start dimension");
  if (horizon < 0.0)
    throw std::invalid_argument("simulate_free_walk: negative horizon");
  std::vector<double> times;
  std::vector<Site> sites{start};
  double t = rng.next_exponential(1.0);
  Site here = start;
  while (t <= horizon) {
    const std::uint32_t pick = rng.next_below(static_cast<std::uint32_t>(2 * d));
    here = here.neighbor(static_cast<int>(pick >> 1), (pick & 1) ? 1 : -1);
    times.push_back(t);
    sites.push_back(here);
    t += rng.next_exponential(1.0);
  }
  return Path(horizon, std::move(times), std::move(sites));
}

// Diffusive rescaling: evaluations of X(n s)/sqrt(n) on a grid of s in [0,1].
inline std::vector<double> rescale_path(const Path& path, double n,
                                        const std::vector<double>& grid,
                                        int component = 0) {
  if (path.horizon < n)
    throw std::invalid_argument("rescale_path: horizon shorter than n");
  std::vector<double> out;
  out.reserve(grid.size());
  const double root = std::sqrt(n);
  std::size_t k = 0;
  for (double s : grid) {
    if (s < 0.0 || s > 1.0)
      throw std::invalid_argument("rescale_path: grid point outside [0,1]");
    const double t = n * s;
    // Grids are nondecreasing in every caller; rewind defensively otherwise.
    if (k > 0 && path.jump_times[k - 1] > t) k = 0;
    while (k < path.jump_times.size() && path.jump_times[k] <= t) ++k;
    out.push_back(path.sites[k].coord[component] / root);
  }
  return out;
}

} // namespace homopoly

#endif
