#pragma once

// Shared numeric kernels: safeguarded scalar root finding, Gauss-Legendre
// panels, adaptive Simpson quadrature, cubic Hermite tables, a deterministic
// RNG, FNV hashing and a chunked parallel_for.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "rarewave/errors.hpp"

namespace rarewave {

struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Newton with a bisection safeguard for a residual whose slope has one sign
// and magnitude >= min_abs_slope. fdf(x) returns {f(x), f'(x)}. Converges on
// |f| <= tol; throws NoConvergence at the iteration cap.
template <typename Fdf>
RootResult solve_monotone(Fdf&& fdf, double x0, double tol, double min_abs_slope,
                          int max_iter = 200) {
  auto [f, df] = fdf(x0);
  int iters = 1;
  double x = x0;
  if (std::abs(f) <= tol) return {x, f, iters};

  const bool increasing = df > 0.0;
  double jump = std::min(std::abs(f) / min_abs_slope * 1.0625 + 1e-300, 1e18);
  double lo, hi;  // bracket with f(lo) and f(hi) of opposite sign
  double flo, fhi;
  for (;;) {
    if (increasing == (f > 0.0)) {
      lo = x - jump;
      hi = x;
      fhi = f;
      flo = fdf(lo).first;
      ++iters;
      if ((flo > 0.0) != (fhi > 0.0)) break;
    } else {
      lo = x;
      hi = x + jump;
      flo = f;
      fhi = fdf(hi).first;
      ++iters;
      if ((flo > 0.0) != (fhi > 0.0)) break;
    }
    jump *= 2.0;
    if (iters >= max_iter || !std::isfinite(jump))
      throw NoConvergence("root bracket did not close");
  }
  if (!increasing) {
    std::swap(flo, fhi);  // after this, f "increases" from flo<0 to fhi>0
  }

  while (iters < max_iter) {
    double step = f / df;
    double xn = x - step;
    if (!(xn > std::min(lo, hi) && xn < std::max(lo, hi)) || !std::isfinite(xn))
      xn = 0.5 * (lo + hi);
    x = xn;
    std::tie(f, df) = fdf(x);
    ++iters;
    if (std::abs(f) <= tol) return {x, f, iters};
    const bool below = increasing ? (f < 0.0) : (f > 0.0);
    if (below)
      lo = x;
    else
      hi = x;
  }
  throw NoConvergence("scalar root iteration cap reached");
}

// Adaptive Simpson on [a, b] to absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 60);

// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1].
const std::array<double, 16>& gl16_nodes();
const std::array<double, 16>& gl16_weights();

// Cubic Hermite interpolation on a uniform table, with a Fritsch-Carlson
// clamp available for monotone data. Evaluation clamps to the end values
// outside [x0, x0 + (n-1) dx].
class HermiteTable {
 public:
  HermiteTable() = default;
  HermiteTable(double x0, double dx, std::vector<double> values, std::vector<double> slopes,
               bool enforce_monotone);
  double operator()(double x) const;

 private:
  double x0_ = 0.0, dx_ = 1.0;
  std::vector<double> y_, m_;
};

// Deterministic uniform generator; the double conversion avoids
// implementation-defined std::uniform_real_distribution behavior.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t fnv1a64(std::string_view data);

// Runs body(begin, end) over contiguous chunks of [0, n). Results must not
// depend on the chunking; reductions belong to the caller, in index order.
void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace rarewave
