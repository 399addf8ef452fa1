#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace benford {

template <std::size_t N>
using Point = std::array<double, N>;

struct SimplexOptions {
  double initial_step = 0.5;
  /// Stop once every vertex is within this distance of the best one ...
  double x_tolerance = 1e-9;
  /// ... and the vertex values differ by at most this much.
  double f_tolerance = 1e-13;
  int max_evaluations = 4000;
  /// Fresh simplices built around the incumbent after convergence.
  int restarts = 2;
};

template <std::size_t N>
struct SimplexResult {
  Point<N> x{};
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). After
/// convergence the search restarts from the best vertex with a fresh simplex,
/// which guards against collapse onto a non-stationary point.
template <std::size_t N, class F>
SimplexResult<N> nelder_mead(F&& f, Point<N> start, const SimplexOptions& opt = {}) {
  SimplexResult<N> result;
  result.x = start;
  result.value = f(start);
  result.evaluations = 1;

  auto add = [](const Point<N>& a, const Point<N>& b, double t) {
    Point<N> out;
    for (std::size_t j = 0; j < N; ++j) out[j] = a[j] + t * (b[j] - a[j]);
    return out;
  };

  for (int round = 0; round <= opt.restarts; ++round) {
    std::array<Point<N>, N + 1> x;
    std::array<double, N + 1> fx;
    x[0] = result.x;
    fx[0] = result.value;
    for (std::size_t i = 0; i < N; ++i) {
      x[i + 1] = result.x;
      x[i + 1][i] += opt.initial_step;
      fx[i + 1] = f(x[i + 1]);
      ++result.evaluations;
    }

    bool converged = false;
    std::array<std::size_t, N + 1> order;
    while (result.evaluations < opt.max_evaluations) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
      const std::size_t best = order[0];
      const std::size_t worst = order[N];
      const std::size_t second = order[N - 1];

      double spread = 0.0;
      for (std::size_t i = 0; i <= N; ++i) {
        for (std::size_t j = 0; j < N; ++j) spread = std::max(spread, std::abs(x[i][j] - x[best][j]));
      }
      if (spread <= opt.x_tolerance && fx[worst] - fx[best] <= opt.f_tolerance) {
        converged = true;
        break;
      }

      Point<N> centroid{};
      for (std::size_t i = 0; i <= N; ++i) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < N; ++j) centroid[j] += x[i][j] / static_cast<double>(N);
      }

      const Point<N> reflected = add(centroid, x[worst], -1.0);
      const double fr = f(reflected);
      ++result.evaluations;

      if (fr < fx[best]) {
        const Point<N> expanded = add(centroid, x[worst], -2.0);
        const double fe = f(expanded);
        ++result.evaluations;
        if (fe < fr) {
          x[worst] = expanded;
          fx[worst] = fe;
        } else {
          x[worst] = reflected;
          fx[worst] = fr;
        }
        continue;
      }
      if (fr < fx[second]) {
        x[worst] = reflected;
        fx[worst] = fr;
        continue;
      }

      // Outside contraction when the reflection beat the worst point, inside otherwise.
      const bool outside = fr < fx[worst];
      const Point<N> contracted = outside ? add(centroid, reflected, 0.5) : add(centroid, x[worst], 0.5);
      const double fc = f(contracted);
      ++result.evaluations;
      if (fc < (outside ? fr : fx[worst])) {
        x[worst] = contracted;
        fx[worst] = fc;
        continue;
      }

      for (std::size_t i = 0; i <= N; ++i) {
        if (i == best) continue;
        x[i] = add(x[best], x[i], 0.5);
        fx[i] = f(x[i]);
        ++result.evaluations;
      }
    }

    const auto best_it = std::min_element(fx.begin(), fx.end());
    const auto best = static_cast<std::size_t>(best_it - fx.begin());
    const bool improved = fx[best] < result.value;
    if (fx[best] <= result.value) {
      result.x = x[best];
      result.value = fx[best];
    }
    result.converged = converged;
    if (!converged || !improved) break;
  }
  return result;
}

}  // namespace benford
