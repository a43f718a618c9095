#pragma once

// Adaptive Gauss-Kronrod integration with an explicit divergence guard.
// The 15-point rule and its error estimate come from Boost.Math; the
// adaptive driver is ours so that partial sums can be monitored: once the
// accumulated integral exceeds `divergence_cap` the integral is declared
// divergent instead of being refined further.

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace bernorlicz {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool diverged = false;
};

namespace detail {
struct QuadInterval {
  double a, b, value, error;
  bool operator<(const QuadInterval& o) const { return error < o.error; }
};
}  // namespace detail

template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double abs_tol = 1e-12,
                                    double divergence_cap = 1e6,
                                    int max_intervals = 4000) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto apply = [&](double lo, double hi) {
    detail::QuadInterval iv;
    iv.a = lo;
    iv.b = hi;
    double err = 0.0;
    iv.value = GK::integrate(f, lo, hi, 0, 0.0, &err);
    iv.error = err;
    if (!std::isfinite(iv.value)) {
      iv.value = divergence_cap * 2.0;
      iv.error = 0.0;
    }
    return iv;
  };

  std::priority_queue<detail::QuadInterval> queue;
  queue.push(apply(a, b));
  double total = queue.top().value;
  double total_err = queue.top().error;
  int n_intervals = 1;

  while (total_err > abs_tol && n_intervals < max_intervals) {
    if (total > divergence_cap) return {total, total_err, true};
    detail::QuadInterval worst = queue.top();
    queue.pop();
    if (worst.error <= 0.0 || worst.b - worst.a <= 0.0 ||
        !(worst.a + 0.5 * (worst.b - worst.a) > worst.a)) {
      // interval no longer splittable in double precision
      queue.push(worst);
      break;
    }
    const double mid = worst.a + 0.5 * (worst.b - worst.a);
    auto left = apply(worst.a, mid);
    auto right = apply(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n_intervals;
  }
  if (total > divergence_cap) return {total, total_err, true};
  return {total, total_err, false};
}

}  // namespace bernorlicz
