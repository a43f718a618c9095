#pragma once

// Orlicz norms ||Z||_{Psi_L} = inf{c > 0 : E Psi_L(|Z|/c) <= 1}.
//
// For continuous distributions the expectation is integrated in the
// inverse-CDF parameterization with the substitution u = 1 - e^{-w},
//   E f(|Z|) = int_0^W f(q(e^{-w})) e^{-w} dw  + remainder,
// where q is the upper quantile of |Z|.  The substitution keeps deep
// sub-exponential tails reachable in double precision; the remainder past
// W is bounded rigorously from the distribution's tail envelope and added
// to the estimate, so the bisection result can only be conservative
// (an upper bound on the true norm).  Discrete distributions are summed
// exactly over their atoms.

#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>

#include "bernorlicz/distributions.hpp"
#include "bernorlicz/orlicz.hpp"
#include "bernorlicz/quadrature.hpp"

namespace bernorlicz {

class NormNotFiniteError : public std::runtime_error {
 public:
  NormNotFiniteError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), range_lo(lo), range_hi(hi) {}
  double range_lo;
  double range_hi;
};

struct NormOptions {
  double rel_tol = 1e-9;
  double quad_abs_tol = 1e-12;
  double divergence_cap = 1e6;
  double w_max = 700.0;
};

// E Psi_L(|Z|/c), reported as an upper estimate (quadrature + tail
// remainder).  Divergence is signalled by +inf.
inline double mean_psi(const Distribution& dist, double L, double c,
                       const NormOptions& opt = {}) {
  if (!(c > 0.0)) throw std::invalid_argument("mean_psi: c must be > 0");
  auto discrete = dist.atoms();
  if (!discrete.empty()) {
    double acc = 0.0;
    for (const auto& at : discrete) acc += at.p * psi(L, std::abs(at.x) / c);
    return acc;
  }
  auto f = [&](double w) {
    return psi(L, dist.abs_upper_quantile(std::exp(-w)) / c) * std::exp(-w);
  };
  QuadratureResult q =
      integrate_adaptive(f, 0.0, opt.w_max, opt.quad_abs_tol, opt.divergence_cap);
  if (q.diverged) return std::numeric_limits<double>::infinity();
  const double rem = dist.psi_tail_remainder(L, c, opt.w_max);
  return q.value + rem;
}

// Norm by bracketing + bisection on c -> E Psi_L(|Z|/c) - 1, to relative
// tolerance opt.rel_tol on the returned infimum.
inline double orlicz_norm_quadrature(const Distribution& dist, double L,
                                     const NormOptions& opt = {}) {
  if (!(L >= 0.0)) throw std::invalid_argument("orlicz_norm: L must be >= 0");
  const double q_hi = dist.abs_upper_quantile(1e-9);
  if (q_hi == 0.0) return 0.0;  // Z == 0 a.s.
  if (!dist.psi_norm_finite(L)) {
    throw NormNotFiniteError(
        "orlicz norm not finite for " + dist.describe() +
            " under Psi_L with L=" + std::to_string(L) + " (tail class)",
        0.0, std::numeric_limits<double>::infinity());
  }

  auto below_one = [&](double c) { return mean_psi(dist, L, c, opt) <= 1.0; };

  double lo = q_hi / psi_inverse(L, 1e12);
  double hi = q_hi / psi_inverse(L, 1e-12);
  int guard = 0;
  while (!below_one(hi)) {
    hi *= 2.0;
    if (++guard > 80)
      throw NormNotFiniteError("orlicz norm not finite within search range for " +
                                   dist.describe(),
                               lo, hi);
  }
  guard = 0;
  while (below_one(lo)) {
    lo *= 0.5;
    if (lo < 1e-300 || ++guard > 1100) return 0.0;
  }
  while (hi - lo > opt.rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (below_one(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Plug-in estimator: inf{c : (1/n) sum Psi_L(|z_i|/c) <= 1}.
inline double orlicz_norm_empirical(std::span<const double> sample, double L,
                                    double rel_tol = 1e-9) {
  if (sample.empty()) throw std::invalid_argument("orlicz_norm_empirical: empty sample");
  if (!(L >= 0.0)) throw std::invalid_argument("orlicz_norm_empirical: L must be >= 0");
  double zmax = 0.0;
  for (double z : sample) zmax = std::max(zmax, std::abs(z));
  if (zmax == 0.0) return 0.0;

  const double inv_n = 1.0 / static_cast<double>(sample.size());
  auto below_one = [&](double c) {
    double acc = 0.0;
    for (double z : sample) {
      acc += psi(L, std::abs(z) / c) * inv_n;
      if (acc > 1.0) return false;
    }
    return acc <= 1.0;
  };

  double lo = zmax / psi_inverse(L, 1e12);
  double hi = zmax / psi_inverse(L, 1e-12);
  // mean Psi >= Psi(zmax/c)/n, so the bracket is guaranteed for n <= 1e12
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (below_one(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace bernorlicz
