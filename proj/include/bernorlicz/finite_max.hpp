#pragma once

// Bounds for max_{1<=j<=p} |Z_j| when all p variables share the Orlicz norm
// bound ||Z_j||_{Psi_L} <= tau.

#include <cmath>
#include <stdexcept>

#include "bernorlicz/bernstein.hpp"
#include "bernorlicz/orlicz.hpp"

namespace bernorlicz {

struct MaxBoundInput {
  OrliczParams params;
  long p = 1;

  MaxBoundInput() = default;
  MaxBoundInput(OrliczParams params_, long p_) : params(params_), p(p_) {
    if (p < 1) throw std::invalid_argument("MaxBoundInput: p >= 1");
  }
};

// Norm statement for the positive part of an overshoot beyond a shift.
struct ShiftedNormStatement {
  double shift = 0.0;
  OrliczParams params;
};

// E max |Z_j| <= tau Psi_L^{-1}(p).
inline double max_expectation_bound(const MaxBoundInput& in) {
  return in.params.tau * psi_inverse(in.params.L, static_cast<double>(in.p));
}

// Under the Bernstein condition: sigma sqrt(6 log(1+p)) + (3K/sqrt(n)) log(1+p).
inline double max_bernstein_expectation_bound(const BernsteinProfile& prof, long p) {
  if (!(prof.sigma > 0.0))
    throw std::invalid_argument("max_bernstein_expectation_bound: sigma > 0 required");
  const double lp = std::log1p(static_cast<double>(p));
  return prof.sigma * std::sqrt(6.0 * lp) +
         3.0 * prof.K / std::sqrt(double(prof.n)) * lp;
}

// P(max |Z_j| >= tau [Psi_L^{-1}(p) + sqrt(t) + Lt/2]) <= 2 exp(-t).
inline TailStatement max_deviation_threshold(const MaxBoundInput& in, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("max_deviation_threshold: t > 0");
  const double L = in.params.L;
  return {in.params.tau * (psi_inverse(L, static_cast<double>(in.p)) + std::sqrt(t) +
                           0.5 * L * t),
          tail_probability_cap(t)};
}

// ||(max |Z_j| - shift)_+||_{Psi_{sqrt(3)L}} <= sqrt(3) tau.
inline ShiftedNormStatement max_deviation_norm(const MaxBoundInput& in) {
  return {max_expectation_bound(in), norm_from_tail(in.params.tau, in.params.L)};
}

}  // namespace bernorlicz
