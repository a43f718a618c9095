#pragma once

// Bernstein-Orlicz function calculus.
//
// The family  Psi_L(z) = exp[((sqrt(1+2Lz)-1)/L)^2] - 1  interpolates
// sub-Gaussian behaviour (small Lz) and sub-exponential behaviour
// (large Lz).  L is dimensionless; L = 0 is accepted and means the
// pointwise limit Psi_0(z) = exp(z^2) - 1.

#include <cmath>
#include <stdexcept>
#include <string>

namespace bernorlicz {

// Conversion factor of the tail-to-norm direction: a two-sided tail bound
// at threshold tau*(sqrt(t) + L*t/2) gives an Orlicz norm bound with both
// constants multiplied by sqrt(3).  Exposed as a named constant, not a
// tunable.
inline constexpr double kTailToNormFactor = 1.7320508075688772;  // sqrt(3)

inline constexpr double kSqrt6 = 2.4494897427831781;

// psi_eval saturates instead of overflowing; callers only ever compare
// against small numbers, so the exact huge value is irrelevant.
inline constexpr double kPsiSaturation = 1e300;

struct OrliczParams {
  double L = 0.0;    // sub-Gaussian-range constant, dimensionless
  double tau = 0.0;  // norm value, units of the variable

  OrliczParams() = default;
  OrliczParams(double L_, double tau_) : L(L_), tau(tau_) {
    if (!(L >= 0.0) || !std::isfinite(L))
      throw std::invalid_argument("OrliczParams: L must be >= 0");
    if (!(tau >= 0.0) || !std::isfinite(tau))
      throw std::invalid_argument("OrliczParams: tau must be >= 0");
  }
};

struct TailStatement {
  double threshold = 0.0;
  double prob_bound = 1.0;  // min(1, 2 exp(-t))
};

struct PsiValue {
  double value = 0.0;
  bool saturated = false;
};

// Psi_L(z).  Uses the cancellation-free form
//   (sqrt(1+2Lz)-1)/L = 2z / (1 + sqrt(1+2Lz)),
// which also covers L = 0 directly.
inline PsiValue psi_eval(double L, double z) {
  if (!(L >= 0.0) || !std::isfinite(L))
    throw std::invalid_argument("psi_eval: L must be >= 0");
  if (!(z >= 0.0))
    throw std::invalid_argument("psi_eval: z must be >= 0");
  const double u = 2.0 * z / (1.0 + std::sqrt(1.0 + 2.0 * L * z));
  const double arg = u * u;
  if (arg > 690.0)  // log(kPsiSaturation) = 690.77
    return {kPsiSaturation, true};
  return {std::expm1(arg), false};
}

// Convenience accessor when the saturation flag is not needed.
inline double psi(double L, double z) { return psi_eval(L, z).value; }

// Psi_L^{-1}(t) = sqrt(log(1+t)) + (L/2) log(1+t).
inline double psi_inverse(double L, double t) {
  if (!(L >= 0.0) || !std::isfinite(L))
    throw std::invalid_argument("psi_inverse: L must be >= 0");
  if (!(t >= 0.0))
    throw std::invalid_argument("psi_inverse: t must be >= 0");
  const double w = std::log1p(t);
  return std::sqrt(w) + 0.5 * L * w;
}

inline double tail_probability_cap(double t) {
  return std::min(1.0, 2.0 * std::exp(-t));
}

// If tau = ||Z||_{Psi_L}, then P(|Z| > tau (sqrt(t) + Lt/2)) <= 2 exp(-t).
inline TailStatement tail_from_norm(const OrliczParams& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("tail_from_norm: t must be > 0");
  return {p.tau * (std::sqrt(t) + 0.5 * p.L * t), tail_probability_cap(t)};
}

// Converse direction: the tail bound P(|Z| >= tau (sqrt(t)+Lt/2)) <= 2e^{-t}
// for all t > 0 yields ||Z||_{Psi_{sqrt(3)L}} <= sqrt(3) tau.
inline OrliczParams norm_from_tail(double tau, double L) {
  if (!(tau >= 0.0)) throw std::invalid_argument("norm_from_tail: tau must be >= 0");
  if (!(L >= 0.0)) throw std::invalid_argument("norm_from_tail: L must be >= 0");
  return OrliczParams(kTailToNormFactor * L, kTailToNormFactor * tau);
}

}  // namespace bernorlicz
