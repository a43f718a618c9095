#pragma once

// Bernstein moment condition and the tail / Orlicz-norm bounds it yields
// for normalized sums  n^{-1/2} sum X_i.

#include <cmath>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "bernorlicz/distributions.hpp"
#include "bernorlicz/orlicz.hpp"

namespace bernorlicz {

struct BernsteinProfile {
  double sigma = 0.0;  // variance scale
  double K = 1.0;      // moment-growth scale
  long n = 1;          // sample count

  BernsteinProfile() = default;
  BernsteinProfile(double sigma_, double K_, long n_) : sigma(sigma_), K(K_), n(n_) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("BernsteinProfile: sigma >= 0");
    if (!(K > 0.0)) throw std::invalid_argument("BernsteinProfile: K > 0");
    if (n < 1) throw std::invalid_argument("BernsteinProfile: n >= 1");
  }
};

struct BernsteinCheck {
  bool holds = false;
  int worst_m = 0;
  double worst_ratio = 0.0;
  std::vector<double> ratios;  // ratios[m-2] for m = 2..m_max
};

namespace detail {
// moments[m-2] = averaged E|X|^m for m = 2..m_max
inline BernsteinCheck bernstein_check_from_moments(std::span<const double> moments,
                                                   double sigma, double K) {
  BernsteinCheck out;
  out.worst_ratio = -1.0;
  for (size_t i = 0; i < moments.size(); ++i) {
    const int m = static_cast<int>(i) + 2;
    if (!std::isfinite(moments[i]))
      throw std::runtime_error("check_bernstein: moment of order m=" +
                               std::to_string(m) + " is not finite");
    const double rhs =
        0.5 * boost::math::tgamma(m + 1.0) * std::pow(K, m - 2) * sigma * sigma;
    const double ratio = rhs > 0.0 ? moments[i] / rhs
                                   : (moments[i] > 0.0
                                          ? std::numeric_limits<double>::infinity()
                                          : 0.0);
    out.ratios.push_back(ratio);
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_m = m;
    }
  }
  out.holds = out.worst_ratio <= 1.0 + 1e-12;
  return out;
}
}  // namespace detail

// Verifies E|X|^m <= (m!/2) K^{m-2} sigma^2 for m = 2..m_max.
// (m = 1 is deliberately skipped; the condition there is vacuous for the
// bounds computed downstream.)
inline BernsteinCheck check_bernstein(const Distribution& dist, double sigma,
                                      double K, int m_max = 20) {
  if (m_max < 2) throw std::invalid_argument("check_bernstein: m_max >= 2");
  std::vector<double> moments;
  for (int m = 2; m <= m_max; ++m) moments.push_back(dist.abs_moment(m));
  return detail::bernstein_check_from_moments(moments, sigma, K);
}

// Heterogeneous version: the averaged condition
//   (1/k) sum_i E|X_i|^m <= (m!/2) K^{m-2} sigma^2.
inline BernsteinCheck check_bernstein(
    std::span<const std::shared_ptr<const Distribution>> dists, double sigma,
    double K, int m_max = 20) {
  if (dists.empty()) throw std::invalid_argument("check_bernstein: empty list");
  std::vector<double> moments;
  for (int m = 2; m <= m_max; ++m) {
    double acc = 0.0;
    for (const auto& d : dists) acc += d->abs_moment(m);
    moments.push_back(acc / static_cast<double>(dists.size()));
  }
  return detail::bernstein_check_from_moments(moments, sigma, K);
}

inline BernsteinCheck check_bernstein_sample(std::span<const double> sample,
                                             double sigma, double K,
                                             int m_max = 20) {
  if (sample.empty()) throw std::invalid_argument("check_bernstein_sample: empty");
  std::vector<double> moments;
  for (int m = 2; m <= m_max; ++m) {
    double acc = 0.0;
    for (double x : sample) acc += std::pow(std::abs(x), m);
    moments.push_back(acc / static_cast<double>(sample.size()));
  }
  return detail::bernstein_check_from_moments(moments, sigma, K);
}

// Threshold for |n^{-1/2} sum X_i|: sigma sqrt(2t) + K t / sqrt(n).
inline TailStatement bernstein_tail(const BernsteinProfile& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("bernstein_tail: t must be > 0");
  return {p.sigma * std::sqrt(2.0 * t) + p.K * t / std::sqrt(double(p.n)),
          tail_probability_cap(t)};
}

// ||n^{-1/2} sum X_i||_{Psi_L} <= sqrt(6) sigma with L = sqrt(6) K/(sqrt(n) sigma).
inline OrliczParams bernstein_orlicz_norm(const BernsteinProfile& p) {
  if (!(p.sigma > 0.0))
    throw std::invalid_argument(
        "bernstein_orlicz_norm: degenerate profile (sigma = 0); use bernstein_tail "
        "directly");
  return OrliczParams(kSqrt6 * p.K / (std::sqrt(double(p.n)) * p.sigma),
                      kSqrt6 * p.sigma);
}

}  // namespace bernorlicz
