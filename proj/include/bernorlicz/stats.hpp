#pragma once

// Exact binomial (Clopper-Pearson) confidence intervals and small helpers
// for Monte Carlo tail screens.

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/beta.hpp>

namespace bernorlicz {

struct BinomialCI {
  double lo = 0.0;
  double hi = 1.0;
};

// Two-sided Clopper-Pearson interval at the given confidence level.
inline BinomialCI clopper_pearson(long n, long k, double confidence = 0.99) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("clopper_pearson: bad n/k");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("clopper_pearson: confidence in (0,1)");
  const double alpha = 1.0 - confidence;
  BinomialCI ci;
  if (k > 0) {
    boost::math::beta_distribution<double> lo_dist(double(k), double(n - k + 1));
    ci.lo = boost::math::quantile(lo_dist, 0.5 * alpha);
  }
  if (k < n) {
    boost::math::beta_distribution<double> hi_dist(double(k + 1), double(n - k));
    ci.hi = boost::math::quantile(hi_dist, 1.0 - 0.5 * alpha);
  }
  return ci;
}

// Standard error of a binomial frequency at probability p over R trials.
inline double binomial_stderr(double p, long R) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(R));
}

}  // namespace bernorlicz
