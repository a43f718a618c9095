#pragma once

// Evaluation models for the built-in distributions.  Every kind provides
// CDF, inverse CDF, absolute moments, and stable upper quantiles of |Z|
// (parameterized by the tail mass, so that tail masses far below double
// resolution of 1-u remain reachable).  Purely discrete kinds expose their
// atoms so that expectations can be taken by exact summation.

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "bernorlicz/orlicz.hpp"

#include <json.hpp>

namespace bernorlicz {

struct Atom {
  double x;
  double p;
};

class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual double cdf(double x) const = 0;
  virtual double quantile(double u) const = 0;  // u in (0,1)
  virtual double abs_moment(int m) const = 0;   // E|Z|^m

  // Upper quantile of |Z| at tail mass eps: inf{z : P(|Z| > z) <= eps}.
  virtual double abs_upper_quantile(double eps) const = 0;

  // Whether ||Z||_{Psi_L} is finite for some c (tail-class knowledge).
  virtual bool psi_norm_finite(double L) const = 0;

  // Upper bound for the tail integral  int_W^inf Psi_L(q(e^-w)/c) e^-w dw
  // where q is abs_upper_quantile; +inf when the integral diverges.
  virtual double psi_tail_remainder(double L, double c, double W) const = 0;

  // Non-empty for purely discrete distributions (atoms sorted by x).
  virtual std::span<const Atom> atoms() const { return {}; }

  virtual std::string describe() const = 0;
};

namespace detail {
// Smallest magnitude whose strict upper-tail mass is <= eps, over a finite
// set of atoms.
inline double discrete_abs_upper_quantile(std::span<const Atom> atoms, double eps) {
  std::vector<std::pair<double, double>> mag;  // (|x|, p), merged
  for (const auto& at : atoms) {
    mag.emplace_back(std::abs(at.x), at.p);
  }
  std::sort(mag.begin(), mag.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& [a, p] : mag) {
    if (!merged.empty() && merged.back().first == a)
      merged.back().second += p;
    else
      merged.emplace_back(a, p);
  }
  // scanning down, `tail` is the strict upper-tail mass above merged[i]
  double tail = 0.0;
  double best = merged.back().first;
  for (int i = static_cast<int>(merged.size()) - 1; i >= 0; --i) {
    if (tail > eps) break;
    best = merged[i].first;
    tail += merged[i].second;
  }
  return best;
}

// Remainder bound from a sub-exponential tail envelope
// P(|Z| > z) <= exp(a - b z), i.e. q(eps) <= (a - log eps)/b.
// Uses Psi_L(x) <= exp(2x/L) for L > 0.
inline double subexp_remainder(double L, double c, double W, double a, double b) {
  if (L <= 0.0) return std::numeric_limits<double>::infinity();
  const double r = 2.0 / (b * L * c);
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_rem = r * a + r * W - W - std::log(1.0 - r);
  return std::exp(std::min(log_rem, 690.0));
}
// Remainder bound from a sub-Gaussian envelope P(|Z| > z) <= exp(a - z^2/(2v)),
// i.e. q(eps)^2 <= 2v(a - log eps).  Uses Psi_L(x) <= exp(x^2) for L >= 0.
inline double subgauss_remainder(double c, double W, double a, double v) {
  const double r = 2.0 * v / (c * c);
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_rem = r * a + r * W - W - std::log(1.0 - r);
  return std::exp(std::min(log_rem, 690.0));
}
}  // namespace detail

class StandardNormal final : public Distribution {
 public:
  double cdf(double x) const override { return boost::math::cdf(dist_, x); }
  double quantile(double u) const override { return boost::math::quantile(dist_, u); }
  double abs_moment(int m) const override {
    // E|Z|^m = 2^{m/2} Gamma((m+1)/2) / sqrt(pi)
    return std::exp2(0.5 * m) * boost::math::tgamma((m + 1) * 0.5) /
           std::sqrt(3.14159265358979323846);
  }
  double abs_upper_quantile(double eps) const override {
    if (eps >= 1.0) return 0.0;
    return boost::math::quantile(boost::math::complement(dist_, 0.5 * eps));
  }
  bool psi_norm_finite(double /*L*/) const override { return true; }
  double psi_tail_remainder(double /*L*/, double c, double W) const override {
    // P(|Z| > z) <= exp(-z^2/2)
    return detail::subgauss_remainder(c, W, 0.0, 1.0);
  }
  std::string describe() const override { return "standard-normal"; }

 private:
  boost::math::normal_distribution<double> dist_;
};

// Z = Y - 1/rate with Y ~ Exp(rate); EZ = 0.
class CenteredExponential final : public Distribution {
 public:
  explicit CenteredExponential(double rate) : rate_(rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("centered-exponential: rate must be > 0");
  }
  double rate() const { return rate_; }
  double cdf(double x) const override {
    const double y = x + 1.0 / rate_;
    if (y <= 0.0) return 0.0;
    return -std::expm1(-rate_ * y);
  }
  double quantile(double u) const override {
    return -std::log1p(-u) / rate_ - 1.0 / rate_;
  }
  double abs_moment(int m) const override {
    // E|Y1 - 1|^m = e^{-1} (I_m + m!) with I_m = sum_j 1/(j! (m+j+1)),
    // then scaled by rate^{-m}.
    double I = 0.0, term;
    double jfact = 1.0;
    for (int j = 0;; ++j) {
      if (j > 0) jfact *= j;
      term = 1.0 / (jfact * (m + j + 1));
      I += term;
      if (term < 1e-19 * I) break;
      if (j > 200) break;
    }
    const double mfact = boost::math::tgamma(m + 1.0);
    return (I + mfact) * std::exp(-1.0) * std::pow(rate_, -m);
  }
  double abs_upper_quantile(double eps) const override {
    // P(|Z| > z) = e^{-(rate z + 1)} for z >= 1/rate.
    if (eps <= std::exp(-2.0)) return (-std::log(eps) - 1.0) / rate_;
    double lo = 0.0, hi = 1.0 / rate_;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double tail = std::exp(-(rate_ * mid + 1.0)) + 1.0 -
                          std::exp(-(1.0 - rate_ * mid));
      (tail > eps ? lo : hi) = mid;
    }
    return hi;
  }
  bool psi_norm_finite(double L) const override { return L > 0.0; }
  double psi_tail_remainder(double L, double c, double W) const override {
    // P(|Z| > z) <= exp(1 - rate z)
    return detail::subexp_remainder(L, c, W, 1.0, rate_);
  }
  std::string describe() const override {
    return "centered-exponential(rate=" + std::to_string(rate_) + ")";
  }

 private:
  double rate_;
};

// Uniform(a,b) recentered to Uniform(-h, h), h = (b-a)/2.
class CenteredUniform final : public Distribution {
 public:
  CenteredUniform(double a, double b) : h_(0.5 * (b - a)) {
    if (!(b > a)) throw std::invalid_argument("uniform: need b > a");
  }
  double half_width() const { return h_; }
  double cdf(double x) const override {
    if (x <= -h_) return 0.0;
    if (x >= h_) return 1.0;
    return (x + h_) / (2.0 * h_);
  }
  double quantile(double u) const override { return -h_ + 2.0 * h_ * u; }
  double abs_moment(int m) const override { return std::pow(h_, m) / (m + 1.0); }
  double abs_upper_quantile(double eps) const override {
    return h_ * std::max(0.0, 1.0 - std::min(1.0, eps));
  }
  bool psi_norm_finite(double /*L*/) const override { return true; }
  double psi_tail_remainder(double L, double c, double W) const override {
    return psi(L, h_ / c) * std::exp(-W);
  }
  std::string describe() const override {
    return "centered-uniform(h=" + std::to_string(h_) + ")";
  }

 private:
  double h_;
};

class TwoPoint final : public Distribution {
 public:
  TwoPoint(double a, double b, double pa) {
    if (!(pa >= 0.0 && pa <= 1.0)) throw std::invalid_argument("two-point: p in [0,1]");
    if (a > b) {
      std::swap(a, b);
      pa = 1.0 - pa;
    }
    if (a == b) {
      atoms_.push_back({a, 1.0});
    } else {
      atoms_.push_back({a, pa});
      atoms_.push_back({b, 1.0 - pa});
    }
  }
  double cdf(double x) const override {
    double acc = 0.0;
    for (const auto& at : atoms_)
      if (at.x <= x) acc += at.p;
    return acc;
  }
  double quantile(double u) const override {
    double acc = 0.0;
    for (const auto& at : atoms_) {
      acc += at.p;
      if (u <= acc) return at.x;
    }
    return atoms_.back().x;
  }
  double abs_moment(int m) const override {
    double acc = 0.0;
    for (const auto& at : atoms_) acc += at.p * std::pow(std::abs(at.x), m);
    return acc;
  }
  double abs_upper_quantile(double eps) const override {
    return detail::discrete_abs_upper_quantile(atoms_, eps);
  }
  bool psi_norm_finite(double /*L*/) const override { return true; }
  double psi_tail_remainder(double L, double c, double W) const override {
    return psi(L, abs_upper_quantile(0.0) / c) * std::exp(-W);
  }
  std::span<const Atom> atoms() const override { return atoms_; }
  std::string describe() const override { return "two-point"; }

 private:
  std::vector<Atom> atoms_;
};

class Empirical final : public Distribution {
 public:
  explicit Empirical(std::span<const double> sample) {
    if (sample.empty()) throw std::invalid_argument("empirical: empty sample");
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    const double w = 1.0 / static_cast<double>(s.size());
    for (double x : s) {
      if (!atoms_.empty() && atoms_.back().x == x)
        atoms_.back().p += w;
      else
        atoms_.push_back({x, w});
    }
  }
  double cdf(double x) const override {
    double acc = 0.0;
    for (const auto& at : atoms_) {
      if (at.x > x) break;
      acc += at.p;
    }
    return acc;
  }
  double quantile(double u) const override {
    double acc = 0.0;
    for (const auto& at : atoms_) {
      acc += at.p;
      if (u <= acc + 1e-15) return at.x;
    }
    return atoms_.back().x;
  }
  double abs_moment(int m) const override {
    double acc = 0.0;
    for (const auto& at : atoms_) acc += at.p * std::pow(std::abs(at.x), m);
    return acc;
  }
  double abs_upper_quantile(double eps) const override {
    return detail::discrete_abs_upper_quantile(atoms_, eps);
  }
  bool psi_norm_finite(double /*L*/) const override { return true; }
  double psi_tail_remainder(double L, double c, double W) const override {
    return psi(L, max_abs() / c) * std::exp(-W);
  }
  std::span<const Atom> atoms() const override { return atoms_; }
  std::string describe() const override {
    return "empirical(n_atoms=" + std::to_string(atoms_.size()) + ")";
  }

 private:
  double max_abs() const {
    double m = 0.0;
    for (const auto& at : atoms_) m = std::max(m, std::abs(at.x));
    return m;
  }
  std::vector<Atom> atoms_;
};

// Nonnegative Z constructed so that P(|Z| >= tau0 (sqrt(t) + L0 t / 2))
// equals min(1, 2 exp(-t)) exactly for every t > 0.
class PsiTail final : public Distribution {
 public:
  PsiTail(double tau0, double L0) : tau0_(tau0), L0_(L0) {
    if (!(tau0 > 0.0) || !(L0 >= 0.0))
      throw std::invalid_argument("psi-tail: need tau0 > 0, L0 >= 0");
  }
  double threshold_of_t(double t) const {
    return tau0_ * (std::sqrt(t) + 0.5 * L0_ * t);
  }
  double t_of_threshold(double z) const {
    // invert z = tau0 (sqrt(t) + L0 t/2) for t >= 0
    const double x = z / tau0_;
    const double sq = 2.0 * x / (1.0 + std::sqrt(1.0 + 2.0 * L0_ * x));
    return sq * sq;
  }
  double cdf(double x) const override {
    if (x < threshold_of_t(std::log(2.0))) return 0.0;
    return 1.0 - std::min(1.0, 2.0 * std::exp(-t_of_threshold(x)));
  }
  double quantile(double u) const override {
    return threshold_of_t(std::log(2.0 / (1.0 - u)));
  }
  double abs_moment(int m) const override {
    // int_0^inf q(e^-w)^m e^-w dw, smooth integrand with exponential decay
    auto f = [&](double w) {
      return std::pow(threshold_of_t(std::log(2.0) + w), m) * std::exp(-w);
    };
    double acc = 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double seams[] = {0.0, 2.0, 10.0, 50.0, 200.0, 700.0};
    for (int i = 0; i + 1 < 6; ++i)
      acc += GK::integrate(f, seams[i], seams[i + 1], 10, 1e-14);
    return acc;
  }
  double abs_upper_quantile(double eps) const override {
    if (eps >= 1.0) return threshold_of_t(std::log(2.0));
    return threshold_of_t(std::log(2.0 / eps));
  }
  bool psi_norm_finite(double L) const override { return L > 0.0 || L0_ == 0.0; }
  double psi_tail_remainder(double L, double c, double W) const override {
    if (L0_ == 0.0) {
      // q(eps)^2 = tau0^2 log(2/eps): sub-Gaussian envelope
      return detail::subgauss_remainder(c, W, std::log(2.0), 0.5 * tau0_ * tau0_);
    }
    // q(eps) <= tau0 (sqrt(T)/T + L0/2) (log 2 - log eps) for T = log2 + W
    const double T0 = std::log(2.0) + W;
    const double slope = tau0_ * (1.0 / std::sqrt(T0) + 0.5 * L0_);
    return detail::subexp_remainder(L, c, W, std::log(2.0), 1.0 / slope);
  }
  std::string describe() const override { return "psi-tail"; }

 private:
  double tau0_, L0_;
};

// ---- JSON factory ---------------------------------------------------------

inline std::shared_ptr<const Distribution> make_distribution(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name"))
    throw std::invalid_argument("distribution: expected object with \"name\"");
  const std::string name = j.at("name").get<std::string>();
  if (name == "standard-normal") return std::make_shared<StandardNormal>();
  if (name == "centered-exponential")
    return std::make_shared<CenteredExponential>(j.value("rate", 1.0));
  if (name == "uniform")
    return std::make_shared<CenteredUniform>(j.at("a").get<double>(), j.at("b").get<double>());
  if (name == "two-point")
    return std::make_shared<TwoPoint>(j.at("a").get<double>(), j.at("b").get<double>(),
                                      j.value("p", 0.5));
  if (name == "empirical") {
    auto v = j.at("sample").get<std::vector<double>>();
    return std::make_shared<Empirical>(v);
  }
  if (name == "psi-tail")
    return std::make_shared<PsiTail>(j.at("tau").get<double>(), j.at("L").get<double>());
  throw std::invalid_argument("distribution: unknown kind \"" + name + "\"");
}

}  // namespace bernorlicz
