#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <memory>

#include "bernorlicz/bernstein.hpp"
#include "bernorlicz/finite_max.hpp"

using namespace bernorlicz;

TEST_CASE("bounded variables satisfy the moment condition trivially", "[bernstein]") {
  // |X| <= 1 with EX^2 = 1: two-point +-1
  TwoPoint tp(-1.0, 1.0, 0.5);
  auto rep = check_bernstein(tp, 1.0, 1.0, 12);
  CHECK(rep.holds);
  CHECK(rep.worst_ratio <= 1.0 + 1e-12);
}

TEST_CASE("centered exponential satisfies Bernstein with sigma = K = 1", "[bernstein]") {
  CenteredExponential E(1.0);
  auto rep = check_bernstein(E, 1.0, 1.0, 10);
  CHECK(rep.holds);
  // oracle m = 3: E|X|^3 = 2.41455...; bound (3!/2) = 3
  CHECK_THAT(rep.ratios[1], Catch::Matchers::WithinRel(2.4145532940573079 / 3.0, 1e-11));
}

TEST_CASE("standard normal satisfies Bernstein with sigma = K = 1", "[bernstein]") {
  StandardNormal N;
  auto rep = check_bernstein(N, 1.0, 1.0, 10);
  CHECK(rep.holds);
  // m = 2 is tight: EZ^2 = 1 = (2!/2) sigma^2
  CHECK_THAT(rep.ratios[0], Catch::Matchers::WithinRel(1.0, 1e-12));
}

TEST_CASE("violated condition is reported with the worst order", "[bernstein]") {
  StandardNormal N;
  auto rep = check_bernstein(N, 0.5, 1.0, 8);  // sigma^2 too small at m = 2
  CHECK_FALSE(rep.holds);
  CHECK(rep.worst_m >= 2);
  CHECK(rep.worst_ratio > 1.0);
}

TEST_CASE("heterogeneous list averages the moments", "[bernstein]") {
  std::vector<std::shared_ptr<const Distribution>> ds;
  ds.push_back(std::make_shared<TwoPoint>(-1.0, 1.0, 0.5));
  ds.push_back(std::make_shared<TwoPoint>(-0.5, 0.5, 0.5));
  auto rep = check_bernstein(ds, 1.0, 1.0, 6);
  CHECK(rep.holds);
  // averaged second moment (1 + 0.25)/2
  CHECK_THAT(rep.ratios[0], Catch::Matchers::WithinRel(0.625, 1e-13));
}

TEST_CASE("bernstein_tail formula", "[bernstein]") {
  auto ts = bernstein_tail(BernsteinProfile(1.0, 1.0, 100), 2.0);
  CHECK_THAT(ts.threshold, Catch::Matchers::WithinRel(2.2, 1e-14));
  CHECK_THAT(ts.prob_bound, Catch::Matchers::WithinRel(2.0 * std::exp(-2.0), 1e-14));

  auto degenerate = bernstein_tail(BernsteinProfile(0.0, 2.0, 16), 3.0);
  CHECK_THAT(degenerate.threshold, Catch::Matchers::WithinRel(2.0 * 3.0 / 4.0, 1e-14));

  auto tiny = bernstein_tail(BernsteinProfile(1.0, 1.0, 4), 1e-14);
  CHECK(tiny.prob_bound == 1.0);
  CHECK(tiny.threshold < 1e-6);
}

TEST_CASE("bernstein_orlicz_norm constants", "[bernstein]") {
  auto p = bernstein_orlicz_norm(BernsteinProfile(1.0, 1.0, 6));
  CHECK_THAT(p.tau, Catch::Matchers::WithinRel(kSqrt6, 1e-12));
  CHECK_THAT(p.L, Catch::Matchers::WithinRel(1.0, 1e-12));

  auto p2 = bernstein_orlicz_norm(BernsteinProfile(2.0, 1.0, 24));
  CHECK_THAT(p2.tau, Catch::Matchers::WithinRel(2.0 * kSqrt6, 1e-12));
  CHECK_THAT(p2.L, Catch::Matchers::WithinRel(0.25, 1e-12));

  CHECK_THROWS_AS(bernstein_orlicz_norm(BernsteinProfile(0.0, 1.0, 5)),
                  std::invalid_argument);
}

TEST_CASE("L is invariant under rescaling of the summands", "[bernstein][property]") {
  for (double c : {0.1, 3.0, 250.0}) {
    auto base = bernstein_orlicz_norm(BernsteinProfile(1.3, 0.8, 50));
    auto scaled = bernstein_orlicz_norm(BernsteinProfile(c * 1.3, c * 0.8, 50));
    CHECK_THAT(scaled.L, Catch::Matchers::WithinRel(base.L, 1e-12));
    CHECK_THAT(scaled.tau, Catch::Matchers::WithinRel(c * base.tau, 1e-12));
  }
}

TEST_CASE("orlicz route dominates the direct tail by a bounded factor",
          "[bernstein][property]") {
  BernsteinProfile prof(1.0, 1.0, 50);
  auto op = bernstein_orlicz_norm(prof);
  for (double t : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double direct = bernstein_tail(prof, t).threshold;
    const double orlicz = tail_from_norm(op, t).threshold;
    const double ratio = orlicz / direct;
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 3.0);
  }
}
