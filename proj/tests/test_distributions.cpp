#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bernorlicz/distributions.hpp"

using namespace bernorlicz;

TEST_CASE("standard normal: moments and quantiles", "[distributions]") {
  StandardNormal N;
  // E|Z|^m = (m-1)!! for even m; 2^{m/2} Gamma((m+1)/2)/sqrt(pi) in general
  const double expected[] = {0.79788456080286536, 1.0, 1.5957691216057307, 3.0,
                             6.3830764864229228, 15.0, 38.298458918537537, 105.0,
                             306.3876713483003, 945.0};
  for (int m = 1; m <= 10; ++m)
    CHECK_THAT(N.abs_moment(m), Catch::Matchers::WithinRel(expected[m - 1], 1e-13));

  CHECK_THAT(N.quantile(0.975), Catch::Matchers::WithinRel(1.959963984540054, 1e-13));
  CHECK_THAT(N.cdf(N.quantile(0.31)), Catch::Matchers::WithinAbs(0.31, 1e-13));
  // abs upper quantile at eps: P(|Z| > z) = eps
  const double z = N.abs_upper_quantile(0.05);
  CHECK_THAT(2.0 * (1.0 - N.cdf(z)), Catch::Matchers::WithinAbs(0.05, 1e-12));
  // deep tail stays finite and stable
  CHECK_THAT(N.abs_upper_quantile(2e-300), Catch::Matchers::WithinRel(37.047096299361201, 1e-12));
}

TEST_CASE("centered exponential: moments against series oracle", "[distributions]") {
  CenteredExponential E(1.0);
  const double expected[] = {0.73575888234288464, 1.0, 2.4145532940573079, 9.0,
                             44.291065881146157, 265.0, 1854.2247670081386, 14833.0,
                             133496.18322458598, 1334961.0};
  for (int m = 1; m <= 10; ++m)
    CHECK_THAT(E.abs_moment(m), Catch::Matchers::WithinRel(expected[m - 1], 1e-12));

  // cdf/quantile consistency
  for (double u : {0.01, 0.2, 0.5, 0.9, 0.999})
    CHECK_THAT(E.cdf(E.quantile(u)), Catch::Matchers::WithinAbs(u, 1e-12));

  // tail quantile: P(|Z| > z) = e^{-(z+1)} for z >= 1
  CHECK_THAT(E.abs_upper_quantile(std::exp(-5.0)), Catch::Matchers::WithinRel(4.0, 1e-10));

  // rate scaling
  CenteredExponential E2(2.0);
  CHECK_THAT(E2.abs_moment(3), Catch::Matchers::WithinRel(2.4145532940573079 / 8.0, 1e-12));
}

TEST_CASE("centered uniform", "[distributions]") {
  CenteredUniform U(0.0, 2.0);  // recentered to (-1, 1)
  CHECK_THAT(U.abs_moment(2), Catch::Matchers::WithinRel(1.0 / 3.0, 1e-15));
  CHECK_THAT(U.abs_moment(5), Catch::Matchers::WithinRel(1.0 / 6.0, 1e-15));
  CHECK(U.cdf(-1.0) == 0.0);
  CHECK(U.cdf(1.0) == 1.0);
  CHECK_THAT(U.quantile(0.25), Catch::Matchers::WithinAbs(-0.5, 1e-15));
}

TEST_CASE("two-point and empirical atoms", "[distributions]") {
  TwoPoint tp(-2.0, 2.0, 0.5);
  CHECK(tp.atoms().size() == 2);
  CHECK_THAT(tp.abs_moment(3), Catch::Matchers::WithinRel(8.0, 1e-15));
  CHECK(tp.abs_upper_quantile(0.0) == 2.0);

  TwoPoint constant(1.5, 1.5, 0.3);
  CHECK(constant.atoms().size() == 1);
  CHECK(constant.abs_upper_quantile(0.5) == 1.5);

  std::vector<double> sample{1.0, -1.0, 1.0, 3.0};
  Empirical emp(sample);
  CHECK(emp.atoms().size() == 3);
  CHECK_THAT(emp.abs_moment(2), Catch::Matchers::WithinRel((1 + 1 + 1 + 9) / 4.0, 1e-15));
  CHECK(emp.abs_upper_quantile(0.0) == 3.0);
  CHECK(emp.abs_upper_quantile(0.26) == 1.0);  // strict tail above 1 is 1/4 <= 0.26
  CHECK(emp.abs_upper_quantile(0.2) == 3.0);
}

TEST_CASE("psi-tail distribution has the exact prescribed tail", "[distributions]") {
  const double tau0 = 1.3, L0 = 0.7;
  PsiTail D(tau0, L0);
  for (double t : {0.2, 0.5, 1.0, 2.0, 4.0, 10.0}) {
    const double z = tau0 * (std::sqrt(t) + 0.5 * L0 * t);
    const double tail = 1.0 - D.cdf(z);
    CHECK_THAT(tail, Catch::Matchers::WithinRel(std::min(1.0, 2.0 * std::exp(-t)), 1e-12));
  }
  // quantile/cdf round trip
  for (double u : {0.001, 0.3, 0.77, 0.999})
    CHECK_THAT(D.cdf(D.quantile(u)), Catch::Matchers::WithinAbs(u, 1e-12));
  // moments finite
  CHECK(std::isfinite(D.abs_moment(10)));
  CHECK(D.abs_moment(2) > 0.0);
}

TEST_CASE("json factory round trips the built-ins", "[distributions]") {
  auto n = make_distribution(nlohmann::json{{"name", "standard-normal"}});
  CHECK(n->describe() == "standard-normal");
  auto e = make_distribution(nlohmann::json{{"name", "centered-exponential"}, {"rate", 2.0}});
  CHECK_THAT(e->abs_moment(2), Catch::Matchers::WithinRel(0.25, 1e-13));
  auto u = make_distribution(nlohmann::json{{"name", "uniform"}, {"a", -1.0}, {"b", 1.0}});
  CHECK_THAT(u->abs_moment(2), Catch::Matchers::WithinRel(1.0 / 3.0, 1e-13));
  CHECK_THROWS_AS(make_distribution(nlohmann::json{{"name", "cauchy"}}),
                  std::invalid_argument);
}
