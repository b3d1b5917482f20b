#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cgmy/bsm.hpp"
#include "cgmy/expand.hpp"
#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"

using namespace cgmy;
using namespace cgmy::expand;

namespace {
const CgmyParams kPure = validate(0.5, 2.0, 3.6, 1.5, 0.0);
const CgmyParams kMixed = validate(0.5, 2.0, 3.6, 1.5, 0.4);

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}
}  // namespace

TEST_CASE("pure-jump coefficients match high-precision references") {
  const auto c = coeffs(kPure);
  CHECK(c.regime == Regime::pure_jump);
  CHECK(rel_err(c.d1, 1.2008220666706398) <= 1e-13);
  CHECK(rel_err(c.d2, -2.9575584524447767) <= 1e-13);
  REQUIRE(c.d3.has_value());
  CHECK(rel_err(*c.d3, -13.321703750685456) <= 1e-13);
  CHECK(rel_err(c.iv1, 3.0100145451174580) <= 1e-13);
  CHECK(rel_err(c.iv2, -7.4134996407719825) <= 1e-13);
  // d3 = -eta d1 by construction.
  const auto d = derive(kPure);
  CHECK(rel_err(*c.d3, -d.eta * c.d1) <= 1e-14);
}

TEST_CASE("mixed coefficients match high-precision references") {
  const auto c = coeffs(kMixed);
  CHECK(c.regime == Regime::mixed);
  CHECK(rel_err(c.d1, 0.15957691216057307) <= 1e-13);
  CHECK(rel_err(c.d2, 1.8131234925118828) <= 1e-13);
  CHECK_FALSE(c.d3.has_value());
  CHECK(c.iv1 == 0.4);
  CHECK(rel_err(c.iv2, 4.5448266117279946) <= 1e-13);
}

TEST_CASE("iv coefficients are sqrt(2 pi) times the price coefficients") {
  constexpr double kSqrt2Pi = 2.5066282746310005;
  rng::Stream rs(31, 0);
  for (int i = 0; i < 200; ++i) {
    const bool pure = rs.uniform() < 0.5;
    const auto p =
        validate(0.05 + 1.95 * rs.uniform(), 0.1 + 4.9 * rs.uniform(),
                 1.05 + 4.95 * rs.uniform(), 1.05 + 0.9 * rs.uniform(),
                 pure ? 0.0 : 0.05 + 0.55 * rs.uniform());
    const auto c = coeffs(p);
    CHECK(rel_err(c.iv2, kSqrt2Pi * c.d2) <= 1e-12);
    if (pure) {
      CHECK(rel_err(c.iv1, kSqrt2Pi * c.d1) <= 1e-12);
    } else {
      CHECK(c.iv1 == p.sigma);
    }
  }
}

TEST_CASE("pure-jump price truncations match references") {
  CHECK(rel_err(price_approx(kPure, 0.1, 1), 0.25870927169910058) <= 1e-13);
  CHECK(rel_err(price_approx(kPure, 0.1, 2), -0.037046573545377089) <= 1e-13);
  CHECK(rel_err(price_approx(kPure, 0.05, 1), 0.1629766286083344) <= 1e-13);
  CHECK(rel_err(price_approx(kPure, 0.05, 2), 0.015098705986095565) <= 1e-13);
  CHECK(rel_err(price_approx(kPure, 0.01, 1), 0.055737222958142614) <= 1e-13);
  CHECK(rel_err(price_approx(kPure, 0.01, 2), 0.026161638433694847) <= 1e-13);
  // Third order adds d3 t^{1 + 1/Y}.
  const double o3 =
      0.026161638433694847 - 13.321703750685456 * std::pow(0.01, 5.0 / 3.0);
  CHECK(rel_err(price_approx(kPure, 0.01, 3), o3) <= 1e-12);
}

TEST_CASE("mixed price truncations match references") {
  CHECK(rel_err(price_approx(kMixed, 0.01, 1), 0.015957691216057307) <= 1e-13);
  CHECK(rel_err(price_approx(kMixed, 0.01, 2), 0.073293690371025276) <= 1e-13);
  CHECK(rel_err(price_approx(kMixed, 0.001, 1), 0.0050462650440403201) <= 1e-13);
  CHECK(rel_err(price_approx(kMixed, 0.001, 2), 0.015242207719169182) <= 1e-13);
  CHECK(rel_err(price_approx(kMixed, 0.1, 1), 0.050462650440403201) <= 1e-13);
  CHECK(rel_err(price_approx(kMixed, 0.1, 2), 0.37288666789957743) <= 1e-13);
}

TEST_CASE("price truncations validate order, regime and maturity") {
  CHECK_THROWS_AS(price_approx(kPure, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(price_approx(kPure, 0.1, 4), std::invalid_argument);
  CHECK_THROWS_AS(price_approx(kPure, 0.0, 1), std::domain_error);
  CHECK_NOTHROW(price_approx(kPure, 0.1, 3));
  CHECK_THROWS_AS(price_approx(kMixed, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(iv_approx(kMixed, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(iv_approx(kMixed, 0.0, 1), std::domain_error);
}

TEST_CASE("exponent ladder scales correctly in t") {
  // Order-1 term: t^{1/Y} (pure) vs t^{1/2} (mixed); the order-2 increment
  // adds t (pure) vs t^{(3-Y)/2} (mixed). Ratios across a doubling of t pin
  // each exponent.
  rng::Stream rs(32, 0);
  for (int i = 0; i < 50; ++i) {
    const double Y = 1.05 + 0.9 * rs.uniform();
    const auto pure = validate(0.5, 2.0, 3.6, Y, 0.0);
    const auto mixed = validate(0.5, 2.0, 3.6, Y, 0.3);
    const double t = 0.001 + 0.05 * rs.uniform();
    CAPTURE(Y);
    CAPTURE(t);

    const double r1p = price_approx(pure, 2 * t, 1) / price_approx(pure, t, 1);
    CHECK(rel_err(r1p, std::pow(2.0, 1.0 / Y)) <= 1e-12);
    const double i2p = (price_approx(pure, 2 * t, 2) - price_approx(pure, 2 * t, 1)) /
                       (price_approx(pure, t, 2) - price_approx(pure, t, 1));
    CHECK(rel_err(i2p, 2.0) <= 1e-10);

    const double r1m = price_approx(mixed, 2 * t, 1) / price_approx(mixed, t, 1);
    CHECK(rel_err(r1m, std::sqrt(2.0)) <= 1e-12);
    const double i2m =
        (price_approx(mixed, 2 * t, 2) - price_approx(mixed, 2 * t, 1)) /
        (price_approx(mixed, t, 2) - price_approx(mixed, t, 1));
    CHECK(rel_err(i2m, std::pow(2.0, (3.0 - Y) / 2.0)) <= 1e-10);
  }
}

TEST_CASE("implied-vol truncations match references and self-consistency") {
  CHECK(rel_err(iv_approx(kPure, 1e-4, 2), 0.57435297894243938) <= 1e-13);
  CHECK(iv_approx(kMixed, 1e-4, 1) == 0.4);

  // Feeding the order-2 iv back through the exact ATM formula reproduces the
  // order-2 price exactly at the expansion orders; the relative gap is the
  // cubic Black-Scholes term sigma_hat^2 t / 24, which vanishes superlinearly:
  // slope 4/3 minus the drag of the vol correction (pure, Y = 1.5, measured
  // 1.274) and slope 1 plus the drift of the vol correction (mixed, measured
  // 1.135).
  std::vector<double> ts_p = {1e-7, 1e-5, 1e-3}, gaps_p;
  for (double t : ts_p) {
    const double pe = price_approx(kPure, t, 2);
    const double pb = bsm::bs_atm_price(iv_approx(kPure, t, 2), t);
    gaps_p.push_back((pb - pe) / pe);
  }
  const double slope_p = loglog_slope(ts_p, gaps_p);
  CAPTURE(slope_p);
  CHECK(slope_p >= 1.15);
  CHECK(slope_p <= 1.40);

  std::vector<double> ts_m = {1e-7, 1e-6, 1e-5}, gaps_m;
  for (double t : ts_m) {
    const double pe = price_approx(kMixed, t, 2);
    const double pb = bsm::bs_atm_price(iv_approx(kMixed, t, 2), t);
    gaps_m.push_back((pb - pe) / pe);
  }
  const double slope_m = loglog_slope(ts_m, gaps_m);
  CAPTURE(slope_m);
  CHECK(slope_m >= 1.00);
  CHECK(slope_m <= 1.25);
}

TEST_CASE("mixed second-order coefficient: sign and monotonicity") {
  // d2 > 0, increasing in C (more jump mass widens the smile correction),
  // decreasing in sigma (Brownian noise masks the jumps).
  const double base = coeffs(kMixed).d2;
  CHECK(base > 0.0);
  CHECK(coeffs(validate(1.0, 2.0, 3.6, 1.5, 0.4)).d2 > base);
  CHECK(coeffs(validate(0.5, 2.0, 3.6, 1.5, 0.6)).d2 < base);
}
