#include "cgmy/bsm.hpp"

#include <cmath>
#include <stdexcept>

#include "cgmy/specfun.hpp"

namespace cgmy::bsm {

namespace {

constexpr double kSqrtTwoPi = 2.50662827463100050242;

// dF/dsigma = phi(sigma sqrt(t)/2) * sqrt(t), the ATM vega per unit spot.
double vega_atm(double sigma, double t) {
  const double x = 0.5 * sigma * std::sqrt(t);
  return std::exp(-0.5 * x * x) / kSqrtTwoPi * std::sqrt(t);
}

}  // namespace

double bs_atm_price(double sigma, double t) {
  if (!(t > 0.0)) throw std::domain_error("bs_atm_price: t must be > 0");
  if (!(sigma >= 0.0)) {
    throw std::domain_error("bs_atm_price: sigma must be >= 0");
  }
  if (sigma == 0.0) return 0.0;
  return 2.0 * specfun::std_normal_cdf(0.5 * sigma * std::sqrt(t)) - 1.0;
}

double bs_atm_expansion(double sigma, double t) {
  if (!(t > 0.0)) throw std::domain_error("bs_atm_expansion: t must be > 0");
  const double st = std::sqrt(t);
  return sigma * st / kSqrtTwoPi -
         sigma * sigma * sigma * st * t / (24.0 * kSqrtTwoPi);
}

double implied_vol_atm(const AtmQuote& q) {
  if (!(q.t > 0.0)) throw std::domain_error("implied_vol_atm: t must be > 0");
  if (!(q.price > 0.0 && q.price < 1.0)) {
    throw std::domain_error("implied_vol_atm: price must lie in (0, 1)");
  }

  double lo = 0.0;
  double hi = 1.0;
  while (bs_atm_price(hi, q.t) < q.price) {
    hi *= 2.0;
    if (hi > 1e12) {
      throw std::runtime_error("implied_vol_atm: failed to bracket");
    }
  }

  // Bisection bracket with Newton refinement off the closed-form vega.
  // The stop is on the price residual: vega vanishes as t -> 0, so a
  // sigma-based tolerance would be meaningless there.
  double sigma = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = bs_atm_price(sigma, q.t) - q.price;
    if (std::abs(f) <= 1e-12) return sigma;
    if (f > 0.0) {
      hi = sigma;
    } else {
      lo = sigma;
    }
    const double step = sigma - f / vega_atm(sigma, q.t);
    sigma = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
  }
  throw std::runtime_error("implied_vol_atm: residual tolerance not reached");
}

}  // namespace cgmy::bsm
