#ifndef CGMY_BSM_HPP
#define CGMY_BSM_HPP

namespace cgmy::bsm {

struct AtmQuote {
  double t;      // maturity in years, > 0
  double price;  // ATM call price per unit spot, in (0, 1)
};

// ATM Black-Scholes call per unit spot at zero rate: F(sigma sqrt t) with
// F(theta) = 2 Phi(theta/2) - 1. Algebraically identical to the general
// formula at k = 0, r = 0 and better conditioned for tiny sigma sqrt t.
double bs_atm_price(double sigma, double t);

// Small-t expansion sigma sqrt(t)/sqrt(2 pi) - sigma^3 t^{3/2}/(24 sqrt(2 pi));
// the remainder is O(t^{5/2}).
double bs_atm_expansion(double sigma, double t);

// Inverse of bs_atm_price in sigma. Bracketing bisection refined by Newton
// steps off the closed-form vega; converges to an absolute price residual
// <= 1e-12 (tolerance is on price, not sigma, because vega vanishes as
// t -> 0). Throws std::domain_error unless 0 < price < 1 and t > 0.
double implied_vol_atm(const AtmQuote& q);

}  // namespace cgmy::bsm

#endif
