#ifndef CGMY_EXPAND_HPP
#define CGMY_EXPAND_HPP

#include <optional>

#include "cgmy/model.hpp"

namespace cgmy::expand {

enum class Regime { pure_jump, mixed };

// Coefficients of the short-time ATM expansions.
//
// pure jump (sigma = 0):
//   price(t) = d1 t^{1/Y} + d2 t - eta d1 t^{1+1/Y} + o(t^{1+1/Y})
//   iv(t)    = sigma1 t^{1/Y - 1/2} + sigma2 t^{1/2} + ...
// mixed (sigma > 0):
//   price(t) = d1 t^{1/2} + d2 t^{(3-Y)/2} + ...
//   iv(t)    = sigma + iv2 t^{1 - Y/2} + ...
//
// In both regimes iv2 = sqrt(2 pi) d2, and iv1 is sqrt(2 pi) d1 (pure jump)
// or sigma (mixed).
struct ExpansionCoeffs {
  Regime regime;
  double d1;
  double d2;
  std::optional<double> d3;  // pure jump only: -eta * d1
  double iv1;
  double iv2;
};

ExpansionCoeffs coeffs(const CgmyParams& p);

// Truncation of the price ladder at the requested order (1, 2 or 3).
// Order 3 exists only in the pure-jump regime; requesting it with sigma > 0
// throws std::invalid_argument because no closed-form third-order
// coefficient is available with a Brownian component.
double price_approx(const CgmyParams& p, double t, int order);

// Truncation of the implied-volatility ladder at order 1 or 2.
double iv_approx(const CgmyParams& p, double t, int order);

}  // namespace cgmy::expand

#endif
