#include "cgmy/ift.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "cgmy/bsm.hpp"

namespace cgmy::ift {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void validate_config(const IftConfig& cfg) {
  if (cfg.P < 4 || cfg.P % 2 != 0) {
    throw std::invalid_argument("ift: P must be even and >= 4");
  }
  if (!(cfg.Q > 0.0)) throw std::invalid_argument("ift: Q must be > 0");
  if (!(cfg.sigma_ref > 0.0)) {
    throw std::invalid_argument("ift: sigma_ref must be > 0");
  }
}

}  // namespace

std::complex<double> zeta(const CgmyParams& p, double T, double Sigma,
                          double v) {
  if (v == 0.0) {
    throw std::domain_error("zeta: v = 0 (removable singularity, use the "
                            "offset grid)");
  }
  const std::complex<double> u(v, -1.0);
  const std::complex<double> num =
      std::exp(T * char_exponent(p, u)) - std::exp(T * bs_char_exponent(Sigma, u));
  const std::complex<double> iv(0.0, v);
  return num / (iv * (1.0 + iv));
}

PriceEstimate ift_price(const CgmyParams& p, double T, const IftConfig& cfg) {
  if (!(T > 0.0)) throw std::invalid_argument("ift: T must be > 0");
  validate_config(cfg);
  if (T < 0.05) {
    std::cerr << "ift_price: warning: T = " << T
              << " is below 0.05; the integrand is nearly flat there and "
                 "Monte Carlo is the preferred method at short maturities\n";
  }

  const double delta = cfg.Q / (cfg.P - 1);

  // Kahan-compensated sum, strictly left to right: any parallel or
  // reordered evaluation would have to reproduce this to the last bit.
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> carry(0.0, 0.0);
  for (int m = 0; m < cfg.P; ++m) {
    const double v = -0.5 * cfg.Q + m * delta;
    const double w = (m == 0 || m == cfg.P - 1) ? 0.5
                     : (m % 2 == 1)             ? 4.0 / 3.0
                                                : 2.0 / 3.0;
    const std::complex<double> term = w * zeta(p, T, cfg.sigma_ref, v) - carry;
    const std::complex<double> bumped = sum + term;
    carry = (bumped - sum) - term;
    sum = bumped;
  }

  if (std::abs(sum.imag()) > 1e-8) {
    throw std::runtime_error(
        "ift_price: imaginary residual of the quadrature sum exceeds 1e-8; "
        "the grid does not resolve the integrand (raise P or lower Q)");
  }

  const double price =
      bsm::bs_atm_price(cfg.sigma_ref, T) + delta / kTwoPi * sum.real();
  return {price, std::nullopt, Method::ift, T};
}

}  // namespace cgmy::ift
