#include "cgmy/expand.hpp"

#include <cmath>
#include <stdexcept>

#include "cgmy/specfun.hpp"
#include "cgmy/stable.hpp"

namespace cgmy::expand {

namespace {

constexpr double kSqrtTwoPi = 2.50662827463100050242;
constexpr double kSqrtPi = 1.77245385090551602730;

}  // namespace

ExpansionCoeffs coeffs(const CgmyParams& p) {
  const double cg = p.C * specfun::gamma_real(-p.Y);
  ExpansionCoeffs out{};

  if (p.pure_jump()) {
    out.regime = Regime::pure_jump;
    out.d1 = stable::ez_plus(p);
    out.d2 = 0.5 * cg *
             (std::pow(p.M - 1.0, p.Y) - std::pow(p.M, p.Y) -
              std::pow(p.G + 1.0, p.Y) + std::pow(p.G, p.Y));
    const double eta =
        cg * (std::pow(p.M - 1.0, p.Y) + std::pow(p.G + 1.0, p.Y));
    out.d3 = -eta * out.d1;
    out.iv1 = kSqrtTwoPi * out.d1;
    out.iv2 = kSqrtTwoPi * out.d2;
    return out;
  }

  out.regime = Regime::mixed;
  out.d1 = p.sigma / kSqrtTwoPi;
  // Second coefficient C sigma^{1-Y} E|N(0,1)|^{1-Y} / (Y (Y-1)) with the
  // Gaussian absolute moment E|N(0,1)|^p = 2^{p/2} Gamma((p+1)/2) / sqrt(pi).
  const double moment = std::pow(2.0, 0.5 * (1.0 - p.Y)) *
                        specfun::gamma_real(1.0 - 0.5 * p.Y) / kSqrtPi;
  out.d2 = moment * p.C * std::pow(p.sigma, 1.0 - p.Y) / (p.Y * (p.Y - 1.0));
  out.iv1 = p.sigma;
  out.iv2 = kSqrtTwoPi * out.d2;
  return out;
}

double price_approx(const CgmyParams& p, double t, int order) {
  if (!(t > 0.0)) throw std::domain_error("price_approx: t must be > 0");
  if (order < 1 || order > 3) {
    throw std::invalid_argument("price_approx: order must be 1, 2 or 3");
  }
  const ExpansionCoeffs c = coeffs(p);

  if (c.regime == Regime::pure_jump) {
    double price = c.d1 * std::pow(t, 1.0 / p.Y);
    if (order >= 2) price += c.d2 * t;
    if (order >= 3) price += *c.d3 * std::pow(t, 1.0 + 1.0 / p.Y);
    return price;
  }

  if (order == 3) {
    throw std::invalid_argument(
        "price_approx: order 3 requires the pure-jump regime (sigma = 0); no "
        "closed-form third-order coefficient is available with a Brownian "
        "component");
  }
  double price = c.d1 * std::sqrt(t);
  if (order >= 2) price += c.d2 * std::pow(t, 0.5 * (3.0 - p.Y));
  return price;
}

double iv_approx(const CgmyParams& p, double t, int order) {
  if (!(t > 0.0)) throw std::domain_error("iv_approx: t must be > 0");
  if (order < 1 || order > 2) {
    throw std::invalid_argument("iv_approx: order must be 1 or 2");
  }
  const ExpansionCoeffs c = coeffs(p);

  if (c.regime == Regime::pure_jump) {
    double iv = c.iv1 * std::pow(t, 1.0 / p.Y - 0.5);
    if (order >= 2) iv += c.iv2 * std::sqrt(t);
    return iv;
  }
  double iv = c.iv1;
  if (order >= 2) iv += c.iv2 * std::pow(t, 1.0 - 0.5 * p.Y);
  return iv;
}

}  // namespace cgmy::expand
