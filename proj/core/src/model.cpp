#include "cgmy/model.hpp"

#include <cmath>
#include <stdexcept>

#include "cgmy/specfun.hpp"

namespace cgmy {

namespace {

// C * Gamma(-Y) with the two jump-side power sums that every derived
// quantity is built from. Gamma(-Y) > 0 for Y in (1, 2).
struct JumpConstants {
  double cg;       // C * Gamma(-Y)
  double pow_m;    // M^Y
  double pow_g;    // G^Y
  double pow_ms;   // (M-1)^Y
  double pow_gs;   // (G+1)^Y
};

JumpConstants jump_constants(const CgmyParams& p) {
  return {
      p.C * specfun::gamma_real(-p.Y),
      std::pow(p.M, p.Y),
      std::pow(p.G, p.Y),
      std::pow(p.M - 1.0, p.Y),
      std::pow(p.G + 1.0, p.Y),
  };
}

}  // namespace

CgmyParams validate(double C, double G, double M, double Y, double sigma) {
  if (!(C > 0.0)) throw std::invalid_argument("C must be > 0");
  if (!(G > 0.0)) throw std::invalid_argument("G must be > 0");
  if (!(M > 1.0)) {
    throw std::invalid_argument("martingale condition requires M > 1");
  }
  if (!(Y > 1.0 && Y < 2.0)) {
    throw std::invalid_argument("Y must lie in the open interval (1, 2)");
  }
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  return {C, G, M, Y, sigma};
}

DerivedQuantities derive(const CgmyParams& p) {
  const JumpConstants j = jump_constants(p);
  const double s2 = p.sigma * p.sigma;
  const double base = j.cg * (j.pow_ms + j.pow_gs - j.pow_m - j.pow_g);

  DerivedQuantities d;
  d.c = -base - 0.5 * s2;
  d.gamma = d.c - p.C * p.Y * specfun::gamma_real(-p.Y) *
                      (std::pow(p.M, p.Y - 1.0) - std::pow(p.G, p.Y - 1.0));
  d.m_star = p.M - 1.0;
  d.g_star = p.G + 1.0;
  d.c_star = d.c + s2;
  d.gamma_tilde = -base + 0.5 * s2;
  d.eta = j.cg * (j.pow_ms + j.pow_gs);
  d.vartheta = -j.cg * (j.pow_m + j.pow_gs);
  return d;
}

std::complex<double> char_exponent(const CgmyParams& p, std::complex<double> u) {
  if (!(u.imag() > -p.M && u.imag() < p.G)) {
    throw std::domain_error("char_exponent: im(u) must lie in (-M, G)");
  }
  const JumpConstants j = jump_constants(p);
  const double s2 = p.sigma * p.sigma;
  const double c = -j.cg * (j.pow_ms + j.pow_gs - j.pow_m - j.pow_g) - 0.5 * s2;

  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> zm(p.M + u.imag(), -u.real());  // M - iu
  const std::complex<double> zg(p.G - u.imag(), u.real());   // G + iu
  return i * c * u - 0.5 * s2 * u * u +
         j.cg * (specfun::complex_pow(zm, p.Y) + specfun::complex_pow(zg, p.Y) -
                 j.pow_m - j.pow_g);
}

std::complex<double> char_exponent_share(const CgmyParams& p,
                                         std::complex<double> u) {
  const DerivedQuantities d = derive(p);
  if (!(u.imag() > -d.m_star && u.imag() < d.g_star)) {
    throw std::domain_error("char_exponent_share: im(u) must lie in (-M*, G*)");
  }
  const double cg = p.C * specfun::gamma_real(-p.Y);
  const double pow_ms = std::pow(d.m_star, p.Y);
  const double pow_gs = std::pow(d.g_star, p.Y);
  const double s2 = p.sigma * p.sigma;

  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> zm(d.m_star + u.imag(), -u.real());  // M* - iu
  const std::complex<double> zg(d.g_star - u.imag(), u.real());   // G* + iu
  return i * d.c_star * u - 0.5 * s2 * u * u +
         cg * (specfun::complex_pow(zm, p.Y) + specfun::complex_pow(zg, p.Y) -
               pow_ms - pow_gs);
}

std::complex<double> bs_char_exponent(double Sigma, std::complex<double> u) {
  const std::complex<double> i(0.0, 1.0);
  return -0.5 * Sigma * Sigma * (u * u + i * u);
}

double levy_density(const CgmyParams& p, double x) {
  if (x == 0.0) throw std::domain_error("levy_density: x must be nonzero");
  if (x > 0.0) return p.C * std::exp(-p.M * x) * std::pow(x, -1.0 - p.Y);
  return p.C * std::exp(p.G * x) * std::pow(-x, -1.0 - p.Y);
}

}  // namespace cgmy
