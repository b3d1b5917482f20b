#ifndef CGMY_MODEL_HPP
#define CGMY_MODEL_HPP

#include <complex>

namespace cgmy {

// CGMY model parameters. The process is the exponential Levy model
// S_t = S_0 e^{X_t} with X a CGMY pure-jump part (C, G, M, Y) plus an
// independent Brownian part sigma * W_t, drift-adjusted so that e^{X_t}
// is a martingale. M > 1 keeps E e^{X_t} finite and Y in (1, 2) is the
// infinite-variation regime all the short-time expansions assume.
struct CgmyParams {
  double C;      // jump intensity scale, > 0
  double G;      // left tempering rate, > 0
  double M;      // right tempering rate, > 1
  double Y;      // stability index, in (1, 2)
  double sigma;  // Brownian volatility per sqrt(time), >= 0

  // sigma == 0 selects the pure-jump expansion ladder; any positive sigma,
  // however small, is the mixed regime. The two ladders have different
  // exponents and must never be blended.
  bool pure_jump() const noexcept { return sigma == 0.0; }
};

// Validates the five raw values and names the violated bound on failure
// (throws std::invalid_argument).
CgmyParams validate(double C, double G, double M, double Y, double sigma);

// Constants of the model and of the share-measure change, all cheap closed
// forms evaluated eagerly.
struct DerivedQuantities {
  double c;            // martingale drift: E e^{X_t} = 1
  double gamma;        // E X_1
  double m_star;       // M - 1, right tempering under the share measure
  double g_star;       // G + 1, left tempering under the share measure
  double c_star;       // c + sigma^2, drift under the share measure
  double gamma_tilde;  // mean of X_1 under the tilted measure, equals c_star
  double eta;          // compensator of the exponential tilt of the jumps
  double vartheta;     // second-order constant -C*Gamma(-Y)*(M^Y + (G+1)^Y)
};

DerivedQuantities derive(const CgmyParams& p);

// Characteristic exponent psi with E e^{iuX_t} = exp(t*psi(u)), analytic on
// the strip im(u) in (-M, G) where both power arguments keep a positive real
// part. Throws std::domain_error outside the strip.
std::complex<double> char_exponent(const CgmyParams& p, std::complex<double> u);

// Characteristic exponent under the share measure: same functional form with
// (M*, G*, c*) in place of (M, G, c). Satisfies psi*(u) = psi(u - i) on the
// strip im(u) in (-M*, G*).
std::complex<double> char_exponent_share(const CgmyParams& p, std::complex<double> u);

// Black-Scholes reference exponent -Sigma^2 (u^2 + iu) / 2, used by the
// Fourier pricer as the add-subtract term.
std::complex<double> bs_char_exponent(double Sigma, std::complex<double> u);

// Levy density: C e^{-Mx} x^{-1-Y} for x > 0, C e^{Gx} |x|^{-1-Y} for x < 0.
// Throws std::domain_error at x = 0.
double levy_density(const CgmyParams& p, double x);

}  // namespace cgmy

#endif
