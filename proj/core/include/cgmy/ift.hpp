#ifndef CGMY_IFT_HPP
#define CGMY_IFT_HPP

#include <complex>

#include "cgmy/estimate.hpp"
#include "cgmy/model.hpp"

namespace cgmy::ift {

struct IftConfig {
  int P = 1 << 14;         // grid point count, even and >= 4
  double Q = 800.0;        // total integration width in frequency units
  double sigma_ref = 0.25; // reference Black-Scholes volatility
};

// Damped characteristic-function difference
//   zeta(v) = (e^{T psi(v-i)} - e^{T psiBS(v-i)}) / (iv (1 + iv)).
// The singularity at v = 0 is removable (both numerator terms are 1 there by
// the shared martingale normalization) but v = 0 itself is rejected; the
// even-P grid never contains it.
std::complex<double> zeta(const CgmyParams& p, double T, double Sigma, double v);

// Fourier-inversion ATM price: Black-Scholes reference price plus a Simpson
// quadrature of zeta over [-Q/2, Q/2] with P points,
//   price = bs_atm_price(sigma_ref, T) + Delta/(2 pi) * sum_m w_m zeta(v_m),
// Delta = Q/(P-1), weights 1/2 at both endpoints, 4/3 at odd and 2/3 at even
// interior indices. The sum is compensated (Kahan), its imaginary part must
// stay below 1e-8 (std::runtime_error otherwise) and is discarded after the
// check. For T < 0.05 a quality warning goes to stderr: the integrand
// flattens and Monte Carlo is the preferred method at short maturities.
PriceEstimate ift_price(const CgmyParams& p, double T, const IftConfig& cfg);

}  // namespace cgmy::ift

#endif
