#ifndef CGMY_SPECFUN_HPP
#define CGMY_SPECFUN_HPP

#include <complex>

namespace cgmy::specfun {

// Gamma function for real x away from the poles at 0, -1, -2, ...
// Negative arguments go through the reflection formula, so the relative
// accuracy target (<= 1e-13 on [-1.99, -1.01] and (0, 10]) holds on both
// sides of zero. Throws std::domain_error at a pole.
double gamma_real(double x);

// Principal-branch z^y restricted to re(z) > 0, where arg(z) lies in
// (-pi/2, pi/2) and the branch is unambiguous. Anything else throws
// std::domain_error rather than guessing a branch.
std::complex<double> complex_pow(std::complex<double> z, double y);

// Standard normal CDF, absolute error <= 1e-15.
double std_normal_cdf(double x);

}  // namespace cgmy::specfun

#endif
