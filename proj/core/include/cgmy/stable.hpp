#ifndef CGMY_STABLE_HPP
#define CGMY_STABLE_HPP

#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"

namespace cgmy::stable {

// Stable law written through its characteristic exponent
//   log E e^{iuX} = -scale_c * |u|^alpha * (1 - i beta tan(pi alpha/2) sign u),
// i.e. scale_c is the constant multiplying |u|^alpha, not the classical
// per-draw scale (which is scale_c^{1/alpha}). location is the mean for
// alpha > 1 and is always 0 here.
struct StableSpec {
  double alpha;
  double beta;
  double scale_c;
  double location;
};

// Validates alpha in (1,2), beta in {-1, 0, 1}, scale_c > 0.
StableSpec make_spec(double alpha, double beta, double scale_c);

// Spec of the positive-jump small-time limit over a horizon t: totally
// skewed (beta = 1) with scale_c = t * C * Gamma(-Y) * |cos(pi Y/2)|.
// Self-similarity is applied here, by folding t into scale_c, and nowhere
// else.
StableSpec one_sided_spec(const CgmyParams& p, double t = 1.0);

// Spec of the symmetric limit Z_t: beta = 0 with twice the one-sided scale.
StableSpec symmetric_spec(const CgmyParams& p, double t = 1.0);

// E(Z_1^+) = Gamma(1 - 1/Y)/pi * (2 C Gamma(-Y) |cos(pi Y/2)|)^{1/Y}, the
// leading coefficient of the pure-jump price expansion.
double ez_plus(const CgmyParams& p);

// Chambers-Mallows-Stuck sampler with the spec-dependent constants folded
// in at construction; each draw consumes exactly two uniforms. In the
// parameterization used here the mean equals the location for alpha > 1,
// so no centering shift is applied after the transform.
class CmsSampler {
 public:
  explicit CmsSampler(const StableSpec& spec);
  double draw(rng::Stream& rs) const;

 private:
  double alpha_;
  double inv_alpha_;
  double skew_exp_;   // (1 - alpha) / alpha
  double b_;          // atan(beta tan(pi alpha/2)) / alpha
  double prefactor_;  // (1 + beta^2 tan^2(pi alpha/2))^{1/(2 alpha)} * scale_c^{1/alpha}
};

// One Chambers-Mallows-Stuck draw for any valid spec (used directly by the
// tests; the named samplers below are the model-facing surface).
double sample(const StableSpec& spec, rng::Stream& rs);

// One totally skewed draw; spec must have beta = 1. Mean is 0 (compensated
// jumps), the right tail is the power law P(X > v) ~ (C/Y) v^{-Y} when the
// spec comes from one_sided_spec(p, 1).
double sample_one_sided(const StableSpec& spec, rng::Stream& rs);

// One draw of Z_1 as the difference of two independent one-sided draws.
// This is the decomposition the Monte Carlo pricer needs, so the joint law
// of the pair is preserved by construction.
double sample_symmetric_z(const CgmyParams& p, rng::Stream& rs);

// Asymptotic survival reference (C/Y) v^{-Y} used by the statistical tail
// tests. Throws std::domain_error for v <= 0.
double tail_reference(const CgmyParams& p, double v);

}  // namespace cgmy::stable

#endif
