#include "cgmy/stable.hpp"

#include <cmath>
#include <stdexcept>

#include "cgmy/specfun.hpp"

namespace cgmy::stable {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |cos(pi Y/2)| computed as sin(pi (Y-1)/2), which is exact on (1, 2) and
// keeps full accuracy as Y -> 1 where the cosine crosses zero.
double abs_cos_half_pi_y(double Y) { return std::sin(kPi * (Y - 1.0) * 0.5); }

}  // namespace

StableSpec make_spec(double alpha, double beta, double scale_c) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::invalid_argument("stable: alpha must lie in (1, 2)");
  }
  if (beta != 0.0 && beta != 1.0 && beta != -1.0) {
    throw std::invalid_argument("stable: beta must be -1, 0 or 1");
  }
  if (!(scale_c > 0.0)) {
    throw std::invalid_argument("stable: scale_c must be > 0");
  }
  return {alpha, beta, scale_c, 0.0};
}

StableSpec one_sided_spec(const CgmyParams& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("one_sided_spec: t must be > 0");
  const double c =
      t * p.C * specfun::gamma_real(-p.Y) * abs_cos_half_pi_y(p.Y);
  return make_spec(p.Y, 1.0, c);
}

StableSpec symmetric_spec(const CgmyParams& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("symmetric_spec: t must be > 0");
  const double c =
      2.0 * t * p.C * specfun::gamma_real(-p.Y) * abs_cos_half_pi_y(p.Y);
  return make_spec(p.Y, 0.0, c);
}

double ez_plus(const CgmyParams& p) {
  const double c =
      2.0 * p.C * specfun::gamma_real(-p.Y) * abs_cos_half_pi_y(p.Y);
  return specfun::gamma_real(1.0 - 1.0 / p.Y) / kPi * std::pow(c, 1.0 / p.Y);
}

CmsSampler::CmsSampler(const StableSpec& spec)
    : alpha_(spec.alpha),
      inv_alpha_(1.0 / spec.alpha),
      skew_exp_((1.0 - spec.alpha) / spec.alpha) {
  const double ta = std::tan(kPi * spec.alpha * 0.5);
  b_ = std::atan(spec.beta * ta) / spec.alpha;
  prefactor_ = std::pow(1.0 + spec.beta * spec.beta * ta * ta,
                        0.5 * inv_alpha_) *
               std::pow(spec.scale_c, inv_alpha_);
}

double CmsSampler::draw(rng::Stream& rs) const {
  const double V = kPi * (rs.uniform() - 0.5);
  const double W = rs.exponential();
  const double shifted = alpha_ * (V + b_);
  return prefactor_ * std::sin(shifted) /
         std::pow(std::cos(V), inv_alpha_) *
         std::pow(std::cos(V - shifted) / W, skew_exp_);
}

double sample(const StableSpec& spec, rng::Stream& rs) {
  return spec.location + CmsSampler(spec).draw(rs);
}

double sample_one_sided(const StableSpec& spec, rng::Stream& rs) {
  if (spec.beta != 1.0) {
    throw std::invalid_argument("sample_one_sided: spec must have beta = 1");
  }
  return sample(spec, rs);
}

double sample_symmetric_z(const CgmyParams& p, rng::Stream& rs) {
  const StableSpec spec = one_sided_spec(p);
  const double a = sample(spec, rs);
  const double b = sample(spec, rs);
  return a - b;
}

double tail_reference(const CgmyParams& p, double v) {
  if (!(v > 0.0)) throw std::domain_error("tail_reference: v must be > 0");
  return p.C / p.Y * std::pow(v, -p.Y);
}

}  // namespace cgmy::stable
