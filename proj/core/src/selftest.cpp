#include "cgmy/selftest.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <vector>

#include "cgmy/bsm.hpp"
#include "cgmy/ift.hpp"
#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"
#include "cgmy/stable.hpp"

namespace cgmy::selftest {
namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double uni(rng::Stream& rs, double lo, double hi) {
  return lo + (hi - lo) * rs.uniform();
}

// Draw box kept away from the Y -> 2 and M -> 1 walls so that none of the
// identities below degrade for purely numerical reasons.
CgmyParams draw_params(rng::Stream& rs, bool with_sigma) {
  const double C = uni(rs, 0.05, 2.0);
  const double G = uni(rs, 0.1, 5.0);
  const double M = uni(rs, 1.05, 6.0);
  const double Y = uni(rs, 1.05, 1.95);
  const double s = with_sigma ? uni(rs, 0.0, 0.5) : 0.0;
  return validate(C, G, M, Y, s);
}

CheckResult martingale_normalization(std::uint64_t seed) {
  rng::Stream rs(seed, 101);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const CgmyParams p = draw_params(rs, true);
    const double a = std::abs(char_exponent(p, std::complex<double>(0.0, -1.0)));
    const double b = std::abs(char_exponent_share(p, std::complex<double>(0.0, 1.0)));
    worst = std::max(worst, std::max(a, b));
  }
  return {"martingale_normalization", worst <= 1e-10,
          fmt("max |psi(-i)|, |psi*(i)| = %.3g over 200 parameter draws", worst)};
}

CheckResult share_measure_identity(std::uint64_t seed) {
  rng::Stream rs(seed, 102);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CgmyParams p = draw_params(rs, true);
    for (int j = 0; j < 20; ++j) {
      const std::complex<double> u(uni(rs, -20.0, 20.0), 0.0);
      const std::complex<double> lhs = char_exponent_share(p, u);
      const std::complex<double> rhs =
          char_exponent(p, u - std::complex<double>(0.0, 1.0));
      const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
      worst = std::max(worst, rel);
    }
  }
  return {"share_measure_identity", worst <= 1e-12,
          fmt("max rel |psi*(u) - psi(u - i)| = %.3g over 2000 evaluations", worst)};
}

CheckResult second_order_identity(std::uint64_t seed, GammaFn gamma) {
  rng::Stream rs(seed, 103);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const CgmyParams p = draw_params(rs, false);
    // LHS from the hooked kernel, RHS from the library's canonical constants.
    const double lhs = 0.5 * p.C * gamma(-p.Y) *
                       (std::pow(p.M - 1.0, p.Y) - std::pow(p.M, p.Y) -
                        std::pow(p.G + 1.0, p.Y) + std::pow(p.G, p.Y));
    const DerivedQuantities d = derive(p);
    const double rhs = d.vartheta + d.eta + 0.5 * d.gamma_tilde;
    const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    worst = std::max(worst, rel);
  }
  return {"second_order_identity", worst <= 1e-12,
          fmt("max rel |d2(gamma kernel) - (vartheta + eta + gamma_tilde/2)| = %.3g",
              worst)};
}

CheckResult sampler_exponential_identity(std::uint64_t seed) {
  const CgmyParams p = validate(0.5, 2.0, 3.6, 1.5, 0.4);
  const DerivedQuantities d = derive(p);
  const double t = 0.01;
  const stable::StableSpec spec = stable::one_sided_spec(p, t);
  rng::Stream rs(seed, 104);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = stable::sample_one_sided(spec, rs);
    const double b = stable::sample_one_sided(spec, rs);
    const double w = std::exp(-(d.m_star * a + d.g_star * b));
    sum += w;
    sum_sq += w * w;
  }
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
  const double se = std::sqrt(var / n);
  const double target = std::exp(d.eta * t);
  // 4 SE, one notch wider than the analysis-grade 3, so the verdict does not
  // flip under reasonable seed changes.
  const bool pass = std::abs(mean - target) <= 4.0 * se && se > 0.0;
  return {"sampler_exponential_identity", pass,
          fmt("mean exp weight %.6f vs e^{eta t} %.6f (z = %.2f)", mean, target,
              (mean - target) / se)};
}

CheckResult ift_reference_vol_invariance() {
  const CgmyParams p = validate(0.5, 2.0, 3.6, 1.5, 0.4);
  ift::IftConfig cfg;
  cfg.sigma_ref = 0.2;
  const double lo = ift::ift_price(p, 0.25, cfg).price;
  cfg.sigma_ref = 0.3;
  const double hi = ift::ift_price(p, 0.25, cfg).price;
  const double diff = std::abs(lo - hi);
  return {"ift_reference_vol_invariance", diff <= 1e-6,
          fmt("|price(ref 0.2) - price(ref 0.3)| = %.3g at T = 0.25", diff)};
}

CheckResult bs_implied_vol_round_trip() {
  const double sigmas[] = {0.05, 0.2, 0.5, 1.0};
  const double ts[] = {0.01, 0.25, 1.0, 4.0};
  double worst = 0.0;
  for (double s : sigmas) {
    for (double t : ts) {
      const double price = bsm::bs_atm_price(s, t);
      const double iv = bsm::implied_vol_atm({t, price});
      worst = std::max(worst, std::abs(iv - s));
    }
  }
  return {"bs_implied_vol_round_trip", worst <= 1e-10,
          fmt("max |iv - sigma| = %.3g over a 4 x 4 (sigma, t) grid", worst)};
}

CheckResult guarded(CheckResult (*fn)(std::uint64_t), std::uint64_t seed,
                    const char* name) {
  try {
    return fn(seed);
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_all(std::uint64_t seed, GammaFn gamma) {
  std::vector<CheckResult> out;
  out.push_back(guarded(&martingale_normalization, seed, "martingale_normalization"));
  out.push_back(guarded(&share_measure_identity, seed, "share_measure_identity"));
  try {
    out.push_back(second_order_identity(seed, gamma));
  } catch (const std::exception& e) {
    out.push_back({"second_order_identity", false,
                   std::string("exception: ") + e.what()});
  }
  out.push_back(
      guarded(&sampler_exponential_identity, seed, "sampler_exponential_identity"));
  try {
    out.push_back(ift_reference_vol_invariance());
  } catch (const std::exception& e) {
    out.push_back({"ift_reference_vol_invariance", false,
                   std::string("exception: ") + e.what()});
  }
  try {
    out.push_back(bs_implied_vol_round_trip());
  } catch (const std::exception& e) {
    out.push_back({"bs_implied_vol_round_trip", false,
                   std::string("exception: ") + e.what()});
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace cgmy::selftest
