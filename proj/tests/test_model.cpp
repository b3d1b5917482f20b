#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"

using cgmy::bs_char_exponent;
using cgmy::char_exponent;
using cgmy::char_exponent_share;
using cgmy::CgmyParams;
using cgmy::derive;
using cgmy::levy_density;
using cgmy::validate;
using cd = std::complex<double>;

namespace {
const CgmyParams kPure = validate(0.5, 2.0, 3.6, 1.5, 0.0);
const CgmyParams kMixed = validate(0.5, 2.0, 3.6, 1.5, 0.4);

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

CgmyParams random_params(cgmy::rng::Stream& rs) {
  return validate(0.05 + 1.95 * rs.uniform(), 0.1 + 4.9 * rs.uniform(),
                  1.05 + 4.95 * rs.uniform(), 1.05 + 0.9 * rs.uniform(),
                  0.5 * rs.uniform());
}
}  // namespace

TEST_CASE("validate names the violated bound") {
  CHECK_THROWS_WITH_AS(validate(0.0, 2, 3.6, 1.5, 0), "C must be > 0",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(0.5, -1, 3.6, 1.5, 0), "G must be > 0",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(0.5, 2, 1.0, 1.5, 0),
                       "martingale condition requires M > 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(0.5, 2, 3.6, 1.0, 0),
                       "Y must lie in the open interval (1, 2)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(0.5, 2, 3.6, 2.0, 0),
                       "Y must lie in the open interval (1, 2)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(0.5, 2, 3.6, 1.5, -0.1), "sigma must be >= 0",
                       std::invalid_argument);
}

TEST_CASE("regime flag keys on sigma") {
  CHECK(kPure.pure_jump());
  CHECK_FALSE(kMixed.pure_jump());
}

TEST_CASE("derived constants match high-precision references") {
  const auto dp = derive(kPure);
  const auto dm = derive(kMixed);

  CHECK(dp.m_star == 2.6);
  CHECK(dp.g_star == 3.0);
  CHECK(rel_err(dp.eta, 11.093819909239992) <= 1e-13);
  CHECK(rel_err(dp.vartheta, -14.211147599291948) <= 1e-13);
  CHECK(rel_err(dp.c, 0.31953847521435945) <= 1e-13);
  CHECK(rel_err(dp.gamma_tilde, 0.31953847521435945) <= 1e-13);
  CHECK(rel_err(dp.gamma, -0.53682797999339727) <= 1e-13);
  CHECK(dp.c_star == dp.gamma_tilde);

  CHECK(rel_err(dm.c, 0.23953847521435945) <= 1e-13);
  CHECK(rel_err(dm.gamma_tilde, 0.39953847521435945) <= 1e-13);
  CHECK(rel_err(dm.gamma, -0.61682797999339727) <= 1e-13);
  CHECK(dm.c_star == dm.gamma_tilde);
  // eta and vartheta are jump-only constants.
  CHECK(dm.eta == dp.eta);
  CHECK(dm.vartheta == dp.vartheta);
}

TEST_CASE("characteristic exponent satisfies the martingale normalization") {
  cgmy::rng::Stream rs(21, 0);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_params(rs);
    CAPTURE(p.C);
    CAPTURE(p.M);
    CAPTURE(p.Y);
    CHECK(std::abs(char_exponent(p, cd(0.0, -1.0))) <= 1e-10);
    CHECK(std::abs(char_exponent_share(p, cd(0.0, 1.0))) <= 1e-10);
    // Not exactly zero: the constant M^Y + G^Y is subtracted through the
    // real pow while the u-dependent term goes through the complex one,
    // so the cancellation at u = 0 is only up to rounding.
    CHECK(std::abs(char_exponent(p, cd(0.0, 0.0))) <= 1e-12);
  }
}

TEST_CASE("characteristic exponent is Hermitian in u") {
  cgmy::rng::Stream rs(22, 0);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_params(rs);
    const double u = -30.0 + 60.0 * rs.uniform();
    const cd a = char_exponent(p, cd(u, 0.0));
    const cd b = char_exponent(p, cd(-u, 0.0));
    CAPTURE(u);
    CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::max(1.0, std::abs(a)));
    // Real part of psi on the real axis is nonpositive (cf is bounded by 1).
    CHECK(a.real() <= 1e-12);
  }
}

TEST_CASE("share-measure exponent equals the shifted exponent") {
  cgmy::rng::Stream rs(23, 0);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_params(rs);
    for (int j = 0; j < 10; ++j) {
      const cd u(-40.0 + 80.0 * rs.uniform(), 0.0);
      const cd lhs = char_exponent_share(p, u);
      const cd rhs = char_exponent(p, u - cd(0.0, 1.0));
      CAPTURE(u.real());
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("characteristic exponents reject arguments off their strips") {
  CHECK_THROWS_WITH_AS(char_exponent(kMixed, cd(1.0, 2.0)),
                       "char_exponent: im(u) must lie in (-M, G)",
                       std::domain_error);
  CHECK_THROWS_AS(char_exponent(kMixed, cd(1.0, -3.6)), std::domain_error);
  CHECK_THROWS_AS(char_exponent_share(kMixed, cd(0.0, 3.0)), std::domain_error);
  CHECK_THROWS_AS(char_exponent_share(kMixed, cd(0.0, -2.6)), std::domain_error);
  // Interior points are fine right up to the open bounds.
  CHECK_NOTHROW(char_exponent(kMixed, cd(5.0, 1.999)));
  CHECK_NOTHROW(char_exponent_share(kMixed, cd(5.0, 2.999)));
}

TEST_CASE("Black-Scholes reference exponent") {
  const double S = 0.25;
  const cd u(3.0, 0.0);
  const cd want = -S * S * (u * u + cd(0.0, 1.0) * u) / 2.0;
  CHECK(std::abs(bs_char_exponent(S, u) - want) == 0.0);
  // Same martingale normalization as the model exponent.
  CHECK(std::abs(bs_char_exponent(S, cd(0.0, -1.0))) == 0.0);
}

TEST_CASE("Levy density matches references and rejects x = 0") {
  CHECK(rel_err(levy_density(kMixed, 1.0), 0.01366186122364628) <= 1e-13);
  CHECK(rel_err(levy_density(kMixed, -1.0), 0.067667641618306346) <= 1e-13);
  CHECK_THROWS_WITH_AS(levy_density(kMixed, 0.0),
                       "levy_density: x must be nonzero", std::domain_error);
  // Tempering: density decays on both sides away from the origin.
  CHECK(levy_density(kMixed, 2.0) < levy_density(kMixed, 1.0));
  CHECK(levy_density(kMixed, -2.0) < levy_density(kMixed, -1.0));
  // Small-jump blowup is symmetric in order: ratio tends to 1 as x -> 0.
  const double r = levy_density(kMixed, 1e-9) / levy_density(kMixed, -1e-9);
  CHECK(r == doctest::Approx(1.0).epsilon(1e-6));
}
