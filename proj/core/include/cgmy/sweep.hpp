#ifndef CGMY_SWEEP_HPP
#define CGMY_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cgmy/estimate.hpp"
#include "cgmy/ift.hpp"
#include "cgmy/mc.hpp"
#include "cgmy/model.hpp"

namespace cgmy::sweep {

// A priced table over maturities, optionally crossed with one parameter
// axis. axis_name empty means no axis; otherwise it must be one of
// C, Y, G, M, sigma and axis_values must be nonempty.
struct SweepSpec {
  CgmyParams base;
  std::vector<double> t_grid;  // nonempty, strictly increasing, all > 0
  std::string axis_name;
  std::vector<double> axis_values;
  std::vector<Method> methods;  // nonempty
  mc::McConfig mc_cfg;
  ift::IftConfig ift_cfg;
};

// Throws std::invalid_argument on any violated invariant.
void validate_spec(const SweepSpec& spec);

// Formats a double with 17 significant digits, enough to round-trip.
std::string format_full(double x);

// Writes the CSV table: header "t,axis_name,axis_value,method,price,stderr",
// then one row per (t, axis value, method) in that nesting order. The
// stderr field is empty for non-Monte-Carlo methods, and axis fields are
// empty when no axis is set. Deterministic given the seeds in the spec.
void run_sweep(const SweepSpec& spec, std::ostream& os);

// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

// Preset comparing both expansion orders against Monte Carlo on the default
// parameter set (C=0.5, G=2, M=3.6, Y=1.5) for sigma in {0, 0.4} over a
// 25-point log grid of maturities in [1e-3, 0.5].
SweepSpec compare_preset();

// Companion gnuplot script plotting price vs maturity per (method, axis
// value) from a CSV produced by run_sweep.
void write_gnuplot_script(const SweepSpec& spec, const std::string& csv_path,
                          std::ostream& os);

}  // namespace cgmy::sweep

#endif
