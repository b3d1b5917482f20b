#include "cgmy/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "cgmy/expand.hpp"

namespace cgmy {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::mc: return "mc";
    case Method::ift: return "ift";
    case Method::expansion1: return "expansion1";
    case Method::expansion2: return "expansion2";
    case Method::expansion3: return "expansion3";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view s) {
  if (s == "mc") return Method::mc;
  if (s == "ift") return Method::ift;
  if (s == "expansion1") return Method::expansion1;
  if (s == "expansion2") return Method::expansion2;
  if (s == "expansion3") return Method::expansion3;
  return std::nullopt;
}

}  // namespace cgmy

namespace cgmy::sweep {

namespace {

CgmyParams with_axis_value(const CgmyParams& base, const std::string& axis,
                           double value) {
  CgmyParams raw = base;
  if (axis == "C") raw.C = value;
  else if (axis == "Y") raw.Y = value;
  else if (axis == "G") raw.G = value;
  else if (axis == "M") raw.M = value;
  else if (axis == "sigma") raw.sigma = value;
  else throw std::invalid_argument("sweep: unknown axis '" + axis + "'");
  // Revalidate: an axis can walk the parameters out of their domain and
  // that must surface as the named bound, not as downstream nonsense.
  return validate(raw.C, raw.G, raw.M, raw.Y, raw.sigma);
}

PriceEstimate price_one(const CgmyParams& p, double t, Method method,
                        const mc::McConfig& mc_cfg,
                        const ift::IftConfig& ift_cfg) {
  switch (method) {
    case Method::mc:
      return mc::mc_price(p, t, mc_cfg);
    case Method::ift:
      return ift::ift_price(p, t, ift_cfg);
    case Method::expansion1:
      return {expand::price_approx(p, t, 1), std::nullopt, method, t};
    case Method::expansion2:
      return {expand::price_approx(p, t, 2), std::nullopt, method, t};
    case Method::expansion3:
      return {expand::price_approx(p, t, 3), std::nullopt, method, t};
  }
  throw std::logic_error("sweep: unhandled method");
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
  if (spec.t_grid.empty()) {
    throw std::invalid_argument("sweep: t_grid must be nonempty");
  }
  double prev = 0.0;
  for (double t : spec.t_grid) {
    if (!(t > prev)) {
      throw std::invalid_argument(
          "sweep: t_grid must be strictly increasing and positive");
    }
    prev = t;
  }
  if (!spec.axis_name.empty()) {
    if (spec.axis_name != "C" && spec.axis_name != "Y" &&
        spec.axis_name != "G" && spec.axis_name != "M" &&
        spec.axis_name != "sigma") {
      throw std::invalid_argument(
          "sweep: axis_name must be one of C, Y, G, M, sigma");
    }
    if (spec.axis_values.empty()) {
      throw std::invalid_argument(
          "sweep: axis_values must be nonempty when an axis is set");
    }
  }
  if (spec.methods.empty()) {
    throw std::invalid_argument("sweep: methods must be nonempty");
  }
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void run_sweep(const SweepSpec& spec, std::ostream& os) {
  validate_spec(spec);
  os << "t,axis_name,axis_value,method,price,stderr\n";

  // A single-element axis list with an empty name stands for "no axis";
  // the loop below then emits empty axis fields.
  const bool has_axis = !spec.axis_name.empty();
  const std::vector<double> axis_values =
      has_axis ? spec.axis_values : std::vector<double>{0.0};

  for (double t : spec.t_grid) {
    for (double av : axis_values) {
      const CgmyParams p =
          has_axis ? with_axis_value(spec.base, spec.axis_name, av)
                   : spec.base;
      for (Method method : spec.methods) {
        const PriceEstimate est =
            price_one(p, t, method, spec.mc_cfg, spec.ift_cfg);
        os << format_full(t) << ',' << spec.axis_name << ','
           << (has_axis ? format_full(av) : "") << ',' << to_string(method)
           << ',' << format_full(est.price) << ','
           << (est.std_err ? format_full(*est.std_err) : "") << '\n';
      }
    }
  }
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw std::invalid_argument(
        "log_grid: needs 0 < lo < hi and at least two points");
  }
  std::vector<double> grid(n);
  const double ratio = hi / lo;
  for (int i = 0; i < n; ++i) {
    grid[i] = lo * std::pow(ratio, static_cast<double>(i) / (n - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepSpec compare_preset() {
  SweepSpec spec;
  spec.base = validate(0.5, 2.0, 3.6, 1.5, 0.4);
  spec.t_grid = log_grid(1e-3, 0.5, 25);
  spec.axis_name = "sigma";
  spec.axis_values = {0.0, 0.4};
  spec.methods = {Method::expansion1, Method::expansion2, Method::mc};
  return spec;
}

void write_gnuplot_script(const SweepSpec& spec, const std::string& csv_path,
                          std::ostream& os) {
  os << "set datafile separator \",\"\n"
     << "set logscale x\n"
     << "set xlabel \"t (years)\"\n"
     << "set ylabel \"ATM call price / spot\"\n"
     << "set key left top\n"
     << "plot \\\n";
  const bool has_axis = !spec.axis_name.empty();
  const std::vector<double> axis_values =
      has_axis ? spec.axis_values : std::vector<double>{0.0};
  bool first = true;
  for (double av : axis_values) {
    for (Method method : spec.methods) {
      if (!first) os << ", \\\n";
      first = false;
      os << "  \"" << csv_path << "\" using 1:(strcol(4) eq \""
         << to_string(method) << "\"";
      if (has_axis) {
        os << " && column(3) == " << format_full(av);
      }
      os << " ? $5 : NaN) with linespoints title \"" << to_string(method);
      if (has_axis) os << " " << spec.axis_name << "=" << format_full(av);
      os << "\"";
    }
  }
  os << "\n";
}

}  // namespace cgmy::sweep
