#ifndef CGMY_MC_HPP
#define CGMY_MC_HPP

#include <cstdint>
#include <vector>

#include "cgmy/estimate.hpp"
#include "cgmy/model.hpp"

namespace cgmy::mc {

struct McConfig {
  std::uint64_t n_paths = 100000;
  std::uint64_t seed = 12345;
  // Paths are processed in fixed chunks, each with its own variate stream
  // derived from (seed, chunk index). The sample set therefore depends only
  // on (seed, n_paths, chunk_size), never on the thread schedule.
  std::uint64_t chunk_size = 65536;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Tilted-measure Monte Carlo ATM price. Each path draws two one-sided
// stable variates u+ and -u- (scale folded with t) plus one standard
// normal w and evaluates
//   h = exp(-M* u+ + G* u- - eta t) * max(0, 1 - e^{-u+ - u- - t gamma_tilde - sigma sqrt(t) w}).
// The payoff factor is evaluated first and the weight exponential is skipped
// on zero-payoff paths; the weight can overflow on draws where the payoff
// underflows to 0, and inf * 0 would poison the sum. A non-finite path value
// still aborts with diagnostics (std::runtime_error).
PriceEstimate mc_price(const CgmyParams& p, double t, const McConfig& cfg);

// Variance-monitoring summary over the same deterministic sample set.
struct McDiagnostics {
  std::vector<double> chunk_means;
  double max_path_value = 0.0;
  // Share of paths whose measure-change weight exp(-M* u+ + G* u- - eta t)
  // exceeds 10; a creeping value signals the heavy-weight tail that would
  // make the plain stderr untrustworthy.
  double heavy_weight_fraction = 0.0;
  // Mean of the bare tilt exp(-M* u+ + G* u-); must track e^{eta t}.
  double weight_mean = 0.0;
};

McDiagnostics mc_diagnostics(const CgmyParams& p, double t, const McConfig& cfg);

}  // namespace cgmy::mc

#endif
