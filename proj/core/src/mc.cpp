#include "cgmy/mc.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cgmy/rng.hpp"
#include "cgmy/stable.hpp"

namespace cgmy::mc {

namespace {

constexpr double kLn10 = 2.30258509299404568402;

struct ChunkAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
  double max_value = 0.0;
  double weight_sum = 0.0;
  std::uint64_t heavy = 0;
};

struct Engine {
  stable::CmsSampler sampler;  // one-sided, scale already folded with t
  double drift;                // t * gamma_tilde
  double sig_sqrt_t;
  double m_star;
  double g_star;
  double eta_t;
};

// Runs one chunk. Returns false (with a message) on the first non-finite
// path value; everything about the path is reported because such a failure
// means the weight tail assumptions broke down.
bool run_chunk(const Engine& e, const McConfig& cfg, std::uint64_t chunk_index,
               std::uint64_t paths, bool track_weights, ChunkAccum& acc,
               std::string& error) {
  rng::Stream rs(cfg.seed, chunk_index);
  for (std::uint64_t i = 0; i < paths; ++i) {
    const double a = e.sampler.draw(rs);  // u+
    const double b = e.sampler.draw(rs);  // -u-
    const double w = rs.normal();

    // Payoff first: on deep-left draws the weight exponential overflows
    // while the payoff is exactly zero, and inf * 0 would be NaN.
    const double x = a - b + e.drift + e.sig_sqrt_t * w;
    const double log_weight = -e.m_star * a - e.g_star * b - e.eta_t;
    double h = 0.0;
    if (x > 0.0) {
      h = std::exp(log_weight) * -std::expm1(-x);
      if (!std::isfinite(h)) {
        std::ostringstream os;
        os << "mc: non-finite path value in chunk " << chunk_index
           << ", path " << i << " (u+=" << a << ", -u-=" << b << ", w=" << w
           << ", log weight=" << log_weight << ")";
        error = os.str();
        return false;
      }
    }

    acc.sum += h;
    acc.sum_sq += h * h;
    if (h > acc.max_value) acc.max_value = h;
    if (track_weights) {
      if (log_weight > kLn10) ++acc.heavy;
      acc.weight_sum += std::exp(log_weight + e.eta_t);
    }
  }
  return true;
}

std::vector<ChunkAccum> run_paths(const CgmyParams& p, double t,
                                  const McConfig& cfg, bool track_weights) {
  if (!(t > 0.0)) throw std::invalid_argument("mc: t must be > 0");
  if (cfg.n_paths < 1) {
    throw std::invalid_argument("mc: n_paths must be >= 1");
  }
  if (cfg.chunk_size < 1) {
    throw std::invalid_argument("mc: chunk_size must be >= 1");
  }

  const DerivedQuantities d = derive(p);
  const Engine engine{
      stable::CmsSampler(stable::one_sided_spec(p, t)),
      t * d.gamma_tilde,
      p.sigma * std::sqrt(t),
      d.m_star,
      d.g_star,
      d.eta * t,
  };

  const std::uint64_t n_chunks =
      (cfg.n_paths + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<ChunkAccum> acc(n_chunks);

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string error;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::uint64_t k = next_chunk.fetch_add(1);
      if (k >= n_chunks) break;
      const std::uint64_t begin = k * cfg.chunk_size;
      const std::uint64_t paths =
          std::min<std::uint64_t>(cfg.chunk_size, cfg.n_paths - begin);
      std::string chunk_error;
      if (!run_chunk(engine, cfg, k, paths, track_weights, acc[k],
                     chunk_error)) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error.empty()) error = chunk_error;
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  unsigned n_threads =
      cfg.threads != 0 ? cfg.threads
                       : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, n_chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (failed.load()) throw std::runtime_error(error);
  return acc;
}

}  // namespace

PriceEstimate mc_price(const CgmyParams& p, double t, const McConfig& cfg) {
  const std::vector<ChunkAccum> acc = run_paths(p, t, cfg, false);

  // Sequential reduction in chunk order keeps the estimate bit-identical
  // for any worker count.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkAccum& a : acc) {
    sum += a.sum;
    sum_sq += a.sum_sq;
  }

  const double n = static_cast<double>(cfg.n_paths);
  const double mean = sum / n;
  double std_err = 0.0;
  if (cfg.n_paths > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    std_err = std::sqrt(var / n);
  }
  return {mean, std_err, Method::mc, t};
}

McDiagnostics mc_diagnostics(const CgmyParams& p, double t,
                             const McConfig& cfg) {
  const std::vector<ChunkAccum> acc = run_paths(p, t, cfg, true);

  McDiagnostics diag;
  diag.chunk_means.reserve(acc.size());
  double weight_sum = 0.0;
  std::uint64_t heavy = 0;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    const std::uint64_t begin = k * cfg.chunk_size;
    const std::uint64_t paths =
        std::min<std::uint64_t>(cfg.chunk_size, cfg.n_paths - begin);
    diag.chunk_means.push_back(acc[k].sum / static_cast<double>(paths));
    diag.max_path_value = std::max(diag.max_path_value, acc[k].max_value);
    weight_sum += acc[k].weight_sum;
    heavy += acc[k].heavy;
  }
  const double n = static_cast<double>(cfg.n_paths);
  diag.heavy_weight_fraction = static_cast<double>(heavy) / n;
  diag.weight_mean = weight_sum / n;
  return diag;
}

}  // namespace cgmy::mc
