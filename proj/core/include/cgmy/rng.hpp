#ifndef CGMY_RNG_HPP
#define CGMY_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace cgmy::rng {

// splitmix64 step; used only to expand seeds into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ seeded deterministically from a (seed, stream) pair. Streams
// with different indices start from unrelated splitmix64 chains, which is
// what makes chunked Monte Carlo independent of the thread schedule.
class Xoshiro256pp {
 public:
  Xoshiro256pp(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t chain = seed;
    std::uint64_t mixed = splitmix64(chain);
    chain = mixed ^ (0xd1342543de82ef95ULL * (stream + 1));
    for (auto& w : s_) w = splitmix64(chain);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9e3779b97f4a7c15ULL;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_;
};

// One deterministic variate stream. uniform() never returns 0 or 1, so logs
// of uniforms are always finite.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_index)
      : gen_(seed, stream_index) {}

  double uniform() {
    return (static_cast<double>(gen_.next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform()); }

  // Box-Muller cosine branch; consumes exactly two uniforms and discards the
  // sine counterpart so every call costs the same number of raw draws.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  Xoshiro256pp gen_;
};

}  // namespace cgmy::rng

#endif
