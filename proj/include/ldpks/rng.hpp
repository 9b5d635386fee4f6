#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ldpks {

// splitmix64 finalizer; decorrelates nearby integer inputs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Engine seed for the substream `stream_id` of a master seed. Each
// (master_seed, stream_id) pair always yields the same value.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
  return splitmix64(master_seed ^ splitmix64(stream_id));
}

inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t stream_id) {
  return std::mt19937_64(derive_seed(master_seed, stream_id));
}

// Uniform double in the open interval (0, 1); consumes one engine draw.
template <typename Rng>
double uniform_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform integer in [0, bound); bound >= 1. Rejection keeps the result
// exactly uniform.
template <typename Rng>
std::size_t uniform_below(Rng& rng, std::size_t bound) {
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t threshold = (0 - b) % b;  // 2^64 mod bound
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw < threshold);
  return static_cast<std::size_t>(draw % b);
}

// True with probability p; consumes one engine draw. p = 1 never fails.
template <typename Rng>
bool bernoulli(Rng& rng, double p) {
  return uniform_open(rng) < p;
}

// Zero-centred Laplace draw with the given scale, via inverse CDF from a
// single uniform.
template <typename Rng>
double laplace(Rng& rng, double scale) {
  const double u = uniform_open(rng) - 0.5;
  return u < 0 ? scale * std::log1p(2.0 * u) : -scale * std::log1p(-2.0 * u);
}

}  // namespace ldpks
