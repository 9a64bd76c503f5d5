// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained deterministic RNG. The standard <random> distributions are
// implementation-defined, so everything that must reproduce bit-identically
// across platforms and worker counts goes through this header instead.

#ifndef MTMETA_RNG_HPP
#define MTMETA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace mtmeta {

inline std::uint64_t splitmix64_step(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and stream ids.
// Used for (pair, metric) grid cells and per-iteration bootstrap draws.
inline std::uint64_t substream(std::uint64_t master, std::uint64_t id) {
  return splitmix64_step(master ^ splitmix64_step(id + 0x632BE59BD9B4E019ULL));
}

inline std::uint64_t substream(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return substream(substream(master, a), b);
}

inline std::uint64_t substream(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                               std::uint64_t c) {
  return substream(substream(master, a, b), c);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, n) without modulo bias (Lemire multiply-shift).
  std::uint32_t bounded(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Standard normal via polar Box-Muller; caches the spare deviate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * unit() - 1.0;
      v = 2.0 * unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = bounded(static_cast<std::uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mtmeta

#endif  // MTMETA_RNG_HPP
