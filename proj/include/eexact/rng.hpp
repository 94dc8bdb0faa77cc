#pragma once
#include <cstdint>

namespace eexact {

// splitmix64. Deliberately not <random>: distribution output there is
// implementation-defined, and reports must be byte-identical for a fixed seed
// on every platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive; uses rejection to avoid modulo bias
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~0ULL - (~0ULL % span);
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  bool chance(long num, long den) { return uniform(1, den) <= num; }

  template <class Vec>
  auto& pick(Vec& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }
};

// stable per-trial seed derivation so trials are order-independent
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
  r.next();
  return r.next();
}

}  // namespace eexact
