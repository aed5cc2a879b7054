#ifndef NMSYM_RNG_HH
#define NMSYM_RNG_HH

#include <cstdint>

#include "nmsym/rational.hpp"

namespace nmsym {

// Counter-based splitmix64: every draw is a pure function of
// (seed, stream, index, draw counter), so trials are order-independent
// and reproducible bit-exactly.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
      : key_(splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1) ^
                        splitmix64(index * 0xbf58476d1ce4e5b9ULL + 2))) {}

  std::uint64_t next() { return splitmix64(key_ + counter_++ * 0x9e3779b97f4a7c15ULL); }

  // Uniform in [lo, hi], inclusive.
  long long next_int(long long lo, long long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  Rational next_rational(long long num_abs, long long den_max) {
    long long num = next_int(-num_abs, num_abs);
    long long den = next_int(1, den_max);
    return Rational(num, den);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Name recorded in CLI report headers for reproducibility.
inline const char* kGeneratorName = "splitmix64-counter";

}  // namespace nmsym

#endif
