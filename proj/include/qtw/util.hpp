#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qtw {

// Deterministic 64-bit generator (splitmix64).  All sampled checks in the
// library seed one of these so reruns are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Worker count: QTW_WORKERS env var if set, else hardware concurrency.
unsigned worker_count();

// Splits [0, n) into contiguous chunks, one worker thread per chunk.  body
// must be safe to run concurrently on disjoint ranges (the library's values
// are immutable, so read sharing is fine).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qtw
