#pragma once

// Seeded random streams for reproducible searches.
//
// Every search draws from three independent streams per attempt, each an
// std::mt19937_64 seeded with splitmix64(seed, tag, restart):
//
//   init    (tag 1)  one 64-bit draw per edge, in edge-index order
//   shuffle (tag 2)  Fisher-Yates draws, i = m-1 down to 1, j in [0, i]
//   tie     (tag 3)  greedy tie draws and steepest-descent argmin picks
//
// Integer and unit-interval draws are derived here rather than through
// <random> distributions so that trajectories do not depend on the standard
// library vendor.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ramsey {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class StreamTag : std::uint64_t { Init = 1, Shuffle = 2, Tie = 3 };

constexpr std::uint64_t derive_seed(std::uint64_t seed, StreamTag tag,
                                    std::uint64_t restart) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(tag)) ^ restart);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). Rejection on the top of the range, bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // 53-bit uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // True with probability p. p >= 1 is always true, p <= 0 always false.
  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// The three streams of one search attempt.
struct AttemptStreams {
  Rng init;
  Rng shuffle;
  Rng tie;

  AttemptStreams(std::uint64_t seed, std::uint64_t restart)
      : init(derive_seed(seed, StreamTag::Init, restart)),
        shuffle(derive_seed(seed, StreamTag::Shuffle, restart)),
        tie(derive_seed(seed, StreamTag::Tie, restart)) {}
};

inline std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

}  // namespace ramsey
