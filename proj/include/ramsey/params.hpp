#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ramsey/edge.hpp"

namespace ramsey {

// Budget and anti-cycling rules for one search.
struct StallPolicy {
  // Flips (steepest) or edge visits (greedy) allowed before restarting.
  std::uint64_t max_flips_per_restart = 1;
  // Number of fresh random re-initializations allowed; 0 means unlimited.
  std::uint64_t max_restarts = 10;
  // Forbid flipping the edge flipped in the previous step.
  bool no_immediate_reflip = true;

  static constexpr std::uint64_t kDefaultRestarts = 10;

  static StallPolicy defaults_for(std::size_t n) {
    const auto nn = static_cast<std::uint64_t>(n);
    return StallPolicy{std::max<std::uint64_t>(1, 50 * nn * nn), kDefaultRestarts, true};
  }

  void validate() const {
    if (max_flips_per_restart < 1) {
      throw std::invalid_argument("max_flips_per_restart must be >= 1");
    }
  }
};

struct SearchParams {
  int s = 5;  // clique order forbidden in color 1
  int t = 6;  // clique order forbidden in color 2
  std::array<std::int64_t, 2> weights{5, 4};
  double p1 = 0.47;  // probability of color 1 at random initialization
  std::uint64_t seed = 0;

  std::int64_t weight(Color c) const { return weights[color_slot(c)]; }
  int order(Color c) const { return c == Color::One ? s : t; }

  // Tuned values for (5,6): penalty 5 per color-1 K_5, 4 per color-2 K_6,
  // color 1 drawn with probability 0.47. Every other (s,t) gets [1,1], 0.5.
  static SearchParams defaults_for(int s, int t, std::uint64_t seed = 0) {
    SearchParams p;
    p.s = s;
    p.t = t;
    p.seed = seed;
    if (s == 5 && t == 6) {
      p.weights = {5, 4};
      p.p1 = 0.47;
    } else {
      p.weights = {1, 1};
      p.p1 = 0.5;
    }
    return p;
  }

  void validate() const {
    if (s < 2 || t < 2) {
      throw std::invalid_argument("clique orders must be >= 2 (s=" + std::to_string(s) +
                                  ", t=" + std::to_string(t) + ")");
    }
    if (weights[0] < 1 || weights[1] < 1) {
      throw std::invalid_argument("weights must be integers >= 1");
    }
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
      throw std::invalid_argument("p1 must lie in [0, 1]");
    }
  }
};

}  // namespace ramsey
