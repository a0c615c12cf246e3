#pragma once

// Fixed-order clique counting over neighborhood bitsets.
//
// A clique is enumerated as an ascending vertex sequence: after choosing v,
// the candidate set is restricted to neighbors of v that come after v. Each
// k-subset is therefore visited exactly once.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey::detail {

// Single-word path, n <= 64. adj[v] is the neighbor mask of v.
inline std::uint64_t count_cliques_word(const std::uint64_t* adj, std::uint64_t cand, int k) {
  if (k <= 0) return 1;
  if (k == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  if (k == 2) {
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      total += static_cast<std::uint64_t>(std::popcount(cand & adj[v]));
    }
    return total;
  }
  while (cand) {
    if (std::popcount(cand) < k) break;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const std::uint64_t next = cand & adj[v];
    if (std::popcount(next) >= k - 1) total += count_cliques_word(adj, next, k - 1);
  }
  return total;
}

// Multi-word path. adj holds `words` words per vertex.
class WideCliqueCounter {
 public:
  WideCliqueCounter(const std::uint64_t* adj, std::size_t words) : adj_(adj), words_(words) {}

  std::uint64_t count(std::span<const std::uint64_t> cand, int k) {
    if (k <= 0) return 1;
    scratch_.assign(static_cast<std::size_t>(k + 1) * words_, 0);
    std::copy(cand.begin(), cand.end(), scratch_.begin());
    return recurse(0, k);
  }

 private:
  std::size_t popcount(const std::uint64_t* set) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(set[w]));
    return c;
  }

  std::uint64_t recurse(std::size_t depth, int k) {
    std::uint64_t* cand = scratch_.data() + depth * words_;
    if (k == 1) return popcount(cand);
    std::uint64_t* next = cand + words_;
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w]) {
        if (popcount(cand) < static_cast<std::size_t>(k)) return total;
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        const std::uint64_t* nv = adj_ + v * words_;
        for (std::size_t i = 0; i < words_; ++i) next[i] = cand[i] & nv[i];
        total += recurse(depth + 1, k - 1);
      }
    }
    return total;
  }

  const std::uint64_t* adj_;
  std::size_t words_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace ramsey::detail
