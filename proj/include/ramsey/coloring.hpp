#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/clique_kernel.hpp"
#include "ramsey/edge.hpp"
#include "ramsey/params.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// Forbidden-clique totals of a coloring under some SearchParams.
struct PenaltyReport {
  std::uint64_t cliques1 = 0;  // color-1 K_s
  std::uint64_t cliques2 = 0;  // color-2 K_t
  std::int64_t weighted = 0;   // weight[1]*cliques1 + weight[2]*cliques2

  friend bool operator==(const PenaltyReport&, const PenaltyReport&) = default;
};

// A 2-coloring of the edges of K_n.
//
// Each color keeps one neighborhood bitset per vertex (ceil(n/64) words).
// The two neighborhoods of a vertex always partition V \ {v}. Graphs with
// n <= 64 use single-word kernels; larger n falls back to the multi-word path.
class EdgeColoring {
 public:
  // All edges colored `fill`.
  explicit EdgeColoring(std::size_t n, Color fill = Color::Two)
      : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("coloring needs at least one vertex");
    for (auto& nb : nbr_) nb.assign(n_ * words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint64_t* row = mutable_row(fill, v);
      for (std::size_t w = 0; w < n_; ++w) {
        if (w != v) row[w / 64] |= bit(w);
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t edges() const noexcept { return edge_count(n_); }
  std::size_t words() const noexcept { return words_; }

  Color color(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::out_of_range("no color on the diagonal");
    return (row(Color::One, u)[v / 64] & bit(v)) ? Color::One : Color::Two;
  }
  Color color(const Edge& e) const {
    check_edge(e);
    return color(e.u, e.v);
  }

  // Neighborhood bitset of v in color c, words() words long.
  std::span<const std::uint64_t> neighborhood(Color c, std::size_t v) const {
    check_vertex(v);
    return {row(c, v), words_};
  }
  std::size_t degree(Color c, std::size_t v) const {
    std::size_t d = 0;
    for (auto w : neighborhood(c, v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  void set_color(const Edge& e, Color c) {
    check_edge(e);
    if (!valid_color(c)) throw std::invalid_argument("invalid color");
    if (color(e.u, e.v) != c) toggle(e.u, e.v);
  }

  void flip(const Edge& e) {
    check_edge(e);
    toggle(e.u, e.v);
  }

  // Colors every edge from the init stream, one draw per edge in index order.
  void randomize(double p1, Rng& init) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        const Color want = init.bernoulli(p1) ? Color::One : Color::Two;
        if (color(u, v) != want) toggle(u, v);
      }
    }
  }

  // Number of color-c cliques of order k inside `cand`.
  std::uint64_t cliques_within(Color c, std::span<const std::uint64_t> cand, int k) const {
    if (words_ == 1) return detail::count_cliques_word(nbr_[color_slot(c)].data(), cand[0], k);
    detail::WideCliqueCounter counter(nbr_[color_slot(c)].data(), words_);
    return counter.count(cand, k);
  }

  std::uint64_t total_cliques(Color c, int k) const {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= bit(v);
    return cliques_within(c, all, k);
  }

  // Color-c cliques of order k through e, as if e had color c. The answer
  // depends only on the other edges, so nothing is recolored.
  std::uint64_t cliques_through(const Edge& e, Color c, int k) const {
    check_edge(e);
    if (k < 2) return 0;
    const std::uint64_t* ru = row(c, e.u);
    const std::uint64_t* rv = row(c, e.v);
    if (words_ == 1) {
      const std::uint64_t common = ru[0] & rv[0] & ~(bit(e.u) | bit(e.v));
      return detail::count_cliques_word(nbr_[color_slot(c)].data(), common, k - 2);
    }
    std::vector<std::uint64_t> common(words_);
    for (std::size_t w = 0; w < words_; ++w) common[w] = ru[w] & rv[w];
    common[e.u / 64] &= ~bit(e.u);
    common[e.v / 64] &= ~bit(e.v);
    return cliques_within(c, common, k - 2);
  }

  // FNV-1a over the color-1 bitsets; equal colorings hash equal.
  std::uint64_t fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : nbr_[0]) {
      for (int b = 0; b < 8; ++b) {
        h ^= (w >> (8 * b)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    }
    return h;
  }

  // Both neighborhoods of every vertex partition V \ {v} and color-1
  // adjacency is symmetric.
  bool consistent() const {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t a = row(Color::One, v)[w];
        const std::uint64_t b = row(Color::Two, v)[w];
        std::uint64_t expect = 0;
        for (std::size_t x = w * 64; x < std::min(n_, w * 64 + 64); ++x) {
          if (x != v) expect |= bit(x);
        }
        if ((a & b) != 0 || (a | b) != expect) return false;
      }
      for (std::size_t x = 0; x < n_; ++x) {
        if (x == v) continue;
        const bool vx = row(Color::One, v)[x / 64] & bit(x);
        const bool xv = row(Color::One, x)[v / 64] & bit(v);
        if (vx != xv) return false;
      }
    }
    return true;
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.nbr_[0] == b.nbr_[0];
  }

 private:
  static constexpr std::uint64_t bit(std::size_t v) noexcept { return std::uint64_t{1} << (v % 64); }

  const std::uint64_t* row(Color c, std::size_t v) const {
    return nbr_[color_slot(c)].data() + v * words_;
  }
  std::uint64_t* mutable_row(Color c, std::size_t v) {
    return nbr_[color_slot(c)].data() + v * words_;
  }

  void toggle(std::size_t u, std::size_t v) {
    for (auto& nb : nbr_) {
      nb[u * words_ + v / 64] ^= bit(v);
      nb[v * words_ + u / 64] ^= bit(u);
    }
  }

  void check_vertex(std::size_t v) const {
    if (v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                              std::to_string(n_));
    }
  }
  void check_edge(const Edge& e) const {
    if (!edge_valid_for(e, n_)) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") is not an edge of K_" + std::to_string(n_));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> nbr_[2];
};

// All edges of K_n in index order.
inline std::vector<Edge> all_edges(std::size_t n) {
  std::vector<Edge> out;
  out.reserve(edge_count(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) out.push_back(make_edge(n, u, v));
  }
  return out;
}

inline EdgeColoring random_init(std::size_t n, const SearchParams& params, Rng& init) {
  if (n < 2) throw std::invalid_argument("random_init needs n >= 2");
  params.validate();
  EdgeColoring coloring(n);
  coloring.randomize(params.p1, init);
  return coloring;
}

inline PenaltyReport make_report(std::uint64_t cliques1, std::uint64_t cliques2,
                                 const SearchParams& params) {
  return {cliques1, cliques2,
          params.weight(Color::One) * static_cast<std::int64_t>(cliques1) +
              params.weight(Color::Two) * static_cast<std::int64_t>(cliques2)};
}

// Direct enumeration of all forbidden cliques.
inline PenaltyReport count(const EdgeColoring& coloring, const SearchParams& params) {
  return make_report(coloring.total_cliques(Color::One, params.s),
                     coloring.total_cliques(Color::Two, params.t), params);
}

inline std::uint64_t ecount(const EdgeColoring& coloring, const Edge& e, Color c,
                            const SearchParams& params) {
  if (!valid_color(c)) throw std::invalid_argument("invalid color");
  return coloring.cliques_through(e, c, params.order(c));
}

// Second route to the totals: every K_k of color c contains C(k,2) edges of
// color c, so summing ecount over those edges counts it C(k,2) times.
inline PenaltyReport count_by_edges(const EdgeColoring& coloring, const SearchParams& params) {
  std::uint64_t sums[2] = {0, 0};
  for (const Edge& e : all_edges(coloring.size())) {
    const Color c = coloring.color(e);
    sums[color_slot(c)] += ecount(coloring, e, c, params);
  }
  const auto pairs = [](int k) { return static_cast<std::uint64_t>(k) * (k - 1) / 2; };
  return make_report(sums[0] / pairs(params.s), sums[1] / pairs(params.t), params);
}

// Change of the weighted objective if e were flipped.
inline std::int64_t delta(const EdgeColoring& coloring, const Edge& e, const SearchParams& params) {
  const Color c = coloring.color(e);
  const Color d = other(c);
  return params.weight(d) * static_cast<std::int64_t>(ecount(coloring, e, d, params)) -
         params.weight(c) * static_cast<std::int64_t>(ecount(coloring, e, c, params));
}

}  // namespace ramsey
