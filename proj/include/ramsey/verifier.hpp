#pragma once

// Independent certification of (s,t)-good colorings.
//
// This path reads colors one pair at a time and grows cliques over sorted
// candidate vectors; it shares no enumeration code with the bitset kernels
// in clique_kernel.hpp. Search order: color-1 s-sets first, then color-2
// t-sets, each in lexicographic order, so the reported violation is the
// lexicographically first one of the first violated color.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct Violation {
  Color color = Color::One;
  std::vector<std::size_t> vertices;  // ascending
};

struct Certificate {
  std::optional<Violation> violation;  // empty means ACCEPT

  bool accepted() const noexcept { return !violation.has_value(); }
};

namespace detail {

class CliqueFinder {
 public:
  CliqueFinder(const EdgeColoring& coloring, Color c) : n_(coloring.size()), same_(n_ * n_, 0) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (u != v && coloring.color(u, v) == c) same_[u * n_ + v] = 1;
      }
    }
  }

  std::optional<std::vector<std::size_t>> first(std::size_t k) {
    if (k == 0 || k > n_) return std::nullopt;
    std::vector<std::size_t> all(n_);
    for (std::size_t v = 0; v < n_; ++v) all[v] = v;
    clique_.clear();
    if (extend(all, k)) return clique_;
    return std::nullopt;
  }

 private:
  bool extend(const std::vector<std::size_t>& candidates, std::size_t k) {
    if (clique_.size() == k) return true;
    const std::size_t need = k - clique_.size();
    for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
      const std::size_t v = candidates[i];
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (same_[v * n_ + candidates[j]]) next.push_back(candidates[j]);
      }
      if (next.size() + 1 < need) continue;
      clique_.push_back(v);
      if (extend(next, k)) return true;
      clique_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<unsigned char> same_;
  std::vector<std::size_t> clique_;
};

inline bool monochromatic(const EdgeColoring& coloring, const std::vector<std::size_t>& vs,
                          Color c) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || coloring.color(vs[i], vs[j]) != c) return false;
    }
  }
  return true;
}

}  // namespace detail

inline Certificate verify(const EdgeColoring& coloring, int s, int t) {
  if (s < 2 || t < 2) throw std::invalid_argument("clique orders must be >= 2");
  for (Color c : {Color::One, Color::Two}) {
    const auto k = static_cast<std::size_t>(c == Color::One ? s : t);
    detail::CliqueFinder finder(coloring, c);
    if (auto found = finder.first(k)) {
      if (!detail::monochromatic(coloring, *found, c)) {
        throw std::logic_error("verifier produced a set that is not monochromatic");
      }
      return Certificate{Violation{c, std::move(*found)}};
    }
  }
  return Certificate{};
}

}  // namespace ramsey
