#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ramsey {

// The two edge colors. Color One is the color in which K_s is forbidden,
// color Two the one in which K_t is forbidden.
enum class Color : std::uint8_t { One = 1, Two = 2 };

constexpr Color other(Color c) noexcept {
  return c == Color::One ? Color::Two : Color::One;
}

constexpr int color_number(Color c) noexcept { return static_cast<int>(c); }

// 0 for Color::One, 1 for Color::Two.
constexpr std::size_t color_slot(Color c) noexcept {
  return static_cast<std::size_t>(c) - 1;
}

inline Color color_from_number(int c) {
  if (c != 1 && c != 2) {
    throw std::invalid_argument("color must be 1 or 2, got " + std::to_string(c));
  }
  return static_cast<Color>(c);
}

constexpr bool valid_color(Color c) noexcept {
  return c == Color::One || c == Color::Two;
}

constexpr std::size_t edge_count(std::size_t n) noexcept {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

// Unordered vertex pair u < v together with its row-major index among all
// pairs of K_n: index = u*n - u(u+1)/2 + (v - u - 1).
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t index = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

constexpr std::size_t edge_index(std::size_t n, std::size_t u, std::size_t v) noexcept {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// Builds the canonical edge for the pair {a, b} of K_n.
inline Edge make_edge(std::size_t n, std::size_t a, std::size_t b) {
  if (a == b) throw std::out_of_range("edge endpoints must differ");
  if (a > b) std::swap(a, b);
  if (b >= n) {
    throw std::out_of_range("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range for n=" + std::to_string(n));
  }
  return Edge{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
              static_cast<std::uint32_t>(edge_index(n, a, b))};
}

// Inverse of edge_index.
inline Edge edge_at(std::size_t n, std::size_t index) {
  if (index >= edge_count(n)) {
    throw std::out_of_range("edge index " + std::to_string(index) + " out of range for n=" +
                            std::to_string(n));
  }
  std::size_t u = 0;
  std::size_t row = n - 1;  // number of pairs starting at u
  std::size_t rest = index;
  while (rest >= row) {
    rest -= row;
    ++u;
    --row;
  }
  return Edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u + 1 + rest),
              static_cast<std::uint32_t>(index)};
}

inline bool edge_valid_for(const Edge& e, std::size_t n) noexcept {
  return e.u < e.v && e.v < n && e.index == edge_index(n, e.u, e.v);
}

}  // namespace ramsey
