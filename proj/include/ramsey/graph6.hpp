#pragma once

// graph6 encoding of simple graphs, following McKay's format description.
//
// A string is N(n) followed by R(x): the upper triangle bits x(0,1),
// x(0,2), x(1,2), x(0,3), ... packed six to a byte, most significant bit
// first, each group offset by 63, zero padded. N(n) is one byte n+63 for
// n <= 62 and '~' plus three 6-bit bytes for 63 <= n <= 258047.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/edge.hpp"

namespace ramsey {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected simple graph stored as one bit per pair, in row-major edge index
// order (the same indexing as Edge).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), bits_(edge_count(n), false) {}

  std::size_t size() const noexcept { return n_; }

  bool has_edge(std::size_t u, std::size_t v) const { return bits_[make_edge(n_, u, v).index]; }
  void add_edge(std::size_t u, std::size_t v) { bits_[make_edge(n_, u, v).index] = true; }
  void remove_edge(std::size_t u, std::size_t v) { bits_[make_edge(n_, u, v).index] = false; }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(edge_at(n_, i));
    }
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

constexpr std::size_t kGraph6MaxVertices = 258047;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Graph6Options {
  // Reject strings whose padding bits are not zero.
  bool strict_padding = true;
};

inline std::string graph6_encode(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n > kGraph6MaxVertices) {
    throw FormatError("graph6 encoding supports at most " + std::to_string(kGraph6MaxVertices) +
                      " vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }
  }
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

// Drops whitespace anywhere and one optional leading ">>graph6<<".
inline std::string graph6_strip(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (std::string_view(s).starts_with(kGraph6Header)) s.erase(0, kGraph6Header.size());
  return s;
}

inline SimpleGraph graph6_decode(std::string_view text, Graph6Options options = {}) {
  const std::string s = graph6_strip(text);
  if (s.empty()) throw FormatError("empty graph6 string");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if (b < 63 || b > 126) {
      throw FormatError("byte " + std::to_string(b) + " at offset " + std::to_string(i) +
                        " is outside graph6 range 63..126");
    }
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') throw FormatError("graph6 sizes above 258047 are not supported");
    if (s.size() < 4) throw FormatError("truncated graph6 size prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - 63);
    if (n <= 62) throw FormatError("non-canonical graph6 size prefix");
    pos = 4;
  }

  const std::size_t nbits = edge_count(n);
  const std::size_t expect = (nbits + 5) / 6;
  if (s.size() - pos != expect) {
    throw FormatError("graph6 body for n=" + std::to_string(n) + " needs " + std::to_string(expect) +
                      " bytes, got " + std::to_string(s.size() - pos));
  }

  SimpleGraph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int value = s[pos + bit / 6] - 63;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int value = s.back() - 63;
    const int pad_mask = (1 << (6 - nbits % 6)) - 1;
    if ((value & pad_mask) != 0 && options.strict_padding) {
      throw FormatError("graph6 padding bits are not zero");
    }
  }
  return g;
}

// Edges of g get `present`, non-edges the other color.
inline EdgeColoring coloring_from_graph(const SimpleGraph& g, Color present = Color::One) {
  if (!valid_color(present)) throw std::invalid_argument("invalid color");
  EdgeColoring coloring(g.size(), other(present));
  for (const Edge& e : g.edge_list()) coloring.set_color(e, present);
  return coloring;
}

// The graph formed by the edges of color c.
inline SimpleGraph graph_of_color(const EdgeColoring& coloring, Color c = Color::One) {
  SimpleGraph g(coloring.size());
  for (const Edge& e : all_edges(coloring.size())) {
    if (coloring.color(e) == c) g.add_edge(e.u, e.v);
  }
  return g;
}

}  // namespace ramsey
