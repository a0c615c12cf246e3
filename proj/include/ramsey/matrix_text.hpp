#pragma once

// Plain-text 2-color adjacency matrix:
//
//   n
//   0121...
//   1012...
//   ...
//
// Row i column j holds the color of edge ij; the diagonal is 0.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

inline std::string matrix_write(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(i == j ? '0' : static_cast<char>('0' + color_number(coloring.color(i, j))));
    }
    out.push_back('\n');
  }
  return out;
}

inline EdgeColoring matrix_read(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw FormatError("matrix text is empty");

  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(lines[0], &used);
    if (used != lines[0].size() || v < 1) throw FormatError("");
    n = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw FormatError("first line must be a positive vertex count, got '" + lines[0] + "'");
  }
  if (lines.size() != n + 1) {
    throw FormatError("expected " + std::to_string(n) + " matrix rows, got " +
                      std::to_string(lines.size() - 1));
  }

  EdgeColoring coloring(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& row = lines[i + 1];
    if (row.size() != n) {
      throw FormatError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const char ch = row[j];
      if (i == j) {
        if (ch != '0') throw FormatError("diagonal entry " + std::to_string(i) + " must be 0");
        continue;
      }
      if (ch != '1' && ch != '2') {
        throw FormatError(std::string("bad digit '") + ch + "' at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
      if (j < i) {
        if (ch != lines[j + 1][i]) {
          throw FormatError("matrix is not symmetric at (" + std::to_string(j) + "," +
                            std::to_string(i) + ")");
        }
        continue;
      }
      coloring.set_color(make_edge(n, i, j), ch == '1' ? Color::One : Color::Two);
    }
  }
  return coloring;
}

}  // namespace ramsey
