#include <gtest/gtest.h>

#include "ramsey/edge.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {
namespace {

TEST(Edge, IndexFormulaIsRowMajor) {
  EXPECT_EQ(make_edge(5, 0, 1).index, 0u);
  EXPECT_EQ(make_edge(5, 0, 4).index, 3u);
  EXPECT_EQ(make_edge(5, 1, 2).index, 4u);
  EXPECT_EQ(make_edge(5, 3, 4).index, 9u);
  EXPECT_EQ(edge_count(58), 1653u);
}

TEST(Edge, PairIndexBijection) {
  for (std::size_t n : {2u, 3u, 7u, 58u, 70u}) {
    std::size_t expected = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++expected) {
        const Edge e = make_edge(n, u, v);
        ASSERT_EQ(e.index, expected);
        ASSERT_EQ(edge_at(n, e.index), e);
        ASSERT_EQ(make_edge(n, v, u), e);
      }
    }
    EXPECT_EQ(expected, edge_count(n));
  }
}

TEST(Edge, RejectsInvalidPairs) {
  EXPECT_THROW(make_edge(5, 2, 2), std::out_of_range);
  EXPECT_THROW(make_edge(5, 1, 5), std::out_of_range);
  EXPECT_THROW(edge_at(5, 10), std::out_of_range);
  EXPECT_FALSE(edge_valid_for(Edge{1, 2, 0}, 5));
  EXPECT_TRUE(edge_valid_for(make_edge(5, 1, 2), 5));
}

TEST(Color, OtherAndNumbers) {
  EXPECT_EQ(other(Color::One), Color::Two);
  EXPECT_EQ(other(Color::Two), Color::One);
  EXPECT_EQ(color_from_number(2), Color::Two);
  EXPECT_THROW(color_from_number(3), std::invalid_argument);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  AttemptStreams a(7, 0), b(7, 0), c(7, 1);
  EXPECT_EQ(a.init.next(), b.init.next());
  EXPECT_NE(a.shuffle.next(), a.tie.next());
  EXPECT_NE(b.init.next(), c.init.next());
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) ASSERT_LT(rng.below(15), 15u);
  EXPECT_EQ(rng.below(1), 0u);
}

}  // namespace
}  // namespace ramsey
