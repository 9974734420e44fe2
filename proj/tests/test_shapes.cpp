#include <gtest/gtest.h>

#include "support.hpp"

using namespace lrtab;

TEST(Partition, TrimsTrailingZerosAndRejectsIncreases) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(Partition({2, 2})[5], 0);
  EXPECT_THROW(Partition({1, 2}), PreconditionError);
  EXPECT_THROW(Partition({2, -1}), PreconditionError);
  EXPECT_EQ(Partition({4, 2, 1}).size(), 7);
}

TEST(Contains, CellWise) {
  EXPECT_TRUE(contains({4, 2, 1}, {2, 1}));
  EXPECT_FALSE(contains({}, {1}));
  EXPECT_FALSE(contains({2, 2}, {3}));
}

TEST(Dominance, PrefixSums) {
  EXPECT_TRUE(dominance_leq(Partition{3, 2, 2}, Partition{4, 2, 1}));
  EXPECT_TRUE(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  EXPECT_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  EXPECT_TRUE(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominance_leq(Partition{2}, Partition{3}));
}

TEST(Dominance, PartialOrderOnSmallPartitions) {
  for (int d = 0; d <= 6; ++d) {
    const auto ps = partitions_of(d);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) {
          EXPECT_EQ(a, b);
        }
        for (const auto& c : ps) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) {
            EXPECT_TRUE(dominance_leq(a, c));
          }
        }
      }
    }
  }
}

TEST(Cells, RowMajor) {
  EXPECT_EQ(cells(SkewShape({4, 2, 1})).size(), 7u);
  EXPECT_EQ(cells(SkewShape({2, 1}, {1})), (std::vector<Cell>{{0, 1}, {1, 0}}));
  EXPECT_EQ(cells(SkewShape({6, 5, 5, 3, 2}, {4, 2, 1})).size(), 14u);
}

TEST(ProductShape, CanonicalRepresentative) {
  EXPECT_EQ(product_shape({1}, {1}), SkewShape({2, 1}, {1}));
  EXPECT_EQ(product_shape({5, 4, 3, 1, 1}, {4, 2, 1}), SkewShape({9, 7, 6, 5, 4, 3, 1, 1}, {5, 5, 5}));
  EXPECT_EQ(product_shape({3, 1}, {}), SkewShape({3, 1}));
}

TEST(ProductShape, FactorsAreSeparated) {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const SkewShape s = product_shape(lambda, mu);
          ASSERT_EQ(s.size(), a + b);
          // Every mu-cell lies strictly above and strictly right of every lambda-cell.
          const int r = mu.length();
          for (Cell x : cells(s)) {
            for (Cell y : cells(s)) {
              if (x.row < r && y.row >= r) {
                EXPECT_GT(x.col, y.col);
              }
            }
          }
        }
      }
    }
  }
}

TEST(Diamond, ComplementInRectangle) {
  EXPECT_EQ(diamond({}, 2, 3), Partition({3, 3}));
  EXPECT_EQ(diamond({3, 3}, 2, 3), Partition{});
  EXPECT_EQ(diamond({2, 1}, 2, 3), Partition({2, 1}));
  EXPECT_THROW(diamond({4}, 2, 3), PreconditionError);
  EXPECT_THROW(diamond({1, 1, 1}, 2, 3), PreconditionError);
}

TEST(Diamond, InvolutiveAndOrderReversing) {
  std::vector<Partition> fits;
  for (int d = 0; d <= 9; ++d) {
    for (const auto& p : partitions_of(d, 3)) {
      if (p.length() <= 3) fits.push_back(p);
    }
  }
  for (const auto& p : fits) {
    EXPECT_EQ(diamond(diamond(p, 3, 3), 3, 3), p);
    for (const auto& q : fits) {
      if (contains(p, q)) {
        EXPECT_TRUE(contains(diamond(q, 3, 3), diamond(p, 3, 3)));
      }
    }
  }
}

TEST(HorizontalStrip, NoTwoCellsInAColumn) {
  EXPECT_TRUE(is_horizontal_strip(SkewShape({3, 1}, {1})));
  EXPECT_FALSE(is_horizontal_strip(SkewShape({2, 2}, {1})));
  EXPECT_TRUE(is_horizontal_strip(SkewShape({5, 2}, {2})));
}

TEST(Corners, AddAndRemove) {
  const Partition p{3, 1, 1};
  EXPECT_EQ(removable_cells(p), (std::vector<Cell>{{0, 2}, {2, 0}}));
  EXPECT_EQ(addable_cells(p), (std::vector<Cell>{{0, 3}, {1, 1}, {3, 0}}));
  EXPECT_EQ(remove_cell(p, {2, 0}), Partition({3, 1}));
  EXPECT_EQ(add_cell(p, {3, 0}), Partition({3, 1, 1, 1}));
  EXPECT_THROW(remove_cell(p, {1, 0}), PreconditionError);
  EXPECT_EQ(difference_cell(Partition{3, 2, 1}, p), (Cell{1, 1}));
}

TEST(Partitions, CountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d < static_cast<int>(counts.size()); ++d) EXPECT_EQ(partitions_of(d).size(), counts[static_cast<std::size_t>(d)]);
  const auto ps = partitions_of(4);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
}
