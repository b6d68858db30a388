#include "simplexvol/errors.hpp"
#include "simplexvol/subsets.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace simplexvol {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(9, 4), 126u);
  EXPECT_EQ(binomial(3, 0), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(3, -1), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
}

TEST(Binomial, OverflowIsReported) { EXPECT_THROW(binomial(70, 35), CertificationError); }

TEST(KSubsets, LexicographicAndComplete) {
  for (int ground = 1; ground <= 8; ++ground) {
    for (int k = 0; k <= ground; ++k) {
      const auto all = k_subsets(ground, k);
      ASSERT_EQ(all.size(), binomial(ground, k));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(subset_rank(all[i], ground), i);
        EXPECT_TRUE(std::is_sorted(all[i].begin(), all[i].end()));
      }
    }
  }
}

TEST(KSubsets, FirstPairsOfFive) {
  const auto pairs = k_subsets(5, 2);
  EXPECT_EQ(pairs.front(), (Subset{1, 2}));
  EXPECT_EQ(pairs[4], (Subset{2, 3}));
  EXPECT_EQ(pairs.back(), (Subset{4, 5}));
}

TEST(Complement, IsAnInvolution) {
  for (const Subset& s : k_subsets(7, 3)) {
    const Subset c = complement(s, 7);
    EXPECT_EQ(c.size(), 4u);
    EXPECT_TRUE(disjoint(s, c));
    EXPECT_EQ(complement(c, 7), s);
  }
}

TEST(FaceIndex, ComplementKeying) {
  const FaceIndex face = FaceIndex::from_complement({2, 4}, 5);
  EXPECT_EQ(face.vertices(), (Subset{1, 3, 5}));
  EXPECT_EQ(face.complement(), (Subset{2, 4}));
  EXPECT_EQ(face.dimension(), 2);
  EXPECT_TRUE(face.contains(3));
  EXPECT_FALSE(face.contains(4));
}

TEST(FaceIndex, RejectsBadLabels) {
  EXPECT_THROW(FaceIndex::from_vertices({0, 1}, 4), IndexError);
  EXPECT_THROW(FaceIndex::from_vertices({1, 5}, 4), IndexError);
  EXPECT_THROW(FaceIndex::from_vertices({2, 2}, 4), IndexError);
}

}  // namespace
}  // namespace simplexvol
