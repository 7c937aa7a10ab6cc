#include <gtest/gtest.h>

#include <vector>

#include "smashlab/chrom.hpp"
#include "smashlab/error.hpp"

namespace smashlab {
namespace {

std::vector<ChromLevel> chain(int max_level) {
  std::vector<ChromLevel> out{ChromLevel::bot()};
  for (int n = 0; n <= max_level; ++n) out.push_back(ChromLevel::level(n));
  out.push_back(ChromLevel::top());
  return out;
}

// Chain model: a level is the set of acyclics it kills, encoded as the
// number of chain positions below it; wedge unions, smash intersects.
int acyclic_rank(ChromLevel a, const std::vector<ChromLevel>& c) {
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] == a) return i;
  return -1;
}

TEST(ChromLevel, JoinMeetExamples) {
  auto l = ChromLevel::level;
  EXPECT_EQ(join(l(1), l(3)), l(3));
  EXPECT_EQ(join(ChromLevel::bot(), l(4)), l(4));
  EXPECT_EQ(join(ChromLevel::top(), l(2)), ChromLevel::top());
  EXPECT_EQ(meet(l(2), ChromLevel::top()), l(2));
  EXPECT_EQ(meet(ChromLevel::bot(), l(5)), ChromLevel::bot());
  EXPECT_EQ(meet(l(1), l(3)), l(1));
}

TEST(ChromLevel, AgreesWithChainModel) {
  auto c = chain(8);
  for (auto a : c)
    for (auto b : c) {
      int ra = acyclic_rank(a, c), rb = acyclic_rank(b, c);
      EXPECT_EQ(acyclic_rank(join(a, b), c), std::max(ra, rb));
      EXPECT_EQ(acyclic_rank(meet(a, b), c), std::min(ra, rb));
    }
}

TEST(ChromLevel, LatticeLawsExhaustive) {
  auto c = chain(8);
  for (auto a : c) {
    EXPECT_EQ(join(a, a), a);
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(join(a, ChromLevel::bot()), a);
    EXPECT_EQ(meet(a, ChromLevel::top()), a);
    for (auto b : c) {
      EXPECT_EQ(join(a, b), join(b, a));
      EXPECT_EQ(meet(a, b), meet(b, a));
      EXPECT_EQ(join(a, meet(a, b)), a);
      EXPECT_EQ(meet(a, join(a, b)), a);
      for (auto x : c) {
        EXPECT_EQ(join(join(a, b), x), join(a, join(b, x)));
        EXPECT_EQ(meet(meet(a, b), x), meet(a, meet(b, x)));
        EXPECT_EQ(meet(a, join(b, x)), join(meet(a, b), meet(a, x)));
        if (a <= b) {
          EXPECT_LE(join(a, x), join(b, x));
          EXPECT_LE(meet(a, x), meet(b, x));
        }
      }
    }
  }
}

TEST(Tate, Table) {
  Prime two(2);
  EXPECT_TRUE(tate_vanishes(ChromLevel::level(0), 2, two));
  for (int n = 1; n <= 4; ++n) EXPECT_FALSE(tate_vanishes(ChromLevel::level(n), 2, two));
  EXPECT_FALSE(tate_vanishes(ChromLevel::top(), 2, two));
  EXPECT_TRUE(tate_vanishes(ChromLevel::bot(), 2, two));
  EXPECT_TRUE(tate_vanishes(ChromLevel::level(3), 3, two));
  EXPECT_TRUE(tate_vanishes(ChromLevel::top(), 3, two));
  EXPECT_EQ(tate_entry(ChromLevel::top(), 2, "C_2", two).statement, "(S^0)^{tC_2} ≄ *");
  EXPECT_THROW(tate_vanishes(ChromLevel::top(), 1, two), Error);
}

TEST(Prime, Validation) {
  EXPECT_NO_THROW(Prime(2));
  EXPECT_NO_THROW(Prime(7));
  EXPECT_THROW(Prime(1), Error);
  EXPECT_THROW(Prime(9), Error);
}

}  // namespace
}  // namespace smashlab
