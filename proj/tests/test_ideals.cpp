#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smashlab/error.hpp"
#include "smashlab/ideals.hpp"
#include "smashlab/support.hpp"
#include "smashlab/typecheck.hpp"

namespace smashlab {
namespace {

const Prime kTwo(2);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

TEST(Ideals, Validation) {
  EXPECT_NO_THROW(validate_sequence({1, 0}, kTwo));
  EXPECT_NO_THROW(validate_sequence({0, 5, 4}, kTwo));
  EXPECT_NO_THROW(validate_sequence({7}, kTwo));
  try {
    validate_sequence({2, 0}, kTwo);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSequence);
    EXPECT_NE(std::string(e.what()).find("(i, j) = (0, 1)"), std::string::npos);
  }
  // (0, 2) is checked only after (0, 1) passes
  try {
    validate_sequence({3, 2, 1}, kTwo);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("(i, j) = (0, 2)"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { validate_sequence({}, kTwo); }), ErrorKind::InvalidSequence);
  EXPECT_EQ(kind_of([] { parse_entries("1,x"); }), ErrorKind::InvalidSequence);
  EXPECT_EQ(parse_entries("1, 0,2"), (std::vector<unsigned>{1, 0, 2}));
}

TEST(Ideals, EnumerationExamples) {
  auto s = enumerate_sequences(1, 2, kTwo);
  std::vector<std::vector<unsigned>> got;
  for (const auto& x : s) got.push_back(x.m);
  EXPECT_EQ(got, (std::vector<std::vector<unsigned>>{
                     {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(enumerate_sequences(1, 0, kTwo).size(), 1u);
  EXPECT_EQ(enumerate_sequences(2, 1, kTwo).size(), 8u);
}

// Counts from a separate brute-force script, M = 0..4.
TEST(Ideals, GoldenCounts) {
  const std::vector<std::vector<std::size_t>> golden = {
      {1, 4, 8, 13, 19}, {1, 8, 20, 38, 63}, {1, 16, 48, 104, 192}};
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      EXPECT_EQ(enumerate_sequences(n, m, kTwo).size(), golden[n - 1][m]) << n << " " << m;
}

TEST(Ideals, EnumerationMatchesBruteForce) {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      auto brute = oracle::brute_sequences(n, m);
      auto fast = enumerate_sequences(n, m, kTwo);
      ASSERT_EQ(fast.size(), brute.size());
      for (std::size_t i = 0; i < brute.size(); ++i) EXPECT_EQ(fast[i].m, brute[i]);
    }
}

TEST(Ideals, ConstructionShapes) {
  auto base = construct(validate_sequence({1, 0}, kTwo));
  EXPECT_EQ(to_string(*base.expr), "ind[C(2)](E(1)) v tEF[triv]@C(2) ^ triv[C(2)](E(0))");
  EXPECT_EQ(base.provenance, "smashing by Prop 4.9");

  auto flat = construct(validate_sequence({0, 0, 0}, kTwo));
  EXPECT_EQ(flat.expr->kind, NodeKind::Pull);
  EXPECT_EQ(flat.expr->lhs->kind, NodeKind::Wedge);
  EXPECT_EQ(flat.cases.front(), "C_4: case (i), m_0 = m_1");

  auto three = construct(validate_sequence({2, 1, 1}, kTwo));
  EXPECT_EQ(three.cases.front(), "C_4: case (iii), m_0 = m_1 + 1");
  EXPECT_EQ(three.expr->kind, NodeKind::Wedge);
  EXPECT_EQ(three.expr->lhs->kind, NodeKind::Norm);
  ASSERT_EQ(three.notes.size(), 1u);
  EXPECT_NE(three.notes[0].find("suspected typo"), std::string::npos);

  auto two = construct(validate_sequence({0, 2, 1, 3}, kTwo));
  EXPECT_EQ(two.cases.size(), 3u);
  EXPECT_EQ(two.cases[0], "C_8: case (ii), m_0 < m_1");
  EXPECT_EQ(kind_of([] { construct(IdealSequence{2, {3, 0}}); }), ErrorKind::InvalidSequence);
  EXPECT_EQ(kind_of([] { construct(IdealSequence{2, {3}}); }), ErrorKind::InvalidSequence);
}

TEST(Ideals, ConstructionTypechecksOverTheCyclicGroup) {
  for (unsigned p : {2u, 3u}) {
    Session ses{Prime(p), 64};
    for (unsigned n = 1; n <= 3; ++n) {
      if (p == 3 && n == 3) continue;
      for (const auto& s : enumerate_sequences(n, 2, Prime(p))) {
        auto t = ses.typecheck(construct(s).expr);
        EXPECT_EQ(t->ambient.order(), p == 2 ? (1u << n) : (n == 1 ? 3u : 9u));
      }
    }
  }
}

TEST(Ideals, VerifyAll) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_sequences(n, 4, kTwo)) {
      auto r = verify(s);
      EXPECT_TRUE(r.ok) << s.to_string();
    }
  for (const auto& s : enumerate_sequences(2, 3, Prime(3))) EXPECT_TRUE(verify(s).ok) << s.to_string();
}

TEST(Ideals, CorruptedConstructionFailsVerification) {
  auto s = validate_sequence({1, 0}, kTwo);
  // ẼC_2 swapped for EC_2+ in the upper factor
  auto bad = parse_expr("ind[C(2)](E(1)) v EF[triv]@C(2) ^ triv[C(2)](E(0))");
  auto r = verify_expr(s, bad);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.failing_index);
  EXPECT_EQ(*r.failing_index, 1u);
  EXPECT_EQ(r.values[1], ChromLevel::bot());
}

}  // namespace
}  // namespace smashlab
