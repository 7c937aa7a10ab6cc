#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "smashlab/error.hpp"
#include "smashlab/ninfty.hpp"
#include "smashlab/support.hpp"

namespace smashlab {
namespace {

int sub(const FiniteGroup& g, const std::string& gens) {
  std::vector<Perm> ps;
  if (gens != "e")
    for (const auto& w : parse_cycle_list(gens)) ps.push_back(w.to_perm(g.degree()));
  return subgroup_generated(g, ps).index();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

std::vector<int> all_subgroups(const FiniteGroup& g) {
  std::vector<int> out(g.subgroup_count());
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = i;
  return out;
}

IndexingSystem random_system(gen::Rng& r, const FiniteGroup& g, int top, int count,
                             std::vector<std::pair<int, int>>& pairs) {
  for (int i = 0; i < count; ++i) {
    int h = r.below(static_cast<int>(g.subgroup_count()));
    if (!g.subgroup_contains(top, h)) continue;
    std::vector<int> ks;
    for (int k : all_subgroups(g))
      if (g.subgroup_contains(h, k)) ks.push_back(k);
    pairs.push_back({h, ks[r.below(static_cast<int>(ks.size()))]});
  }
  return IndexingSystem::closure(g, top, pairs);
}

TEST(NInfty, RestrictionExamples) {
  auto c4 = FiniteGroup::cyclic(4);
  int c2 = sub(c4, "(1,3)(2,4)");
  auto t = restrict_gset(GSet::make(c4, c4.whole_index(), {c2}), c2);
  EXPECT_EQ(t.orbits, (std::vector<int>{c2, c2}));
  EXPECT_EQ(t.to_string(), "<(1,3)(2,4)>/<(1,3)(2,4)> + <(1,3)(2,4)>/<(1,3)(2,4)>");
  auto free = restrict_gset(GSet::make(c4, c4.whole_index(), {0}), c2);
  EXPECT_EQ(free.orbits, (std::vector<int>{0, 0}));
  auto s4 = FiniteGroup::symmetric(4);
  int d8 = sub(s4, "(1,2,3,4), (1,3)");
  auto fixed = restrict_gset(GSet::make(s4, s4.whole_index(), {s4.whole_index()}), d8);
  EXPECT_EQ(fixed.orbits, (std::vector<int>{d8}));
  EXPECT_EQ(kind_of([&] { restrict_gset(GSet::make(c4, c2, {0}), c4.whole_index()); }),
            ErrorKind::AmbientMismatch);
}

// Orbit decomposition agrees with the explicit coset action.
TEST(NInfty, RestrictionMatchesCosetAction) {
  gen::Rng r(5);
  for (int i = 0; i < 200; ++i) {
    const auto& name = gen::group_pool()[r.below(static_cast<int>(gen::group_pool().size()))];
    Session ses;
    auto g = ses.resolve_group(*parse_group(name));
    int n = static_cast<int>(g.subgroup_count());
    int a = r.below(n), s = r.below(n), l = r.below(n);
    if (!g.subgroup_contains(a, s) || !g.subgroup_contains(a, l)) continue;
    auto res = restrict_gset(GSet::make(g, a, {s}), l);
    auto perms = [&](int x) {
      oracle::PermSet out;
      for (int e : g.subgroup_elements(x)) out.push_back(g.element(e));
      return oracle::sorted(out);
    };
    auto stabs = oracle::coset_orbit_stabilizers(perms(a), perms(s), perms(l));
    std::vector<int> expect;
    for (const auto& st : stabs) {
      ElementSet idx;
      for (const auto& p : st) idx.push_back(*g.index_of(p));
      std::sort(idx.begin(), idx.end());
      expect.push_back(*g.subgroup_index(idx));
    }
    EXPECT_EQ(res, GSet::make(g, l, expect)) << name;
    EXPECT_EQ(res.cardinality(), g.subgroup_elements(a).size() / g.subgroup_elements(s).size());
  }
}

TEST(NInfty, Admissibility) {
  auto c2 = FiniteGroup::cyclic(2);
  auto triv = IndexingSystem::trivial(c2, 1);
  auto full = IndexingSystem::complete(c2, 1);
  EXPECT_TRUE(is_admissible(triv, 1, GSet::make(c2, 1, {1, 1})));
  EXPECT_FALSE(is_admissible(triv, 1, GSet::make(c2, 1, {0})));
  EXPECT_TRUE(is_admissible(full, 1, GSet::make(c2, 1, {0, 1})));
}

TEST(NInfty, ClosureInvariants) {
  auto c4 = FiniteGroup::cyclic(4);
  auto partial = IndexingSystem::from_pairs(c4, c4.whole_index(), {{c4.whole_index(), 0}});
  EXPECT_EQ(kind_of([&] { partial.validate(); }), ErrorKind::ClosureViolation);
  auto closed = IndexingSystem::closure(c4, c4.whole_index(), {{c4.whole_index(), 0}});
  EXPECT_NO_THROW(closed.validate());
  EXPECT_TRUE(closed.admits(1, 0));
  EXPECT_EQ(kind_of([&] { coinduce(partial, c4.whole_index()); }), ErrorKind::ClosureViolation);
  gen::Rng r(11);
  for (int i = 0; i < 40; ++i) {
    auto g = FiniteGroup::symmetric(4);
    std::vector<std::pair<int, int>> pairs;
    EXPECT_FALSE(random_system(r, g, g.whole_index(), 3, pairs).first_violation());
  }
}

TEST(NInfty, CoinductionFromTrivialIsComplete) {
  gen::Rng r(3);
  for (std::string name : {"C(4)", "S(3)", "S(4)"}) {
    Session ses;
    auto g = ses.resolve_group(*parse_group(name));
    auto full = IndexingSystem::complete(g, g.whole_index());
    EXPECT_EQ(coinduce(IndexingSystem::trivial(g, 0), 0), full);
    for (int i = 0; i < 5; ++i) {
      std::vector<std::pair<int, int>> pairs;
      auto sys = random_system(r, g, g.whole_index(), 4, pairs);
      EXPECT_EQ(coinduce(sys, 0), full) << name;
    }
  }
}

TEST(NInfty, CoinductionFromC2IntoC4) {
  auto c4 = FiniteGroup::cyclic(4);
  int c2 = sub(c4, "(1,3)(2,4)");
  auto with_free = IndexingSystem::complete(c4, c2);
  auto up = coinduce(with_free, c2);
  EXPECT_TRUE(up.admits(c4.whole_index(), c2));
  EXPECT_TRUE(up.admits(c4.whole_index(), 0));
  auto none = coinduce(IndexingSystem::trivial(c4, c2), c2);
  EXPECT_TRUE(none.admits(c4.whole_index(), c2));
  EXPECT_FALSE(none.admits(c4.whole_index(), 0));
  EXPECT_FALSE(none.admits(c2, 0));
}

TEST(NInfty, CoinductionOfCompleteIsComplete) {
  for (std::string name : {"C(4)", "S(3)", "D8", "S(4)", "C(2) x C(2)"}) {
    Session ses;
    auto g = ses.resolve_group(*parse_group(name));
    for (int h : all_subgroups(g))
      EXPECT_EQ(coinduce(IndexingSystem::complete(g, h), h),
                IndexingSystem::complete(g, g.whole_index()))
          << name << " " << g.subgroup_label(h);
  }
}

TEST(NInfty, CoinductionIsMonotoneAndExtends) {
  gen::Rng r(17);
  const std::vector<std::string> groups = {"C(4)", "S(3)", "D8", "C(2) x C(2)", "S(4)", "C(8)"};
  int cases = 0;
  for (int i = 0; i < 80; ++i) {
    Session ses;
    auto g = ses.resolve_group(*parse_group(groups[r.below(static_cast<int>(groups.size()))]));
    std::vector<std::pair<int, int>> pairs;
    auto small = random_system(r, g, g.whole_index(), 2, pairs);
    auto big = random_system(r, g, g.whole_index(), 3, pairs);
    ASSERT_TRUE(small.subset_of(big));
    int h = r.below(static_cast<int>(g.subgroup_count()));
    auto cs = coinduce(small.restrict_to(h), h);
    auto cb = coinduce(big.restrict_to(h), h);
    EXPECT_TRUE(cs.subset_of(cb));
    EXPECT_TRUE(small.subset_of(cs));
    EXPECT_FALSE(cs.first_violation());
    ++cases;
  }
  EXPECT_GE(cases, 50);
}

struct Closure : ::testing::Test {
  Session ses;
  IndexingSystem full(const std::string& expr) {
    auto g = ses.parse_and_check(expr)->ambient;
    return IndexingSystem::complete(g, g.whole_index());
  }
  ClosureVerdict check(const std::string& expr) {
    return norm_closure_check(ses, parse_expr(expr), full(expr));
  }
};

TEST_F(Closure, Examples) {
  EXPECT_TRUE(check("EF[triv]@C(2)").closed);
  EXPECT_TRUE(check("S0@S(3)").closed);
  auto v = check("tEF[triv]@C(2)");
  EXPECT_FALSE(v.closed);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->z, "EF[triv]@C(2)");
  EXPECT_EQ(v.counterexample->l, "C2");
  EXPECT_TRUE(v.counterexample->z_acyclic);
  EXPECT_FALSE(v.counterexample->norm_acyclic);
  EXPECT_EQ(v.citation, "Thm 5.2");
}

TEST_F(Closure, TrivialSystemIsAlwaysClosed) {
  auto g = ses.parse_and_check("tEF[triv]@C(2)")->ambient;
  EXPECT_TRUE(norm_closure_check(ses, parse_expr("tEF[triv]@C(2)"), IndexingSystem::trivial(g, 1)).closed);
}

TEST_F(Closure, ChromaticSupportsAreOutsideTheFragment) {
  EXPECT_EQ(kind_of([&] { check("ER(1)"); }), ErrorKind::UnsupportedSupport);
}

// Random bot/top atoms: every NotClosed verdict carries a counterexample that
// is re-checked here by direct support evaluation.
TEST_F(Closure, EveryCounterexampleIsVerified) {
  gen::Rng r(23);
  const std::vector<std::string> groups = {"C(2)", "C(4)", "S(3)", "D8", "C(2) x C(2)", "C(8)"};
  int not_closed = 0;
  for (int i = 0; i < 150; ++i) {
    std::string gname = groups[r.below(static_cast<int>(groups.size()))];
    auto g = ses.resolve_group(*parse_group(gname));
    std::string atom = "atom a@" + gname + "{";
    for (int c = 0; c < static_cast<int>(g.class_count()); ++c) {
      auto gens = g.subgroup_generators(g.class_rep(c));
      std::string key = gens.empty() ? "e" : "<";
      for (std::size_t j = 0; j < gens.size(); ++j) key += (j ? ", " : "") + gens[j];
      if (!gens.empty()) key += ">";
      atom += (c ? ", " : "") + key + ": " + (r.coin() ? "top" : "bot");
    }
    atom += "}";
    std::vector<std::pair<int, int>> pairs;
    auto sys = random_system(r, g, g.whole_index(), 3, pairs);
    auto v = norm_closure_check(ses, parse_expr(atom), sys);
    if (v.closed) continue;
    ++not_closed;
    ASSERT_TRUE(v.counterexample);
    const auto& cx = *v.counterexample;
    int h = -1;
    for (int x : all_subgroups(g))
      if (g.subgroup_label(x) == cx.h) h = x;
    ASSERT_GE(h, 0);
    auto h_term = subgroup_term(parse_group(gname), g, h);
    auto res_e = ses.parse_and_check("res[" + to_string(*h_term) + "](" + atom + ")");
    EXPECT_TRUE(is_acyclic(ses.parse_and_check(cx.z), res_e)) << cx.z;
    EXPECT_FALSE(is_acyclic(ses.parse_and_check(cx.norm), res_e)) << cx.norm;
  }
  EXPECT_GT(not_closed, 10);
}

TEST_F(Closure, PropagationUpgradesNorms) {
  Session s;
  auto c4 = FiniteGroup::cyclic(4);
  auto eg = preservation_propagation(s, parse_expr("EG(2,1)"), IndexingSystem::trivial(c4, c4.whole_index()),
                                     Premise::None);
  EXPECT_TRUE(eg.complete);
  EXPECT_EQ(eg.citations.back(), "Ex 5.9");
  EXPECT_EQ(eg.new_norms.size(), 3u);
  EXPECT_EQ(kind_of([&] {
              preservation_propagation(s, parse_expr("ind[C(4)](S0@C(2))"),
                                       IndexingSystem::trivial(c4, c4.whole_index()), Premise::None);
            }),
            ErrorKind::MissingPremise);
  auto certified = preservation_propagation(s, parse_expr("ind[C(4)](S0@C(2))"),
                                            IndexingSystem::trivial(c4, c4.whole_index()), Premise::Certified);
  EXPECT_FALSE(certified.complete);
  ASSERT_EQ(certified.new_norms.size(), 1u);
  EXPECT_EQ(certified.new_norms[0], std::make_pair(c4.whole_index(), sub(c4, "(1,3)(2,4)")));
  auto s3 = s.resolve_group(*parse_group("S(3)"));
  auto free = preservation_propagation(s, parse_expr("ind[S(3)](E(2))"),
                                       IndexingSystem::trivial(s3, s3.whole_index()),
                                       Premise::None);
  EXPECT_TRUE(free.complete);
  EXPECT_EQ(free.citations.back(), "Cor 5.8");
}

}  // namespace
}  // namespace smashlab
