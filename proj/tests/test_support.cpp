#include <gtest/gtest.h>

#include <functional>

#include "gen.hpp"
#include "oracles.hpp"
#include "smashlab/error.hpp"
#include "smashlab/support.hpp"

namespace smashlab {
namespace {

ChromLevel L(int n) { return ChromLevel::level(n); }
const ChromLevel kBot = ChromLevel::bot();
const ChromLevel kTop = ChromLevel::top();

struct Fixture : ::testing::Test {
  Session ses;
  TypedPtr tc(const std::string& s) { return ses.parse_and_check(s); }
  ChromSupport sup(const std::string& s) { return support(tc(s)); }
  // value at the subgroup generated by the given cycles
  ChromLevel at(const ChromSupport& s, const std::string& gens) {
    auto sub = subgroup_generated(s.ambient(), [&] {
      std::vector<Perm> ps;
      for (const auto& w : parse_cycle_list(gens)) ps.push_back(w.to_perm(s.ambient().degree()));
      return ps;
    }());
    return s.at(sub.index());
  }
};

TEST_F(Fixture, BuiltinClasses) {
  auto er = sup("ER(1)");
  EXPECT_EQ(er.values(), (std::vector<ChromLevel>{L(1), kBot}));
  auto eg = sup("EG(3,1)");
  EXPECT_EQ(eg.values(), (std::vector<ChromLevel>{L(4), kBot, kBot, kBot}));
  EXPECT_EQ(sup("triv[C(2)](E(0))").values(), (std::vector<ChromLevel>{L(0), L(0)}));
}

TEST_F(Fixture, NormOfTildeFromC2IntoS3) {
  auto s = sup("norm[S(3)](tEF[triv]@C(2))");
  EXPECT_EQ(at(s, ""), kBot);
  EXPECT_EQ(at(s, "(1,2)"), kBot);
  EXPECT_EQ(at(s, "(1,2,3)"), kBot);
  EXPECT_EQ(at(s, "(1,2,3),(1,2)"), kTop);
}

TEST_F(Fixture, InductionOfTildeIntoC4) {
  auto s = sup("ind[C(4)](tEF[triv]@C(2))");
  EXPECT_EQ(s.values(), (std::vector<ChromLevel>{kBot, kTop, kBot}));
}

TEST_F(Fixture, Equalities) {
  EXPECT_TRUE(bousfield_equal(tc("ER(1)"), tc("ind[C(2)](E(1))")));
  EXPECT_TRUE(bousfield_equal(
      tc("res[sub[D8]{(1,2,3,4)}](res[D8](ind[S(4)](tEF[famsub(sub[D8]{(1,2,3,4)})]@D8)))"),
      tc("ind[C(4)](tEF[triv]@C(2))")));
  EXPECT_FALSE(bousfield_equal(tc("triv[C(2)](E(1))"), tc("triv[C(2)](E(2))")));
  EXPECT_THROW(bousfield_equal(tc("S0@C(2)"), tc("S0@C(3)")), Error);
}

TEST_F(Fixture, Ordering) {
  EXPECT_TRUE(class_leq(tc("EG(3,1)"), tc("EG(3,2)")));
  EXPECT_TRUE(class_leq(tc("pt@C(4)"), tc("tEF[proper]@C(4)")));
  EXPECT_FALSE(class_leq(tc("atom a@C(2){e: top, <(1,2)>: top}"), tc("atom b@C(2){}")));
}

TEST_F(Fixture, Acyclicity) {
  EXPECT_TRUE(is_acyclic(tc("EF[triv]@C(2)"), tc("tEF[triv]@C(2)")));
  EXPECT_TRUE(is_acyclic(tc("tEF[famsub(sub[S(4)]{(1,2,3,4),(1,3)})]@S(4)"),
                         tc("ind[S(4)](S0@D8)")));
  EXPECT_FALSE(is_acyclic(tc("S0"), tc("S0")));
}

TEST_F(Fixture, TypeErrors) {
  auto kind = [&](const std::string& s) {
    try {
      tc(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind("S0@C(2) ^ S0@C(4)"), ErrorKind::AmbientMismatch);
  EXPECT_EQ(kind("ind[C(3)](S0@C(2))"), ErrorKind::NotASubgroup);
  EXPECT_EQ(kind("pull[quot[C(4),C(2)]](S0@C(3))"), ErrorKind::HomTargetMismatch);
  EXPECT_EQ(kind("triv[C(2)](S0@C(2))"), ErrorKind::AmbientMismatch);
  EXPECT_EQ(kind("undefined_name"), ErrorKind::UnboundName);
  auto pulled = tc("pull[quot[C(4),C(2)]](S0@C(2))");
  EXPECT_EQ(pulled->ambient, FiniteGroup::cyclic(4));
  Session odd(Prime(3));
  EXPECT_THROW(odd.parse_and_check("EG(2,1)"), Error);
}

TEST_F(Fixture, InductionToWholeGroupIsBotAtTop) {
  for (const char* s : {"ind[S(4)](S0@D8)", "ind[C(8)](S0@C(4))", "ind[S(3)](S0@C(3))"}) {
    auto v = sup(s);
    EXPECT_EQ(v.at(v.ambient().whole_index()), kBot) << s;
  }
}

TEST_F(Fixture, PointwiseRules) {
  gen::Rng r(7);
  for (int i = 0; i < 100; ++i) {
    auto t = parse_group(gen::group_pool()[r.below(static_cast<int>(gen::group_pool().size()))]);
    auto e = gen::typed_tree(r, ses, t, 3);
    auto f = gen::typed_tree(r, ses, t, 3);
    auto se = support(ses.typecheck(e));
    auto sf = support(ses.typecheck(f));
    auto sw = support(ses.typecheck(make_binary(NodeKind::Wedge, e, f)));
    auto ss = support(ses.typecheck(make_binary(NodeKind::Smash, e, f)));
    for (std::size_t c = 0; c < se.values().size(); ++c) {
      EXPECT_EQ(sw.values()[c], join(se.values()[c], sf.values()[c]));
      EXPECT_EQ(ss.values()[c], meet(se.values()[c], sf.values()[c]));
    }
    EXPECT_TRUE(bousfield_equal(se, support(ses.typecheck(make_binary(NodeKind::Wedge, e, e)))));
    auto pt = make_leaf(NodeKind::Pt, 0, 0, t);
    auto with_pt = support(ses.typecheck(make_binary(NodeKind::Smash, e, pt)));
    for (auto v : with_pt.values()) EXPECT_EQ(v, kBot);
    EXPECT_TRUE(bousfield_equal(se, support(ses.typecheck(make_binary(NodeKind::Wedge, e, pt)))));
  }
}

TEST_F(Fixture, NormOfInflatedConstant) {
  for (const char* g : {"C(4)", "S(3)", "D8"})
    for (int n = 0; n < 3; ++n) {
      std::string s = "norm[" + std::string(g) + "](res[sub[" + g + "]{}](triv[" + g + "](E(" +
                      std::to_string(n) + "))))";
      auto values = sup(s).values();
      for (auto v : values) EXPECT_EQ(v, L(n)) << s;
    }
}

// Every node of 500 random trees: closed-form rules against the coset-orbit
// oracle, at every conjugacy class.
TEST_F(Fixture, OracleEquivalence) {
  gen::Rng r(20261015);
  int change_of_group_nodes = 0;
  for (int i = 0; i < 500; ++i) {
    auto t = parse_group(gen::group_pool()[r.below(static_cast<int>(gen::group_pool().size()))]);
    auto typed = ses.typecheck(gen::typed_tree(r, ses, t, 5));
    SupportEvaluator engine;
    oracle::Evaluator ref;
    std::function<void(const TypedPtr&)> visit = [&](const TypedPtr& n) {
      if (n->child) visit(n->child);
      if (n->rhs) visit(n->rhs);
      const auto& s = engine.eval(n);
      for (int c = 0; c < static_cast<int>(n->ambient.class_count()); ++c) {
        auto members = n->ambient.class_members(c);
        int k = members[r.below(static_cast<int>(members.size()))];
        oracle::PermSet ks;
        for (int x : n->ambient.subgroup_elements(k)) ks.push_back(n->ambient.element(x));
        ASSERT_EQ(s.at_class(c), ref.at(*n, ks)) << to_string(*n->source);
      }
      if (n->kind == NodeKind::Ind || n->kind == NodeKind::Norm) ++change_of_group_nodes;
    };
    visit(typed);
  }
  EXPECT_GE(change_of_group_nodes, 200);
}

}  // namespace
}  // namespace smashlab
