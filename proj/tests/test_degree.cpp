#include <gtest/gtest.h>

#include "pgd/corpus.hpp"
#include "pgd/degree.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

namespace {

DegreeReport both(std::shared_ptr<const PartialGroupoid> pg, int n_max_cap = -1) {
  DegreeOptions opt;
  opt.method = DegreeMethod::Both;
  opt.n_max_cap = n_max_cap;
  return degree(std::move(pg), opt);
}

}  // namespace

TEST(Degree, Na) {
  auto r = both(share(make_na()));
  EXPECT_EQ(r.degree, 3);
  EXPECT_TRUE(r.agree);
  ASSERT_TRUE(r.helly_witness);
  EXPECT_EQ(r.helly_witness->n, 3);
  EXPECT_TRUE(replay_spiny_witness(make_na(), *r.helly_witness));
}

TEST(Degree, Skeleta) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m) {
      auto r = both(share(make_skeleton(m - 1, n)));
      EXPECT_EQ(r.degree, m) << m << "," << n;
      EXPECT_TRUE(r.agree) << m << "," << n;
    }
}

TEST(Degree, CommutingTuples) {
  for (auto g : {"S3", "D4", "Q8"}) EXPECT_EQ(degree(share(make_bcom(group(g)))).degree, 2) << g;
  for (auto g : {"C4", "C2xC2"}) EXPECT_EQ(degree(share(make_bcom(group(g)))).degree, 1) << g;
}

TEST(Degree, CriticalFamilyReplays) {
  auto p = make("boundary:3");
  auto r = degree(p.pg);
  ASSERT_GE(r.critical_object, 0);
  EXPECT_EQ(static_cast<int>(r.critical_edges.size()), r.degree);
  auto a = canonical_action(p.pg);
  auto space = a.closure_space();
  std::vector<Bits> fam;
  for (int e : r.critical_edges) fam.push_back(a.domain(e));
  EXPECT_TRUE(space.subspace(a.fiber(r.critical_object)).is_helly_critical([&] {
    std::vector<Bits> local;
    auto fiber = to_points(a.fiber(r.critical_object));
    for (const auto& d : fam) {
      Bits b(fiber.size());
      for (std::size_t i = 0; i < fiber.size(); ++i)
        if (d.test(fiber[i])) b.set(i);
      local.push_back(b);
    }
    return local;
  }()));
}

TEST(Degree, UserActionMatchesCanonical) {
  auto t = make_lsg(group("S3"), {0, 1, 2});
  DegreeOptions opt;
  opt.action = t.action;
  auto r = degree(t.image, opt);
  EXPECT_EQ(r.action_source, "user");
  EXPECT_EQ(r.degree, 2);
}

TEST(EdgeCases, TwoObjectGroupoid) {
  auto r = degree(share(make_chaotic(2)));
  EXPECT_TRUE(r.groupoid);
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.helly_number, 2);
}

TEST(EdgeCases, FiniteGroup) {
  auto r = degree(share(group_nerve(group("S3"))));
  EXPECT_TRUE(r.group);
  EXPECT_EQ(r.degree, 1);
  EXPECT_TRUE(r.empty_not_closed);
}

TEST(EdgeCases, Empty) {
  auto r = degree(make("empty").pg);
  EXPECT_TRUE(r.empty);
  EXPECT_EQ(r.helly_number, 0);
}

TEST(Bound, CorpusWithinDimensionPlusOne) {
  for (auto spec : {"na", "na-reduced", "boundary:3", "skeleton:1,4", "bcom:S3", "lsg:S3:3:1", "group:S3", "weyl:A2"}) {
    auto b = degree_bound_check(make(spec).pg);
    EXPECT_TRUE(b.ok) << spec << " " << b.degree << " " << b.dimension;
  }
  auto b = degree_bound_check(share(make_boundary(3)));
  EXPECT_EQ(b.degree, 3);
  EXPECT_EQ(b.dimension, 2);
}

TEST(Reduction, Invariance) {
  for (auto spec : {"na", "boundary:3", "skeleton:1,3", "skeleton:2,4", "lsg:S3:3:1"}) {
    auto r = reduction_invariance_check(make(spec).pg);
    EXPECT_TRUE(r.ok) << spec << " " << r.degree << " vs " << r.reduced_degree;
  }
  auto na = reduction_invariance_check(share(make_na()));
  EXPECT_EQ(na.reduced_degree, 3);
}

TEST(Reduction, GroupoidException) {
  auto r = reduction_invariance_check(share(make_chaotic(2)));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.reduced_degree, 2);
}

TEST(Decalage, DegreeInvariance) {
  for (auto spec : {"na", "boundary:3", "skeleton:1,3", "bcom:S3", "lsg:S3:3:1"}) {
    auto p = make(spec);
    int d = p.pg->dimension();
    auto bot = share(to_partial_groupoid(DecBotSet(p.symset), d + 1, "dec_bot"));
    auto top = share(to_partial_groupoid(DecTopSet(p.symset), d + 1, "dec_top"));
    int deg = degree(p.pg).degree;
    EXPECT_EQ(degree(bot).degree, deg) << spec;
    EXPECT_EQ(degree(top).degree, deg) << spec;
  }
}

TEST(Sphere, WitnessReplays) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(replay_sphere_witness(n, sphere_witness(n))) << n;
}

TEST(Sphere, DimensionOneCheck) {
  auto r = sphere_degree_check(1, 7, false);
  EXPECT_TRUE(r.witness_replays);
  EXPECT_TRUE(r.generic_pass);
  EXPECT_TRUE(r.simplicial_pass);
}

TEST(FunctionLemma, SmallCases) {
  auto r = function_lemma_check(3, 6);
  EXPECT_GT(r.families, 0u);
  EXPECT_TRUE(r.pass());
  EXPECT_THROW(function_lemma_check(2, 4), FormatError);
}

class Agreement : public ::testing::TestWithParam<std::string> {};

TEST_P(Agreement, HellyEqualsBrute) {
  auto r = both(make(GetParam()).pg);
  EXPECT_TRUE(r.agree) << GetParam() << " helly " << r.degree << " brute " << r.brute_degree;
  if (r.degree > 1) {
    ASSERT_TRUE(r.brute_witness);
    EXPECT_TRUE(replay_spiny_witness(*make(GetParam()).pg, *r.brute_witness));
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, Agreement,
                         ::testing::Values("na", "na-reduced", "boundary:2", "boundary:3", "boundary:4", "skeleton:1,4",
                                           "bcom:S3", "bcom:Q8", "bcom:C4", "lsg:S3:3:1", "lsg:D4:4:2", "weyl:A2",
                                           "weyl:B2", "weyl:G2"));
