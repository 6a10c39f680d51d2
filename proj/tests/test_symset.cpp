#include <gtest/gtest.h>

#include <random>

#include "pgd/action.hpp"
#include "pgd/corpus.hpp"
#include "pgd/symset.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

TEST(Functions, CofaceAndCodegeneracy) {
  EXPECT_EQ(coface(1, 3), (Fn{0, 2, 3}));
  EXPECT_EQ(codegeneracy(1, 2), (Fn{0, 1, 1, 2}));
  EXPECT_EQ(compose_fn(codegeneracy(1, 2), coface(1, 3)), identity_fn(2));
  EXPECT_TRUE(is_monotone(coface(0, 4)));
  EXPECT_TRUE(is_surjective(codegeneracy(0, 3), 3));
}

TEST(Functions, CosimplicialIdentities) {
  for (int n = 2; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        EXPECT_EQ(compose_fn(coface(j, n), coface(i, n - 1)), compose_fn(coface(i, n), coface(j - 1, n - 1)));
}

class OperatorIdentities : public ::testing::TestWithParam<std::string> {};

TEST_P(OperatorIdentities, RandomAlphaBeta) {
  auto p = make(GetParam());
  ASSERT_TRUE(p.symset);
  int dim = std::min(4, std::max(2, p.symset->dimension() + 1));
  auto report = check_operator_identities(*p.symset, dim, 400, 11);
  EXPECT_TRUE(report.empty()) << (report.empty() ? "" : report.front());
}

INSTANTIATE_TEST_SUITE_P(Corpus, OperatorIdentities,
                         ::testing::Values("na", "na-reduced", "boundary:3", "skeleton:1,3", "representable:2", "bcom:S3",
                                           "bcom-monoid", "group:S3", "sphere:1", "sphere:2", "simplicial-sphere:2",
                                           "lsg:S3:3:1"));

TEST(OperatorIdentities, Constructions) {
  auto na = share(make_na());
  SymSetPtr base = std::make_shared<PgSymSet>(na);
  std::vector<SymSetPtr> derived{std::make_shared<DecBotSet>(base), std::make_shared<DecTopSet>(base),
                                 std::make_shared<OppositeSet>(base), std::make_shared<SubdivisionSet>(base),
                                 std::make_shared<SkeletonSet>(2, 4)};
  for (const auto& x : derived) {
    auto report = check_operator_identities(*x, 3, 300, 5);
    EXPECT_TRUE(report.empty()) << x->name();
  }
}

TEST(Sphere, SimplicesAreSurjectionsPlusBasepoint) {
  SphereSet s2(2);
  // 3-simplices: 36 surjections [3] -> [2] plus the basepoint.
  EXPECT_EQ(s2.simplices(3).size(), 37u);
  EXPECT_EQ(s2.simplices(1).size(), 1u);
  SphereSet simplicial(2, false);
  // Monotone surjections [3] -> [2]: 3.
  EXPECT_EQ(simplicial.simplices(3).size(), 4u);
}

TEST(Skeleton, ImageBound) {
  SkeletonSet sk(2, 4);
  for (const auto& x : sk.simplices(4)) {
    std::vector<int> image(x.begin(), x.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    EXPECT_LE(image.size(), 3u);
  }
  EXPECT_EQ(sk.dimension(), 2);
}

TEST(Decalage, BottomVerticesAreEdges) {
  auto bs3 = share(group_nerve(group("S3")));
  DecBotSet dec(std::make_shared<PgSymSet>(bs3));
  EXPECT_EQ(static_cast<int>(dec.simplices(0).size()), bs3->num_edges());
}

TEST(Subdivision, CyclicGroupEdges) {
  auto bc2 = share(group_nerve(group("C2")));
  EXPECT_EQ(subdivision(bc2)->simplices(1).size(), 8u);
}

TEST(Materialize, RoundTripThroughSymSet) {
  auto na = share(make_na());
  PgSymSet x(na);
  auto back = to_partial_groupoid(x, 3, "NA'");
  EXPECT_EQ(back.num_objects(), na->num_objects());
  EXPECT_EQ(back.num_edges(), na->num_edges());
  EXPECT_EQ(back.dimension(), 2);
  EXPECT_TRUE(validate(back).empty());
}
