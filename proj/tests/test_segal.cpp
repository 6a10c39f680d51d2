#include <gtest/gtest.h>

#include "pgd/corpus.hpp"
#include "pgd/segal.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

namespace {

std::vector<std::vector<int>> members(const std::vector<GappedSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.members);
  return out;
}

const SegalKind kKinds[] = {SegalKind::LowerOdd, SegalKind::LowerEven, SegalKind::UpperEven, SegalKind::UpperOdd};

}  // namespace

TEST(Gapped, MinimalSpread) {
  SegalVariant v{SegalKind::LowerOdd, 2};
  EXPECT_EQ(members(gapped_subsets(4, 3, v)), (std::vector<std::vector<int>>{{0, 2, 4}}));
}

TEST(Gapped, FirstNonvacuousCondition) {
  for (int k = 1; k <= 5; ++k) {
    auto sets = members(gapped_subsets(2 * k, k + 1, SegalVariant{SegalKind::LowerOdd, k}));
    ASSERT_EQ(sets.size(), 1u);
    for (int i = 0; i <= k; ++i) EXPECT_EQ(sets[0][i], 2 * i);
    EXPECT_TRUE(gapped_subsets(2 * k - 1, k + 1, SegalVariant{SegalKind::LowerOdd, k}).empty());
  }
}

TEST(Gapped, UpperOddExcludesBothEnds) {
  EXPECT_TRUE(gapped_subsets(5, 3, SegalVariant{SegalKind::UpperOdd, 2}).empty());
  for (const auto& s : gapped_subsets(8, 3, SegalVariant{SegalKind::UpperOdd, 2})) {
    EXPECT_NE(s.members.front(), 0);
    EXPECT_NE(s.members.back(), 8);
    for (std::size_t i = 1; i < s.members.size(); ++i) EXPECT_GE(s.members[i] - s.members[i - 1], 2);
  }
}

TEST(Variant, NamesAndDimensions) {
  const char* names[] = {"lower-odd", "lower-even", "upper-even", "upper-odd"};
  const char* dims[] = {"lower-5", "lower-6", "upper-6", "upper-7"};
  for (int v = 0; v < 4; ++v) {
    auto parsed = SegalVariant::parse(names[v], 3);
    EXPECT_EQ(parsed.kind, kKinds[v]);
    EXPECT_EQ(parsed.to_string(), dims[v]);
  }
  EXPECT_THROW(SegalVariant::parse("sideways", 1), FormatError);
  EXPECT_THROW(SegalVariant::parse("lower-odd", 0), FormatError);
}

TEST(Generic, SphereLowerBoundWitness) {
  SphereSet s2(2);
  auto r = check_segal_generic(s2, SegalVariant{SegalKind::LowerOdd, 2}, 5);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->n, 4);
}

TEST(Generic, GroupoidNervesAreSegal) {
  for (auto spec : {"group:S3", "nerve:chaotic:3", "nerve:discrete:2", "representable:3"}) {
    auto p = make(spec);
    EXPECT_TRUE(check_segal_generic(*p.symset, SegalVariant{SegalKind::LowerOdd, 1}, 4).pass) << spec;
  }
}

TEST(Spiny, NaFailsAtTwo) {
  auto na = make_na();
  auto r = check_lower_segal_spiny(na, 2, 6);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(replay_spiny_witness(na, *r.witness));
}

TEST(Spiny, NaPassesAtThree) { EXPECT_TRUE(check_lower_segal_spiny(make_na(), 3, 6).pass); }

TEST(Spiny, CommutingTuplesOfSymmetricGroup) {
  auto bcom = make_bcom(group("S3"));
  EXPECT_TRUE(check_lower_segal_spiny(bcom, 2, 5).pass);
  EXPECT_FALSE(check_lower_segal_spiny(bcom, 1, 5).pass);
}

TEST(Words, NaWitnessWord) {
  auto p = make("na");
  const auto& na = *p.pg;
  int f = edge(na, "0>1"), g = edge(na, "1>2"), h = edge(na, "2>3");
  int gf = na.compose(f, g);
  std::vector<int> w{na.inverse(gf), gf, na.inverse(g), g, h, na.inverse(h)};
  EXPECT_FALSE(na.spine_is_simplex(w));
  for (int i : {1, 3, 5}) {
    auto face = word_face(*p.edgy, w, i);
    ASSERT_TRUE(face) << i;
    EXPECT_TRUE(na.spine_is_simplex(*face)) << i;
  }
  SegalWitness wit;
  wit.n = 6;
  wit.I = {1, 3, 5};
  wit.word = w;
  for (int i : wit.I) wit.faces.push_back({i, *word_face(*p.edgy, w, i)});
  EXPECT_TRUE(replay_word_witness(*p.edgy, wit));
  auto r = check_lower_segal_words(*p.edgy, 2, 6);
  ASSERT_FALSE(r.pass);
  EXPECT_TRUE(replay_word_witness(*p.edgy, *r.witness));
}

TEST(Words, CommutingMonoidTuples) {
  BComMonoid m(FiniteMonoid::left_zero_band(), "bcom(band)");
  EXPECT_TRUE(check_lower_segal_words(m, 2, 5).pass);
  auto k1 = check_lower_segal_words(m, 1, 4);
  ASSERT_FALSE(k1.pass);
  EXPECT_TRUE(replay_word_witness(m, *k1.witness));
}

TEST(Words, CategoryNerveIsSegal) {
  auto p = make("group:S3");
  EXPECT_TRUE(check_lower_segal_words(*p.edgy, 1, 4).pass);
  auto r = make("representable:3");
  EXPECT_TRUE(check_lower_segal_words(*r.edgy, 1, 5).pass);
}

class CheckerAgreement : public ::testing::TestWithParam<std::string> {};

TEST_P(CheckerAgreement, SameVerdict) {
  auto p = make(GetParam());
  for (int k = 1; k <= 3; ++k) {
    int n_max = 2 * k + 1;
    bool spiny = check_lower_segal_spiny(*p.pg, k, n_max).pass;
    bool words = check_lower_segal_words(*p.edgy, k, n_max).pass;
    bool generic = check_segal_generic(*p.symset, SegalVariant{SegalKind::LowerOdd, k}, n_max).pass;
    EXPECT_EQ(spiny, words) << GetParam() << " k=" << k;
    EXPECT_EQ(spiny, generic) << GetParam() << " k=" << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, CheckerAgreement,
                         ::testing::Values("na", "na-reduced", "boundary:2", "boundary:3", "skeleton:1,3", "bcom:S3",
                                           "bcom:C4", "lsg:S3:3:1", "group:S3"));

class Hierarchy : public ::testing::TestWithParam<std::string> {};

TEST_P(Hierarchy, SymmetricCollapseAndImplications) {
  auto p = make(GetParam());
  for (int k = 1; k <= 3; ++k) {
    int n_max = 2 * k + 2;
    bool verdict[4];
    for (int v = 0; v < 4; ++v) verdict[v] = check_segal_generic(*p.symset, SegalVariant{kKinds[v], k}, n_max).pass;
    for (int v = 1; v < 4; ++v) {
      EXPECT_EQ(verdict[v], verdict[0]) << GetParam() << " k=" << k << " variant " << v;
      if (verdict[0]) EXPECT_TRUE(verdict[v]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, Hierarchy,
                         ::testing::Values("na", "boundary:3", "skeleton:1,3", "bcom:S3", "lsg:S3:3:1"));

TEST(EndpointReduction, SameVerdict) {
  for (auto spec : {"na", "boundary:3", "bcom:S3", "sphere:1"}) {
    auto p = make(spec);
    for (int k = 1; k <= 3; ++k) {
      GenericOptions reduced;
      reduced.endpoint_reduction = true;
      SegalVariant v{SegalKind::LowerOdd, k};
      EXPECT_EQ(check_segal_generic(*p.symset, v, 2 * k + 2).pass, check_segal_generic(*p.symset, v, 2 * k + 2, reduced).pass)
          << spec << " k=" << k;
    }
  }
}

TEST(SymmetricReduction, SameVerdict) {
  for (auto spec : {"na", "boundary:3", "bcom:S3", "skeleton:1,3", "sphere:1", "sphere:2"}) {
    auto p = make(spec);
    for (int k = 1; k <= 3; ++k)
      for (auto kind : kKinds) {
        GenericOptions reduced;
        reduced.symmetric_reduction = true;
        SegalVariant v{kind, k};
        int n_max = std::min(2 * k + 2, 7);
        EXPECT_EQ(check_segal_generic(*p.symset, v, n_max).pass, check_segal_generic(*p.symset, v, n_max, reduced).pass)
            << spec << " k=" << k << " " << v.to_string();
      }
  }
}

TEST(Decalage, PathSpaceCriterion) {
  auto sk = std::make_shared<SkeletonSet>(2, 4);
  DecTopSet top(sk);
  for (int k = 1; k <= 3; ++k) {
    int n_max = 2 * k + 2;
    bool lower = check_segal_generic(top, SegalVariant{SegalKind::LowerOdd, k}, n_max).pass;
    bool upper = check_segal_generic(*sk, SegalVariant{SegalKind::UpperEven, k}, n_max + 1).pass;
    EXPECT_EQ(lower, upper) << "k=" << k;
  }
}

TEST(Brute, DegreeOfBoundaries) {
  for (int n = 1; n <= 4; ++n) {
    auto b = make_boundary(n);
    auto r = brute_degree(b, n + 3, n + 1);
    EXPECT_EQ(r.degree, n);
    if (n > 1) {
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(replay_spiny_witness(b, *r.witness));
    }
  }
}
