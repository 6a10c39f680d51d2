#include <gtest/gtest.h>

#include <random>

#include "pgd/closure.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

namespace {

bool subset(const Bits& a, const Bits& b) { return a.is_subset_of(b); }

// The space of a two-object chaotic groupoid after reduction: closed sets are empty, E0 and singletons.
ClosureSpace reduction_space() { return ClosureSpace(2, {bits_of(2, {0}), bits_of(2, {1})}); }

}  // namespace

TEST(Closure, SmallestClosedSet) {
  ClosureSpace cs(3, {bits_of(3, {0, 1}), bits_of(3, {1, 2})});
  EXPECT_EQ(cs.closure(cs.empty_set()), bits_of(3, {1}));
  EXPECT_FALSE(cs.empty_closed());
  EXPECT_THROW(cs.helly(), EmptyNotClosed);
}

TEST(Closure, ReductionSpaceSingletons) {
  auto cs = reduction_space();
  EXPECT_EQ(cs.closure(bits_of(2, {0})), bits_of(2, {0}));
  EXPECT_EQ(cs.closure(bits_of(2, {0, 1})), cs.full_set());
  EXPECT_EQ(cs.helly_number(), 2);
  EXPECT_TRUE(cs.is_helly_critical({bits_of(2, {0}), bits_of(2, {1})}));
}

TEST(Closure, OperatorLaws) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto cs = random_space(rng);
    int n = cs.size();
    auto fam = random_family(rng, n, 2);
    Bits a = fam[0], b = fam[0] | fam[1];
    Bits ca = cs.closure(a);
    EXPECT_TRUE(subset(a, ca));
    EXPECT_EQ(cs.closure(ca), ca);
    EXPECT_TRUE(subset(ca, cs.closure(b)));
  }
}

TEST(Core, SmallCardinalities) {
  auto cs = line(4);
  Bits a = bits_of(4, {0}), b = bits_of(4, {3});
  EXPECT_EQ(cs.core({a, b}), cs.closure(a) & cs.closure(b));
  EXPECT_EQ(cs.core({}), cs.closure(cs.empty_set()));
  EXPECT_EQ(cs.core({a}), cs.closure(cs.empty_set()));
}

TEST(Core, CollinearPoints) {
  auto cs = line(3);
  EXPECT_EQ(cs.core({bits_of(3, {0}), bits_of(3, {1}), bits_of(3, {2})}), bits_of(3, {1}));
}

TEST(Helly, EmptySpace) { EXPECT_EQ(ClosureSpace(0, {}).helly_number(), 0); }

TEST(Helly, Line) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(line(n).helly_number(), 2) << n;
    EXPECT_EQ(brute_helly(line(n)), 2) << n;
  }
}

TEST(Critical, EmptySetFamily) {
  auto cs = line(3);
  EXPECT_TRUE(cs.is_helly_critical({cs.empty_set()}));
}

TEST(Critical, ContainmentIsNotCritical) {
  auto cs = line(4);
  EXPECT_FALSE(cs.is_helly_critical({bits_of(4, {0}), bits_of(4, {0, 1}), bits_of(4, {3})}));
}

TEST(Adjunction, PairSwaps) {
  auto cs = line(4);
  Bits a = bits_of(4, {0, 1}), b = bits_of(4, {3});
  auto f = cs.f_map({a, b});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], cs.closure(b));
  EXPECT_EQ(f[1], cs.closure(a));
}

TEST(ConvexGeometry, Line) {
  auto cs = line(5);
  EXPECT_TRUE(cs.is_convex_geometry());
  EXPECT_EQ(cs.max_free_set().size, 2);
}

TEST(ConvexGeometry, SingletonSpaceFailsAntiexchange) {
  ClosureSpace cs(3, {bits_of(3, {0}), bits_of(3, {1}), bits_of(3, {2})});
  EXPECT_FALSE(cs.is_convex_geometry());
  EXPECT_EQ(cs.helly_number(), 2);
  EXPECT_EQ(brute_helly(cs), 2);
}

TEST(Subspace, ClosedSubspaceHasSmallerHelly) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto cs = random_space(rng);
    if (!cs.empty_closed() || cs.generators().empty()) continue;
    Bits u = cs.generators()[std::uniform_int_distribution<std::size_t>(0, cs.generators().size() - 1)(rng)];
    EXPECT_LE(cs.subspace(u).helly_number(), cs.helly_number());
  }
}

TEST(Subspace, DisjointUnionAdds) {
  EXPECT_EQ(ClosureSpace::disjoint_union(line(3), line(4)).helly_number(), 4);
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    auto a = random_space(rng, 4, 4), b = random_space(rng, 4, 4);
    if (!a.empty_closed() || !b.empty_closed()) continue;
    EXPECT_EQ(ClosureSpace::disjoint_union(a, b).helly_number(), a.helly_number() + b.helly_number());
  }
}

TEST(Canonical, PreservesHelly) {
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    auto cs = random_space(rng);
    if (!cs.empty_closed()) continue;
    EXPECT_EQ(cs.canonicalized().helly_number(), cs.helly_number());
  }
}

// Property suite over random spaces with at most 7 points.
class RandomSpaces : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937 rng(2024);
    while (spaces.size() < 200) {
      auto cs = random_space(rng);
      if (cs.empty_closed()) spaces.push_back(cs);
    }
  }
  std::vector<ClosureSpace> spaces;
};

TEST_F(RandomSpaces, CoreMonotone) {
  std::mt19937 rng(5);
  for (const auto& cs : spaces) {
    int n = cs.size();
    auto fam = random_family(rng, n, 3);
    auto sub = fam;
    sub.pop_back();
    EXPECT_TRUE(subset(cs.core(sub), cs.core(fam)));
    auto smaller = fam;
    for (auto& m : smaller) m &= random_family(rng, n, 1)[0];
    EXPECT_TRUE(subset(cs.core(smaller), cs.core(fam)));
  }
}

TEST_F(RandomSpaces, CoreClosureInvariant) {
  std::mt19937 rng(6);
  for (const auto& cs : spaces) {
    auto fam = random_family(rng, cs.size(), 3);
    auto closed = fam;
    for (auto& m : closed) m = cs.closure(m);
    EXPECT_EQ(cs.core(closed), cs.core(fam));
  }
}

TEST_F(RandomSpaces, UnitAndCounit) {
  std::mt19937 rng(7);
  for (const auto& cs : spaces) {
    auto fam = random_family(rng, cs.size(), 3);
    for (auto& m : fam) m = cs.closure(m);
    auto gf = cs.g_map(cs.f_map(fam));
    auto fg = cs.f_map(cs.g_map(fam));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      EXPECT_TRUE(subset(fam[i], gf[i]));
      EXPECT_TRUE(subset(fg[i], fam[i]));
    }
  }
}

TEST_F(RandomSpaces, IndependentCriticalCorrespondence) {
  for (const auto& cs : spaces) {
    auto crit = cs.max_critical();
    if (crit.size >= 1) {
      ASSERT_TRUE(cs.is_helly_critical(crit.family));
      EXPECT_TRUE(cs.is_helly_independent(cs.g_map(crit.family)));
    }
    auto h = cs.helly();
    if (h.h >= 1) {
      std::vector<Bits> fam;
      for (int p : h.witness) fam.push_back(cs.closure(bits_of(cs.size(), {p})));
      ASSERT_TRUE(cs.is_helly_independent(fam));
      auto f = cs.f_map(fam);
      EXPECT_TRUE(cs.is_helly_critical(f));
      EXPECT_EQ(f.size(), fam.size());
    }
  }
}

TEST_F(RandomSpaces, HellyEqualsMaxCritical) {
  for (const auto& cs : spaces) {
    int brute = brute_helly(cs);
    EXPECT_EQ(cs.helly_number(), brute);
    EXPECT_EQ(cs.max_critical_size(), brute);
    EXPECT_EQ(cs.helly_by_generators().h, brute);
    EXPECT_EQ(cs.helly(200'000'000, false).h, brute);
  }
}

TEST_F(RandomSpaces, FreeSetsOnConvexGeometries) {
  for (const auto& cs : spaces)
    if (cs.is_convex_geometry()) EXPECT_EQ(cs.max_free_set().size, cs.helly_number());
}
