#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pgd/action.hpp"
#include "pgd/closure.hpp"
#include "pgd/corpus.hpp"
#include "pgd/degree.hpp"
#include "pgd/roots.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

namespace {

Bits positives(const RootSystem& rs, const std::vector<std::string>& coeffs) {
  Bits b(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p)
    if (std::find(coeffs.begin(), coeffs.end(), rs.coeff_label(rs.positive[p])) != coeffs.end()) b.set(p);
  EXPECT_EQ(b.count(), coeffs.size());
  return b;
}

Bits by_coords(const RootSystem& rs, const std::vector<std::string>& coords) {
  Bits b(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p)
    if (std::find(coords.begin(), coords.end(), rs.coord_label(rs.positive[p])) != coords.end()) b.set(p);
  EXPECT_EQ(b.count(), coords.size());
  return b;
}

std::vector<std::string> coeff_labels(const RootSystem& rs, const Bits& b) {
  std::vector<std::string> out;
  for (int p : to_points(b)) out.push_back(rs.coeff_label(rs.positive[p]));
  std::sort(out.begin(), out.end());
  return out;
}

Bits from_mask(int n, unsigned mask) {
  Bits b(n);
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) b.set(p);
  return b;
}

// All closed sets of a closure operator on the positives, as generators.
template <class Cl>
ClosureSpace space_of(const RootSystem& rs, Cl cl) {
  int n = rs.num_positive();
  std::vector<Bits> closed;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Bits b = from_mask(n, mask);
    if (cl(b) == b) closed.push_back(b);
  }
  return ClosureSpace(n, closed);
}

}  // namespace

TEST(Build, PositiveRootCounts) {
  std::vector<std::pair<std::string, int>> want{{"A1", 1},  {"A4", 10}, {"B3", 9},  {"C4", 16}, {"D4", 12},  {"D5", 20},
                                                {"G2", 6},  {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [name, count] : want) {
    auto rs = parse_root_system(name);
    EXPECT_EQ(rs.num_positive(), count) << name;
    EXPECT_EQ(rs.num_roots(), 2 * count) << name;
    EXPECT_TRUE(validate_root_system(rs).empty()) << name;
  }
}

TEST(Build, A2Positives) {
  auto rs = parse_root_system("A2");
  EXPECT_EQ(coeff_labels(rs, Bits(3).set()), (std::vector<std::string>{"0,1", "1,0", "1,1"}));
}

TEST(Build, F4Base) {
  auto rs = parse_root_system("F4");
  std::vector<std::string> base;
  for (int s : rs.simple) base.push_back(rs.coord_label(s));
  EXPECT_EQ(base, (std::vector<std::string>{"a2-a3", "a3-a4", "a4", "a(+---)"}));
  std::vector<std::string> pos;
  for (int p : rs.positive) pos.push_back(rs.coord_label(p));
  for (auto s : {"a(+---)", "a(+--+)", "a(+-+-)", "a(+-++)", "a(++--)", "a(++-+)", "a(+++-)", "a(++++)"})
    EXPECT_NE(std::find(pos.begin(), pos.end(), s), pos.end()) << s;
}

TEST(Build, E8Base) {
  auto rs = parse_root_system("E8");
  EXPECT_EQ(rs.coord_label(rs.simple[0]), "a(+------+)");
}

TEST(Build, Unsupported) { EXPECT_THROW(parse_root_system("H3"), FormatError); }

TEST(Weyl, Orders) {
  EXPECT_EQ(weyl_enumerate(parse_root_system("A2")).group->order(), 6);
  EXPECT_EQ(weyl_enumerate(parse_root_system("B3")).group->order(), 48);
  EXPECT_EQ(weyl_enumerate(parse_root_system("F4")).group->order(), 1152);
  EXPECT_THROW(weyl_enumerate(parse_root_system("E7"), 100'000), BudgetExceeded);
}

TEST(Weyl, InversionSets) {
  for (auto name : {"A3", "B3", "G2"}) {
    auto rs = parse_root_system(name);
    auto w = weyl_enumerate(rs);
    auto pw = punctured_weyl(rs);
    EXPECT_TRUE(w.inversions[w.longest].all());
    for (int a = 0; a < w.group->order(); ++a) {
      EXPECT_EQ(static_cast<int>(w.inversions[a].count()), w.length[a]);
      Bits complement = w.inversions[a];
      complement.flip();
      EXPECT_EQ(pw.action.domain(a), complement);
    }
  }
}

TEST(Cones, A2Simple) {
  auto rs = parse_root_system("A2");
  Bits a = positives(rs, {"1,0", "0,1"});
  EXPECT_TRUE(cone_Z(rs, a).all());
  EXPECT_TRUE(cone_R(rs, a).all());
}

TEST(Cones, C3LongRoot) {
  auto rs = parse_root_system("C3");
  Bits a = by_coords(rs, {"a1+a2", "a1-a2"});
  Bits twice = by_coords(rs, {"2a1"});
  EXPECT_TRUE(twice.is_subset_of(cone_Z(rs, a)));
  EXPECT_TRUE(cone_Z(rs, a).is_subset_of(cone_R(rs, a)));
}

TEST(Cones, B3HalfSum) {
  auto rs = parse_root_system("B3");
  Bits a = by_coords(rs, {"a1+a2", "a1-a2"});
  Bits a1 = by_coords(rs, {"a1"});
  EXPECT_TRUE(a1.is_subset_of(cone_R(rs, a)));
  EXPECT_FALSE(a1.is_subset_of(cone_Z(rs, a)));
}

TEST(Cones, ClosureLaws) {
  std::mt19937 rng(8);
  for (auto name : {"B3", "C3", "G2", "A4"}) {
    auto rs = parse_root_system(name);
    int n = rs.num_positive();
    for (int t = 0; t < 50; ++t) {
      Bits a(n), b(n);
      for (int p = 0; p < n; ++p) {
        if (std::bernoulli_distribution(0.25)(rng)) a.set(p);
        if (std::bernoulli_distribution(0.2)(rng)) b.set(p);
      }
      b |= a;
      for (auto cl : {cone_Z, cone_R}) {
        Bits ca = cl(rs, a);
        EXPECT_TRUE(a.is_subset_of(ca));
        EXPECT_EQ(cl(rs, ca), ca);
        EXPECT_TRUE(ca.is_subset_of(cl(rs, b)));
      }
      EXPECT_TRUE(cone_Z(rs, a).is_subset_of(cone_R(rs, a)));
    }
  }
}

TEST(Cones, ConvexGeometriesAndFreeSets) {
  for (auto name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = parse_root_system(name);
    auto zspace = space_of(rs, [&](const Bits& a) { return cone_Z(rs, a); });
    auto rspace = space_of(rs, [&](const Bits& a) { return cone_R(rs, a); });
    EXPECT_TRUE(zspace.is_convex_geometry()) << name;
    EXPECT_TRUE(rspace.is_convex_geometry()) << name;
    EXPECT_EQ(zspace.helly(200'000'000, false).h, max_abelian(rs).lower) << name;
    EXPECT_EQ(rspace.helly(200'000'000, false).h, max_really_abelian(rs).lower) << name;
  }
}

TEST(Abelian, G2) {
  auto rs = parse_root_system("G2");
  EXPECT_EQ(max_abelian(rs).lower, 3);
  auto m = max_really_abelian(rs);
  EXPECT_TRUE(m.exact());
  EXPECT_EQ(m.lower, 2);
}

TEST(Abelian, C3FreeSet) {
  auto rs = parse_root_system("C3");
  auto m = max_really_abelian(rs);
  EXPECT_TRUE(m.exact());
  EXPECT_EQ(m.lower, 4);
  EXPECT_TRUE(is_really_abelian(rs, by_coords(rs, {"2a3", "a2+a3", "a1+a3", "a1+a2"})));
}

TEST(Abelian, B3UniqueFive) {
  auto rs = parse_root_system("B3");
  auto m = max_abelian(rs);
  EXPECT_EQ(m.lower, 5);
  Bits want = by_coords(rs, {"a1", "a1+a2", "a1-a2", "a1+a3", "a1-a3"});
  EXPECT_TRUE(is_abelian(rs, want));
  int count = 0;
  int n = rs.num_positive();
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == 5 && is_abelian(rs, from_mask(n, mask))) {
      ++count;
      EXPECT_EQ(from_mask(n, mask), want);
    }
  EXPECT_EQ(count, 1);
  EXPECT_EQ(max_really_abelian(rs).lower, 4);
}

TEST(Abelian, ReallyAbelianBelowAbelian) {
  for (auto name : {"A3", "B4", "C4", "D4", "F4"}) {
    auto rs = parse_root_system(name);
    EXPECT_LE(max_really_abelian(rs).lower, max_abelian(rs).lower) << name;
  }
}

TEST(NamedSets, FreeWithStatedSizes) {
  std::vector<std::pair<std::string, int>> want{{"F4", 6}, {"E6", 16}, {"E7", 27}};
  for (const auto& [name, size] : want) {
    auto sets = verify_named_free_sets(parse_root_system(name));
    ASSERT_EQ(sets.size(), 1u) << name;
    EXPECT_TRUE(sets[0].free) << name;
    EXPECT_EQ(static_cast<int>(sets[0].members.size()), size) << name;
  }
}

TEST(NamedSets, F4Members) {
  auto rs = parse_root_system("F4");
  auto sets = named_free_sets(rs);
  ASSERT_EQ(sets.size(), 1u);
  Bits got = bits_of(rs.num_positive(), sets[0].members);
  EXPECT_EQ(got, by_coords(rs, {"a1", "a1+a2", "a1+a3", "a1+a4", "a(+++-)", "a(++++)"}));
}

TEST(NamedSets, Gamma6ByCoefficients) {
  auto rs = parse_root_system("E6");
  auto sets = named_free_sets(rs);
  ASSERT_EQ(sets.size(), 1u);
  for (int p : sets[0].members) {
    const auto& c = rs.coeffs[rs.positive[p]];
    EXPECT_LE(c[0], 1);
    EXPECT_EQ(c[5], 1);
  }
}

TEST(Punctured, A2NonSimplexPair) {
  auto rs = parse_root_system("A2");
  auto pw = punctured_weyl(rs);
  auto t = transporter(pw.action, "weyl:A2");
  const auto& g = *pw.weyl.group;
  int w0 = pw.weyl.longest;
  int sa = pw.weyl.simple_reflection(0), sb = pw.weyl.simple_reflection(1);
  // w0 s_b acts only on b; w0 s_a (w0 s_b)^-1 then sends it negative.
  int first = g.mul(w0, sb), second = g.mul(g.mul(w0, sa), g.inv(first));
  std::vector<std::string> only{rs.coeff_label(rs.simple[1])};
  std::vector<std::string> dom;
  for (int p : to_points(pw.action.domain(first))) dom.push_back(rs.coeff_label(rs.positive[p]));
  EXPECT_EQ(dom, only);
  int e1 = t.image->embedding->edge_of[first], e2 = t.image->embedding->edge_of[second];
  ASSERT_GE(e1, 0);
  ASSERT_GE(e2, 0);
  EXPECT_FALSE(t.image->spine_is_simplex(std::vector<int>{e1, e2}));
  EXPECT_EQ(t.image->embedding->edge_of[w0], -1);
}

TEST(Punctured, C3WorkedExample) {
  auto rs = parse_root_system("C3");
  auto w = weyl_enumerate(rs);
  auto ex = c3_example(rs, w);
  ASSERT_EQ(ex.word.size(), 16u);
  std::vector<std::pair<int, std::string>> want{{1, "0,0,1"}, {5, "0,1,1"}, {10, "1,2,1"}, {16, "1,1,1"}};
  ASSERT_EQ(ex.face_domains.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(ex.face_domains[i].first, want[i].first);
    EXPECT_EQ(coeff_labels(rs, ex.face_domains[i].second), (std::vector<std::string>{want[i].second}));
  }
  EXPECT_TRUE(ex.word_domain.none());
}

TEST(Punctured, ClosureIsConvexCone) {
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto rs = parse_root_system(name);
    auto t = make_punctured_weyl(name);
    auto space = t.action.closure_space();
    int n = rs.num_positive();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Bits a = from_mask(n, mask);
      EXPECT_EQ(space.closure(a), cone_R(rs, a)) << name << " " << mask;
    }
  }
}

TEST(Tables, NamedRows) {
  EXPECT_EQ(degree_formula("A3"), 4);
  EXPECT_EQ(degree_formula("B4"), 7);
  EXPECT_EQ(degree_formula("A1xA1"), 2);
  auto rows = degree_table({"A3", "B4", "A1xA1"});
  for (const auto& r : rows) {
    EXPECT_TRUE(r.exact()) << r.name;
    EXPECT_EQ(r.value, r.expected) << r.name;
  }
  EXPECT_EQ(abelian_formula("B3"), 5);
  EXPECT_EQ(abelian_formula("C4"), 10);
}

TEST(Tables, MainTheoremConsistency) {
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto t = make_punctured_weyl(name);
    auto rs = parse_root_system(name);
    EXPECT_EQ(degree(t.image).degree, max_really_abelian(rs).lower) << name;
  }
}
