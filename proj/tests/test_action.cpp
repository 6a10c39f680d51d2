#include <gtest/gtest.h>

#include <random>

#include "pgd/action.hpp"
#include "pgd/corpus.hpp"
#include "pgd/roots.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

namespace {

GSet permutation_gset(std::shared_ptr<const FiniteGroup> g) {
  GSet gs;
  gs.group = g;
  int n = static_cast<int>(g->permutation(0).size());
  for (int x = 1; x <= n; ++x) gs.carrier.push_back(std::to_string(x));
  for (int a = 0; a < g->order(); ++a) gs.act.push_back(g->permutation(a));
  return gs;
}

std::vector<int> domain_points(const PartialGroupAction& pa, const std::string& element) {
  return to_points(pa.domain(*pa.group->find(element)));
}

}  // namespace

TEST(Canonical, NaIsCharacteristic) {
  auto na = share(make_na());
  auto a = canonical_action(na);
  ActionCheckOptions opt;
  opt.exhaustive = true;
  EXPECT_TRUE(validate_action(a, opt).empty());
}

TEST(Canonical, CyclicGroup) {
  auto bc2 = share(group_nerve(group("C2")));
  auto a = canonical_action(bc2);
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.domain(edge(*bc2, "a")).count(), 2u);
  EXPECT_TRUE(validate_action(a).empty());
}

TEST(Canonical, DiscreteGroupoid) {
  auto d = share(make_discrete(2));
  auto a = canonical_action(d);
  EXPECT_EQ(a.size(), 2);
  for (int e = 0; e < d->num_edges(); ++e) EXPECT_EQ(a.domain(e).count(), 1u);
}

TEST(Canonical, NaDomainsContainVertexZero) {
  auto na = share(make_na());
  auto a = canonical_action(na);
  std::size_t stars = 0;
  for (int x = 0; x < na->num_objects(); ++x) stars += na->stars(x).size();
  std::size_t expected_points = 0;
  for (int x = 0; x < na->num_objects(); ++x)
    for (const auto& s : na->stars(x)) expected_points += s.size() + 1;
  EXPECT_EQ(static_cast<std::size_t>(a.size()), expected_points);
  EXPECT_GT(stars, 0u);
  for (int x = 0; x < na->num_objects(); ++x)
    for (const auto& s : na->stars(x)) {
      auto dom = a.star_domain(x, s);
      EXPECT_TRUE(dom.any());
    }
}

TEST(Canonical, IdentityDomainsPartitionCarrier) {
  for (auto spec : {"na", "boundary:3", "bcom:S3"}) {
    auto p = make(spec);
    auto a = canonical_action(p.pg);
    Bits seen(a.size());
    for (int x = 0; x < p.pg->num_objects(); ++x) {
      auto dom = a.domain(p.pg->identity(x));
      EXPECT_EQ(dom, a.fiber(x));
      EXPECT_FALSE(seen.intersects(dom));
      seen |= dom;
    }
    EXPECT_TRUE(seen.all()) << spec;
  }
}

TEST(Validate, ShrunkIdentityDomain) {
  auto na = share(make_na());
  auto a = canonical_action(na);
  int id = na->identity(0);
  int x = static_cast<int>(a.domain(id).find_first());
  a.edge_map[id][x] = -1;
  EXPECT_FALSE(validate_action(a).empty());
}

TEST(Transporter, SymmetricGroupOnTwoPoints) {
  auto g = group("S3");
  auto pa = ambient_restriction(permutation_gset(g), {0, 1});
  EXPECT_TRUE(validate_partial_group_action(pa).empty());
  EXPECT_EQ(domain_points(pa, "(1 3)"), (std::vector<int>{1}));
  EXPECT_EQ(domain_points(pa, "(1 2 3)"), (std::vector<int>{0}));
  EXPECT_EQ(domain_points(pa, "(1 2)"), (std::vector<int>{0, 1}));
  auto t = transporter(pa, "L_{1,2}(S3)");
  EXPECT_TRUE(validate_action(t.action).empty());
  EXPECT_TRUE(t.groupoid->is_groupoid());
  EXPECT_EQ(t.groupoid->num_objects(), 2);
}

TEST(Transporter, TotalActionGivesGroupNerve) {
  auto g = group("S3");
  std::vector<int> all{0, 1, 2};
  auto t = transporter(ambient_restriction(permutation_gset(g), all), "S3");
  EXPECT_EQ(t.image->num_edges(), 6);
  EXPECT_TRUE(t.image->is_group());
}

TEST(Transporter, EmptyImage) {
  PartialGroupAction pa;
  pa.group = group("C2");
  EXPECT_THROW(transporter(pa, "empty"), MathError);
}

TEST(Transporter, PuncturedWeylA2) {
  auto rs = parse_root_system("A2");
  auto pw = punctured_weyl(rs);
  auto t = transporter(pw.action, "weyl:A2");
  EXPECT_EQ(t.image->num_edges(), 5);
  auto s1 = pw.weyl.simple_reflection(0);
  std::vector<std::string> dom;
  for (int p : to_points(pw.action.domain(s1))) dom.push_back(rs.coeff_label(rs.positive[p]));
  EXPECT_EQ(dom, (std::vector<std::string>{"0,1", "1,1"}));
  int id = pw.weyl.group->identity();
  EXPECT_TRUE(pw.action.domain(id).all());
}

TEST(Domain, WordDomainMatchesSimulation) {
  auto t = make_random_lsg(group("S4"), 6, 9);
  const auto& a = t.action;
  const auto& pg = *a.base;
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    int x = std::uniform_int_distribution<int>(0, a.size() - 1)(rng);
    std::vector<int> spine;
    int obj = a.anchor[x];
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < len; ++i) {
      std::vector<int> out;
      for (int e = 0; e < pg.num_edges(); ++e)
        if (pg.src(e) == obj) out.push_back(e);
      int e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
      spine.push_back(e);
      obj = pg.tgt(e);
    }
    auto dom = a.word_domain(spine);
    for (int y = 0; y < a.size(); ++y) EXPECT_EQ(dom.test(y), a.act_word(spine, y).has_value());
    EXPECT_EQ(pg.spine_is_simplex(spine), dom.any());
  }
}

TEST(Domain, StarDomainIsIntersection) {
  auto na = share(make_na());
  auto a = canonical_action(na);
  for (int x = 0; x < na->num_objects(); ++x)
    for (const auto& s : na->stars(x)) {
      Bits meet = a.fiber(x);
      for (int e : s) meet &= a.domain(e);
      EXPECT_EQ(a.star_domain(x, s), meet);
    }
}

TEST(SelfActions, MultiplicationOnCyclicGroup) {
  auto bc2 = share(group_nerve(group("C2")));
  auto m = multiplication_action(bc2);
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.domain(edge(*bc2, "a")).count(), 2u);
}

TEST(SelfActions, ConjugationOnSymmetricGroup) {
  auto bs3 = share(group_nerve(group("S3")));
  auto c = conjugation_action(bs3);
  EXPECT_EQ(c.size(), 6);
  for (int e = 0; e < bs3->num_edges(); ++e) EXPECT_TRUE(c.domain(e).all());
}

TEST(SelfActions, StarInjectiveAndSpiny) {
  for (auto spec : {"na", "group:S3", "bcom:S3"}) {
    auto p = make(spec);
    EXPECT_TRUE(validate_self_actions(p.pg, 3).empty()) << spec;
  }
}

TEST(Characteristic, DisjointUnion) {
  auto na = share(make_na());
  auto a = canonical_action(na);
  auto b = a;
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    b.carrier.push_back(a.carrier[x] + "'");
    b.anchor.push_back(a.anchor[x]);
  }
  for (auto& row : b.edge_map) {
    auto copy = row;
    for (int y : copy) row.push_back(y < 0 ? -1 : y + n);
  }
  EXPECT_TRUE(validate_action(b).empty());
}

TEST(Characteristic, TransporterRebuild) {
  auto t = make_random_lsg(group("D4"), 4, 2);
  const auto& a = t.action;
  PartialGroupAction pa;
  pa.group = t.image->embedding->group;
  pa.carrier = a.carrier;
  pa.maps.assign(pa.group->order(), std::vector<int>(a.size(), -1));
  for (int e = 0; e < t.image->num_edges(); ++e) pa.maps[t.image->embedding->element[e]] = a.edge_map[e];
  auto again = transporter(pa, "rebuild");
  EXPECT_EQ(again.image->num_edges(), t.image->num_edges());
  for (int e = 0; e < t.image->num_edges(); ++e) EXPECT_EQ(again.action.domain(e), a.domain(e));
}
