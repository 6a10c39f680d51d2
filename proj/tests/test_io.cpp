#include <gtest/gtest.h>

#include "pgd/corpus.hpp"
#include "pgd/degree.hpp"
#include "pgd/io.hpp"
#include "support.hpp"

using namespace pgd;
using namespace pgd::testing;

class RoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(RoundTrip, ByteIdenticalAndValid) {
  auto p = make(GetParam());
  auto first = pg_to_json(*p.pg);
  auto back = pg_from_json(json::parse(dump_canonical(first)));
  EXPECT_EQ(dump_canonical(pg_to_json(back)), dump_canonical(first));
  EXPECT_TRUE(validate(back).empty());
  EXPECT_TRUE(back.load_issues.empty());
  EXPECT_EQ(degree(share(back)).degree, degree(p.pg).degree);
}

INSTANTIATE_TEST_SUITE_P(Corpus, RoundTrip,
                         ::testing::Values("na", "na-reduced", "boundary:3", "skeleton:1,4", "bcom:S3", "group:S3",
                                           "lsg:S3:3:1", "lsg:Q8:4:3", "weyl:A2", "weyl:G2", "empty"));

TEST(RoundTrip, Action) {
  auto t = make_lsg(group("S3"), {0, 1, 2});
  auto doc = action_to_json(t.action);
  auto back = action_from_json(json::parse(dump_canonical(doc)));
  EXPECT_EQ(dump_canonical(action_to_json(back)), dump_canonical(doc));
  EXPECT_TRUE(validate_action(back).empty());
}

TEST(RoundTrip, PartialGroupAction) {
  auto t = make_lsg(group("D4"), {0, 3, 5});
  PartialGroupAction pa;
  pa.group = t.image->embedding->group;
  pa.carrier = t.action.carrier;
  pa.maps.assign(pa.group->order(), std::vector<int>(t.action.size(), -1));
  for (int e = 0; e < t.image->num_edges(); ++e) pa.maps[t.image->embedding->element[e]] = t.action.edge_map[e];
  auto doc = pga_to_json(pa);
  auto back = pga_from_json(doc);
  EXPECT_EQ(dump_canonical(pga_to_json(back)), dump_canonical(doc));
  EXPECT_TRUE(validate_partial_group_action(back).empty());
}

TEST(RoundTrip, AmbientPartialGroupAction) {
  json doc = {{"kind", "partial-group-action"},
              {"group", "S3"},
              {"ambient", {{"carrier", {"1", "2", "3"}}}},
              {"subset", {"1", "2"}}};
  auto g = FiniteGroup::named("S3");
  json act = json::object();
  for (int a = 0; a < g.order(); ++a) {
    std::vector<std::string> images;
    for (int y : g.permutation(a)) images.push_back(std::to_string(y + 1));
    act[g.name(a)] = images;
  }
  doc["ambient"]["act"] = act;
  auto pa = pga_from_json(doc);
  EXPECT_EQ(pa.size(), 2);
  EXPECT_TRUE(validate_partial_group_action(pa).empty());
  EXPECT_EQ(to_points(pa.domain(*pa.group->find("(1 3)"))), (std::vector<int>{1}));
}

TEST(RoundTrip, ClosureSpace) {
  ClosureSpace cs(4, {bits_of(4, {0, 1}), bits_of(4, {2}), Bits(4)}, {"p", "q", "r", "s"});
  auto doc = closure_to_json(cs);
  auto back = closure_from_json(doc);
  EXPECT_EQ(dump_canonical(closure_to_json(back)), dump_canonical(doc));
  EXPECT_EQ(back.helly_number(), cs.helly_number());
}

TEST(Witness, ReplaysAfterSerialization) {
  auto na = make_na();
  auto r = check_lower_segal_spiny(na, 2, 6);
  ASSERT_TRUE(r.witness);
  auto doc = witness_to_json(*r.witness, edge_namer(na));
  auto back = witness_from_json(doc, edge_lookup(na));
  EXPECT_EQ(back.word, r.witness->word);
  EXPECT_EQ(back.I, r.witness->I);
  EXPECT_TRUE(replay_spiny_witness(na, back));
}

TEST(Report, DegreeFields) {
  auto pg = share(make_na());
  DegreeOptions opt;
  opt.method = DegreeMethod::Both;
  auto r = degree(pg, opt);
  auto doc = degree_report_to_json(r, *pg);
  EXPECT_EQ(doc["degree"], 3);
  EXPECT_EQ(doc["agree"], true);
  EXPECT_EQ(doc["method"], "both");
  auto w = witness_from_json(doc["helly_witness"], edge_lookup(*pg));
  EXPECT_TRUE(replay_spiny_witness(*pg, w));
}

TEST(Report, GroupHasNullHelly) {
  auto pg = share(group_nerve(group("S3")));
  auto doc = degree_report_to_json(degree(pg), *pg);
  EXPECT_TRUE(doc["helly_number"].is_null());
}

TEST(Format, Errors) {
  EXPECT_THROW(pg_from_json(json{{"kind", "partial-groupoid"}}), FormatError);
  EXPECT_THROW(group_from_json(json("NoSuchGroup")), FormatError);
  EXPECT_THROW(make("nosuch:3"), FormatError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), FormatError);
}
