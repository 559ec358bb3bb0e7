#include <set>

#include "common.hpp"

using namespace scfc;
using namespace scfc::harness;

TEST(Harness, SmallTheoremsPass) {
  Harness h({6, 0, 2});
  EXPECT_EQ(h.run("T4.1").status, CheckStatus::Pass);
  Harness stars({7, 0, 2});
  EXPECT_EQ(stars.run("T2.3-star").status, CheckStatus::Pass);
}

TEST(Harness, CensusExamples) {
  Harness h({0, 0, 2});
  const auto two = h.census(CensusClass::MinusTwo, 6);
  EXPECT_TRUE(two.contains(families::cycle(4)));
  EXPECT_TRUE(two.contains(families::cycle(3)));
  const auto three = h.census(CensusClass::MinusThree, 7);
  EXPECT_FALSE(three.contains(families::cycle(5)));
  EXPECT_TRUE(h.census(CensusClass::MinusTwo, 7).contains(families::cycle(5)));
}

TEST(Harness, NamedMembersOfMinusTwoClass) {
  Harness h({7, 0, 2});
  const auto c = h.run("T4.8");
  EXPECT_EQ(c.status, CheckStatus::Pass);
  std::size_t members = 0;
  for (const auto& e : c.census) {
    std::set<std::string> unique(e.members.begin(), e.members.end());
    EXPECT_EQ(unique.size(), e.members.size());
    members += e.members.size();
  }
  EXPECT_GT(members, 4u);
}

TEST(Harness, DeterministicReports) {
  Harness a({6, 0, 1});
  Harness b({6, 0, 4});
  for (const char* id : {"T4.8", "T4.10", "T3.4"}) {
    auto x = check_to_json(a.run(id));
    auto y = check_to_json(b.run(id));
    x.erase("runtime_ms");
    y.erase("runtime_ms");
    EXPECT_EQ(x, y) << id;
  }
}

TEST(Harness, BudgetGivesPartialNeverPass) {
  Harness h({0, 1, 2});
  const auto c = h.run("T5.3");
  EXPECT_EQ(c.status, CheckStatus::Partial);
  EXPECT_FALSE(c.unresolved.empty());
  EXPECT_TRUE(c.counterexamples.empty());
}

TEST(Harness, LargerBudgetIsSuperset) {
  Harness small({6, 40, 1});
  Harness full({6, 0, 1});
  const auto partial = small.census(CensusClass::MinusTwo, 6);
  const auto complete = full.census(CensusClass::MinusTwo, 6);
  EXPECT_TRUE(complete.unresolved.empty());
  for (const auto& [key, forms] : partial.members) {
    for (const auto& f : forms) EXPECT_TRUE(complete.members.at(key).count(f));
  }
}

TEST(Harness, ReportSchema) {
  Harness h({5, 0, 1});
  const json j = check_to_json(h.run("T4.8"));
  for (const char* key : {"id", "corpus", "status", "counterexamples", "census", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  ASSERT_FALSE(j.at("census").empty());
  const auto& entry = j.at("census")[0];
  EXPECT_TRUE(entry.contains("n") && entry.contains("m") && entry.contains("members"));
}

TEST(Harness, ExitCodesAndIds) {
  EXPECT_EQ(exit_code({CheckStatus::Pass, CheckStatus::Pass}), 0);
  EXPECT_EQ(exit_code({CheckStatus::Pass, CheckStatus::Partial}), 2);
  EXPECT_EQ(exit_code({CheckStatus::Partial, CheckStatus::Fail}), 1);
  Harness h;
  EXPECT_EQ(testing_util::error_kind([&] { h.run("T9.9"); }), ErrorKind::UnknownTheorem);
  EXPECT_EQ(Harness::ids().size(), 20u);
}
