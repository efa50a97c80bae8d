#include <gtest/gtest.h>

#include <fstream>

#include "freeimm/fixtures.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/registry.hpp"

using namespace freeimm;

TEST(Registry, EmbeddedFixturesMatchFiles) {
  for (const auto& name : fixture_names()) {
    std::ifstream in(std::string(FREEIMM_FIXTURE_DIR) + "/" + name + ".json");
    ASSERT_TRUE(in) << name;
    EXPECT_EQ(Json::parse(in), Json::parse(fixture_text(name))) << name;
  }
  EXPECT_THROW(fixture_text("nope"), ValidationError);
}

TEST(Registry, LightCasesPass) {
  for (const char* name : {"circle", "t2", "t3", "t4", "t4-extended", "kfree3", "collar"}) {
    const CaseReport r = run_case(name);
    EXPECT_TRUE(r.passed()) << name;
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << name << ": " << c.name << " expected " << c.expected << " got " << c.actual;
  }
}

TEST(Registry, T5Values) {
  const CaseReport r = run_case("t5");
  EXPECT_TRUE(r.passed());
  const auto lines = r.summary_lines();
  auto has = [&](const std::string& s) { return std::find(lines.begin(), lines.end(), s) != lines.end(); };
  EXPECT_TRUE(has("p(0) = 626467660/1"));
  EXPECT_TRUE(has("D(pi) = 77499567520/1"));
  EXPECT_TRUE(has("cancelled (1+t^2) power = 25"));
}

TEST(Registry, ParallelRunIsOrdered) {
  const ReproReport serial = repro_paper({"t2", "circle", "t3"}, 1);
  const ReproReport parallel = repro_paper({"t2", "circle", "t3"}, 3);
  ASSERT_EQ(parallel.cases.size(), 3u);
  EXPECT_EQ(parallel.cases[0].name, "t2");
  EXPECT_EQ(parallel.cases[1].name, "circle");
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dump_canonical(serial.cases[i].certificate), dump_canonical(parallel.cases[i].certificate));
}

TEST(Registry, SummaryTable) {
  const ReproReport r = repro_paper({"circle"});
  const std::string t = r.summary_table();
  EXPECT_NE(t.find("case   | check   | expected | actual | status"), std::string::npos) << t;
  EXPECT_NE(t.find("1/1 cases passed"), std::string::npos);
}

TEST(Registry, BuiltinWeightSets) {
  EXPECT_FALSE(builtin_weight_set(1));
  EXPECT_FALSE(builtin_weight_set(6));
  EXPECT_EQ(builtin_weight_set(4)->blocks(), 7);
  EXPECT_THROW(builtin_spec("collar"), ValidationError);
}
