#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/verify/displays.hpp"
#include "beltrami/verify/report.hpp"

using namespace beltrami;

TEST(Glob, Matching) {
  EXPECT_TRUE(glob_match("*", "e7.f1"));
  EXPECT_TRUE(glob_match("e7.*", "e7.note3"));
  EXPECT_FALSE(glob_match("e7.*", "e16.f1"));
  EXPECT_TRUE(glob_match("L?.k1", "L3.k1"));
  EXPECT_FALSE(glob_match("L?.k1", "L2.1.d1"));
  EXPECT_TRUE(glob_match("*.k*", "L1.k2"));
  EXPECT_FALSE(glob_match("", "x"));
}

TEST(Displays, AllParse) {
  for (const auto& d : displays()) EXPECT_NO_THROW(parse_expr(d.text)) << d.id;
  EXPECT_THROW(display_expr("nope"), Error);
}

TEST(Suite, CaseIdsAreSortedAndUnique) {
  auto ids = suite_case_ids(3);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_EQ(std::count_if(ids.begin(), ids.end(), [](const std::string& s) { return s.rfind("e7.", 0) == 0; }), 11);
  EXPECT_EQ(std::count_if(ids.begin(), ids.end(), [](const std::string& s) { return s.rfind("L1.k", 0) == 0; }), 3);
  EXPECT_EQ(suite_case_ids(5).size(), ids.size() + 8);
}

TEST(Suite, FilteredRunIsDeterministic) {
  SuiteOptions o;
  o.filter = "e16.*";
  auto one = run_suite(o);
  o.threads = 1;
  auto two = run_suite(o);
  ASSERT_EQ(one.size(), 10u);
  ASSERT_EQ(one.size(), two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, two[i].id);
    EXPECT_EQ(one[i].canonical, two[i].canonical);
    EXPECT_EQ(one[i].status, CaseStatus::Match) << one[i].id << ": " << one[i].detail;
  }
  EXPECT_TRUE(suite_passed(one));
  EXPECT_EQ(suite_text(one, false), suite_text(two, false));
}

TEST(Suite, StructuralOnlyPolicy) {
  SuiteOptions o;
  o.filter = "ruled.P4";
  auto r = run_suite(o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, CaseStatus::StructuralOnly);
  EXPECT_EQ(r[0].detail, "degree/extremal checks passed; display corrupted");
  EXPECT_TRUE(suite_passed(r));
}

TEST(Suite, GoldenRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "beltrami_golden_test";
  std::filesystem::remove_all(dir);
  SuiteOptions o;
  o.filter = "law2.d1*";
  auto r = run_suite(o);
  auto missing = r;
  apply_golden(missing, dir, false);
  EXPECT_FALSE(suite_passed(missing));
  apply_golden(r, dir, true);
  auto again = run_suite(o);
  apply_golden(again, dir, false);
  EXPECT_TRUE(suite_passed(again));
  std::ofstream(dir / "law2.d1.txt") << "tampered\n";
  auto tampered = run_suite(o);
  apply_golden(tampered, dir, false);
  EXPECT_FALSE(suite_passed(tampered));
  std::filesystem::remove_all(dir);
}

TEST(Report, JsonSchema) {
  ClassificationReport r = classify_spec(parse_surface_spec({"sphere", "c=1"}), 2);
  std::string j = report_json(r);
  for (const char* key : {"\"surface\"", "\"k_max\"", "\"verdict\"", "\"relation\"", "\"constants\"",
                          "\"eigenvalues\"", "\"null\"", "\"degree_table\"", "\"cross_checks\""})
    EXPECT_NE(j.find(key), std::string::npos) << key;
  EXPECT_NE(report_text(r).find("verdict: finite-type"), std::string::npos);
}

TEST(Report, Dispatcher) {
  EXPECT_EQ(classify_spec(parse_surface_spec({"helicoid", "h=2"}), 2).summary,
            "finite null III-type 1 (minimal); helicoid");
  EXPECT_EQ(classify_spec(parse_surface_spec({"quadric2", "a=1", "b=3"}), 4).leading_degrees,
            (std::vector<int>{3, 5, 7, 9}));
  EXPECT_THROW(classify_spec(parse_surface_spec({"quadric2", "a=0", "b=3"}), 4), Error);
  EXPECT_THROW(classify_spec(parse_surface_spec({"plane"}), 2), Error);
  EXPECT_THROW(classify_spec(parse_surface_spec({"sphere", "c=1"}), 0), Error);
}

TEST(Report, LedgerRows) {
  QuadricKindII q = make_kind2(Expr(1), Expr(1));
  QuadricOperator op = kind2_operator(q);
  std::string j = ledger_json(kind2_iterate_u(q, op.op, 1));
  EXPECT_NE(j.find("\"leading_coefficient\": \"-2\""), std::string::npos);
  EXPECT_NE(j.find("\"leading_degree\": 3"), std::string::npos);
  EXPECT_NE(j.find("\"remainder_degree\": 1"), std::string::npos);
}
