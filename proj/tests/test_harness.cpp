#include <gtest/gtest.h>

#include <string>

#include "detkit/harness.hpp"

using namespace detkit::harness;

namespace {

CaseSpec minors_case(int m, int n, int t, std::vector<int> R, std::vector<int> r) {
  CaseSpec cs;
  cs.id = "m" + std::to_string(m) + "n" + std::to_string(n) + "t" + std::to_string(t);
  cs.kind = CaseKind::minors;
  cs.m = m;
  cs.n = n;
  cs.t = t;
  cs.R = std::move(R);
  cs.r = std::move(r);
  return cs;
}

CaseSpec skew_case(int n, int size, int R, int r) {
  CaseSpec cs;
  cs.id = "skew";
  cs.kind = CaseKind::pfaffian;
  cs.m = cs.n = n;
  cs.t = size;
  cs.R = {R};
  cs.r = {r};
  return cs;
}

bool holds(const std::vector<Condition>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return c.holds;
  }
  ADD_FAILURE() << "no condition " << name;
  return false;
}

}  // namespace

TEST(CaseJson, RoundTrip) {
  CaseSpec cs = minors_case(3, 4, 2, {1, 2}, {1, 2});
  cs.C = {2};
  cs.c = {1};
  cs.field = "qq";
  cs.order = "lex";
  cs.budget_sec = 12.5;
  const CaseSpec back = case_from_json(cs.to_json());
  EXPECT_EQ(back.to_json().dump(), cs.to_json().dump());
  EXPECT_EQ(back.R, cs.R);
  EXPECT_EQ(back.c, cs.c);
  EXPECT_EQ(back.field, "qq");
}

TEST(CaseJson, SquareKindsDefaultRowsToColumns) {
  const auto cs = case_from_json(Json::parse(R"({"kind":"pfaffian","n":5,"t":4,"R":[2],"r":[1]})"));
  EXPECT_EQ(cs.m, 5);
}

TEST(CaseJson, RejectsUnknownFieldsAndBadValues) {
  auto message = [](const std::string& text) {
    try {
      case_from_json(Json::parse(text));
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message(R"({"m":2,"n":2,"t":1,"colour":1})").find("colour"), std::string::npos);
  EXPECT_NE(message(R"({"m":2,"n":2,"t":"two"})").find("'t'"), std::string::npos);
  EXPECT_NE(message(R"({"m":2,"n":2,"t":1,"field":"fp:32004"})").find("field"), std::string::npos);
  EXPECT_NE(message(R"({"kind":"pfaffian","n":4,"t":3})").find("even"), std::string::npos);
  EXPECT_NE(message(R"({"m":2,"n":2,"t":1,"R":[1],"r":[]})").find("length"), std::string::npos);
  EXPECT_NE(message(R"({"m":2,"n":2,"t":1,"order":"deglex"})").find("order"), std::string::npos);
  EXPECT_NE(message(R"({"m":2,"n":3,"t":2,"check":"truncation","C":[1],"p":2,"q":1,"d":3})")
                .find("p < q"),
            std::string::npos);
}

TEST(Suite, EmptySuiteSucceeds) {
  const auto cases = parse_suite("[]");
  EXPECT_TRUE(cases.empty());
  const auto result = run_suite(cases, {});
  EXPECT_FALSE(result.failed);
  const Json j = result.to_json(false);
  EXPECT_EQ(j["summary"]["cases"], 0);
  EXPECT_TRUE(j["reports"].empty());
}

TEST(Suite, MalformedTextNamesTheLine) {
  try {
    parse_suite("[\n  {\"m\": 2,\n   \"n\": }\n]");
    FAIL() << "parsed malformed JSON";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Suite, BadCaseNamesIndexIdAndField) {
  try {
    parse_suite(R"([{"case":"ok","m":2,"n":2,"t":1},{"case":"broken","m":2,"n":2,"t":1,"q":"x"}])");
    FAIL() << "parsed a bad case";
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("case 1 'broken'"), std::string::npos) << what;
    EXPECT_NE(what.find("'q'"), std::string::npos) << what;
  }
}

TEST(Suite, NotAnArray) { EXPECT_THROW(parse_suite(R"({"m":2})"), std::invalid_argument); }

TEST(Hypotheses, AllHoldOnTheFourByFourExample) {
  const auto conds = check_irredundancy_hypotheses(minors_case(4, 4, 2, {2}, {1}));
  for (const auto& c : conds) EXPECT_TRUE(c.holds) << c.name;
}

TEST(Hypotheses, MinimumEqualToSizeBreaksTwo) {
  const auto conds = check_irredundancy_hypotheses(minors_case(4, 4, 2, {2}, {2}));
  EXPECT_FALSE(holds(conds, "2"));
  EXPECT_TRUE(holds(conds, "1"));
}

TEST(Hypotheses, GapReachingCorankBreaksFour) {
  // R - r = 3 - 1 = 2 = m - t
  const auto conds = check_irredundancy_hypotheses(minors_case(4, 4, 2, {3}, {1}));
  EXPECT_FALSE(holds(conds, "4"));
  EXPECT_TRUE(holds(conds, "2"));
}

TEST(Hypotheses, ZeroMinimumIsFlagged) {
  const auto conds = check_irredundancy_hypotheses(minors_case(4, 4, 2, {2}, {0}));
  EXPECT_FALSE(holds(conds, "minimums_positive"));
}

TEST(Hypotheses, PfaffianMinimumOneBelowSizeIsFlagged) {
  EXPECT_FALSE(holds(check_irredundancy_hypotheses(skew_case(5, 4, 3, 3)),
                     "largest_minimum_below_size_minus_one"));
  EXPECT_TRUE(holds(check_irredundancy_hypotheses(skew_case(5, 4, 2, 1)),
                    "largest_minimum_below_size_minus_one"));
}

TEST(Verify, ThreeByThreeDecompositionIsEqual) {
  CaseSpec cs = minors_case(3, 3, 2, {2}, {1});
  const auto rep = run_case(cs);
  EXPECT_EQ(rep.verdict, Verdict::equal) << rep.reason;
  EXPECT_FALSE(rep.failed());
  EXPECT_EQ(rep.components.size(), 2u);
}

TEST(Verify, DroppedGeneratorIsCaught) {
  CaseSpec cs = minors_case(3, 3, 2, {2}, {1});
  cs.drop_generator = 0;
  const auto rep = run_case(cs);
  EXPECT_EQ(rep.verdict, Verdict::not_equal);
  EXPECT_TRUE(rep.failed());
  SuiteResult sr = run_suite({cs}, {});
  EXPECT_TRUE(sr.failed);
}

TEST(Verify, SkewCounterexampleNamesTheMissingPfaffian) {
  const auto rep = run_case(skew_case(4, 4, 2, 2));
  ASSERT_EQ(rep.verdict, Verdict::not_equal);
  ASSERT_TRUE(rep.derived.contains("lhs_outside"));
  const auto& outside = rep.derived["lhs_outside"];
  ASSERT_EQ(outside.size(), 1u);
  EXPECT_EQ(outside[0]["generator"], "[1,2,3,4]");
  EXPECT_EQ(rep.derived["rhs_contained_in_lhs"], true);
}

TEST(Verify, OddSkewBlockIsEqual) {
  const auto rep = run_case(skew_case(5, 4, 2, 1));
  EXPECT_EQ(rep.verdict, Verdict::equal) << rep.reason;
}

TEST(Verify, RowAndColumnBlockCounterexampleNamesTheLargerMinor) {
  CaseSpec cs = minors_case(2, 2, 1, {1}, {1});
  cs.C = {1};
  cs.c = {1};
  const auto rep = run_case(cs);
  ASSERT_EQ(rep.verdict, Verdict::not_equal);
  EXPECT_EQ(rep.derived["rhs_outside"], "[1,2|1,2]");
  EXPECT_EQ(rep.derived["rhs_contained_in_lhs"], false);
  EXPECT_TRUE(rep.derived["lhs_outside"].empty());
}

TEST(Verify, RowAndColumnBlockWithoutLargerMinorsIsEqual) {
  CaseSpec cs = minors_case(3, 4, 3, {2}, {1});
  cs.C = {1, 3};
  cs.c = {1, 2};
  EXPECT_EQ(run_case(cs).verdict, Verdict::equal);
}

TEST(Verify, SymmetricWitnessIsPrincipal) {
  CaseSpec cs = minors_case(4, 4, 2, {2}, {1});
  cs.kind = CaseKind::symmetric;
  cs.check = CheckKind::irredundancy;
  const auto rep = run_case(cs);
  ASSERT_EQ(rep.witnesses.size(), 2u);
  EXPECT_EQ(rep.witnesses[1].element, "[3,4|3,4]");
  EXPECT_FALSE(rep.failed());
}

TEST(Verify, IrredundancySkipsWhenHypothesesFail) {
  CaseSpec cs = minors_case(4, 4, 2, {2}, {2});
  cs.check = CheckKind::irredundancy;
  const auto rep = run_case(cs);
  EXPECT_EQ(rep.verdict, Verdict::skipped);
  EXPECT_NE(rep.reason.find("2"), std::string::npos);
  EXPECT_FALSE(rep.failed());
}

TEST(Verify, IrredundancyWitnessesOnFourByFour) {
  CaseSpec cs = minors_case(4, 4, 2, {2}, {1});
  cs.check = CheckKind::irredundancy;
  const auto rep = run_case(cs);
  ASSERT_EQ(rep.verdict, Verdict::equal) << rep.reason;
  ASSERT_EQ(rep.witnesses.size(), 2u);
  EXPECT_EQ(rep.witnesses[0].element, "[1|1]");
  EXPECT_EQ(rep.witnesses[1].element, "[3,4|1,2]");
  for (const char* name : {"drop_test_irredundant", "witness_test_irredundant", "tests_agree"}) {
    const auto* c = rep.find_check(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->passed) << name << ": " << c->detail;
  }
}

TEST(Verify, ForcedRedundantCaseObservesPrediction) {
  // every 2-minor of a 3x3 matrix has a row in the first two, so I_1(X_2) is redundant
  CaseSpec cs = minors_case(3, 3, 2, {2}, {1});
  cs.check = CheckKind::irredundancy;
  cs.force = true;
  const auto rep = run_case(cs);
  ASSERT_EQ(rep.verdict, Verdict::equal);
  const auto* c = rep.find_check("predicted_redundancy_observed");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->passed) << c->detail;
  ASSERT_EQ(rep.components.size(), 2u);
  EXPECT_EQ(rep.components[1].irredundant, false);
}

TEST(Verify, BudgetExhaustionIsSkippedNotFailed) {
  CaseSpec cs = minors_case(3, 4, 2, {1, 2}, {1, 2});
  cs.budget_sec = 1e-6;
  const auto rep = run_case(cs);
  EXPECT_EQ(rep.verdict, Verdict::skipped);
  EXPECT_NE(rep.reason.find("budget"), std::string::npos);
  EXPECT_FALSE(rep.failed());
}

TEST(Determinism, ReportsAreByteIdentical) {
  const auto cases = parse_suite(R"([
    {"case":"a","m":3,"n":3,"t":2,"R":[2],"r":[1]},
    {"case":"b","kind":"symmetric","n":3,"t":2,"R":[1],"r":[1]},
    {"case":"c","kind":"pfaffian","n":5,"t":4,"R":[2],"r":[1]},
    {"case":"d","kind":"pfaffian","check":"heights","n":5,"t":4}
  ])");
  SuiteOptions serial;
  serial.timing = false;
  SuiteOptions parallel = serial;
  parallel.jobs = 3;
  const std::string first = run_suite(cases, serial).to_json(false).dump();
  EXPECT_EQ(run_suite(cases, serial).to_json(false).dump(), first);
  EXPECT_EQ(run_suite(cases, parallel).to_json(false).dump(), first);
}

TEST(Determinism, RationalRerunAgreesOnVerdicts) {
  const auto cases = parse_suite(R"([
    {"case":"a","m":2,"n":3,"t":2,"R":[1],"r":[1]},
    {"case":"b","kind":"pfaffian","n":4,"t":4,"R":[2],"r":[2]}
  ])");
  SuiteOptions qq;
  qq.field_override = "qq";
  const auto fp = run_suite(cases, {});
  const auto q = run_suite(cases, qq);
  ASSERT_EQ(fp.reports.size(), q.reports.size());
  for (std::size_t i = 0; i < fp.reports.size(); ++i) {
    EXPECT_EQ(fp.reports[i].verdict, q.reports[i].verdict) << fp.reports[i].case_id;
    EXPECT_EQ(q.reports[i].field, "qq");
  }
}
