#include "seifert/report.hpp"
#include "seifert/selftest.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace seifert;

TEST(Report, IntegersFitOrBecomeStrings) {
  EXPECT_EQ(to_json(Integer(-12)), Json(-12));
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")), Json("123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890")), Integer("123456789012345678901234567890"));
  EXPECT_EQ(to_json(Rational(3, 4)), Json("3/4"));
  EXPECT_EQ(to_json(Mat2(1, 2, 3, 4)), Json::parse("[[1,2],[3,4]]"));
  EXPECT_TRUE(mat2_from_json(Json::parse("[[-1,2],[-1,3]]")).same_entries(Mat2(-1, 2, -1, 3)));
  EXPECT_THROW(mat2_from_json(Json::parse("[[1,2,3],[4,5,6]]")), std::exception);
}

TEST(Report, RotationReaders) {
  EXPECT_EQ(rotation_from_json(Json("1/6,1/3")), parse_rotation("1/6,1/3"));
  EXPECT_EQ(rotation_from_json(Json::parse(R"(["1/6","1/3"])")), parse_rotation("1/6,1/3"));
}

TEST(Report, QuotientInputStrict) {
  auto j = Json::parse(worked_example_json());
  auto in = quotient_input_from_json(j);
  EXPECT_EQ(in.action.generators.size(), 2u);
  EXPECT_TRUE(in.action.fiber_reversing);
  EXPECT_EQ(in.action.boundaries.size(), 2u);
  j["surprise"] = 1;
  EXPECT_THROW(quotient_input_from_json(j), std::exception);
}

TEST(Report, SampleFilesParse) {
  for (auto name : {"worked_example.json", "antipodal_annulus.json", "reflection_four_boundaries.json",
                    "fiber_rotation.json"}) {
    std::ifstream f(std::string(SEIFERT_SAMPLES_DIR) + "/" + name);
    ASSERT_TRUE(f) << name;
    auto in = quotient_input_from_json(Json::parse(f));
    auto q = assemble_quotient(in.invariants, in.action);
    EXPECT_EQ(q.constraint_sum, 0) << name;
  }
}

TEST(Report, QuotientJsonAndText) {
  auto in = worked_example_input();
  auto q = assemble_quotient(in.invariants, in.action);
  auto j = to_json(q);
  EXPECT_EQ(j["base_kind"], "folded-ball");
  EXPECT_EQ(j["classes"][0]["projected_filling"], Json::parse("[[-7,4],[-5,3]]"));
  EXPECT_EQ(j["classes"][1]["core_order"], 6);
  auto text = quotient_text(in, q);
  EXPECT_NE(text.find("p' = 4, q' = 3, x' = -7, y' = -5"), std::string::npos);
  EXPECT_NE(text.find("p' = 7, q' = 2"), std::string::npos);
}

TEST(Report, AuditJson) {
  auto j = to_json(recompute_lcm_index(atlas_row(6)));
  EXPECT_EQ(j["table_lcm"], 12);
  EXPECT_EQ(j["recomputed_lcm"], 24);
  EXPECT_EQ(j["lcm_matches"], false);
}
