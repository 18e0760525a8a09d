#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "hyparr/json_io.hpp"
#include "hyparr/verify.hpp"

using namespace hyparr;

TEST(JsonIo, IntegersFallBackToStrings) {
  EXPECT_EQ(int_to_json(Int(-42)), Json(-42));
  const Int big("123456789012345678901234567890", 10);
  EXPECT_EQ(int_to_json(big), Json("123456789012345678901234567890"));
  EXPECT_EQ(int_from_json(int_to_json(big)), big);
  EXPECT_EQ(int_from_json(Json("-7")), Int(-7));
  EXPECT_THROW(int_from_json(Json("1/2")), ParseError);
  EXPECT_THROW(int_from_json(Json(1.5)), ParseError);
}

TEST(JsonIo, ArrangementRoundTrip) {
  const Arrangement a = verify::example_a2();
  const Json j = to_json(a);
  EXPECT_EQ(j.at("dim"), 3);
  EXPECT_EQ(j.at("hyperplanes").size(), 5u);
  EXPECT_EQ(j.at("hyperplanes")[3], Json::parse("[1, 1, -1]"));
  EXPECT_EQ(arrangement_from_json(Json::parse(j.dump())).hyperplanes(), a.hyperplanes());
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"dim": 3, "hyperplanes": [[1, 0]]})")), ParseError);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"hyperplanes": []})")), ParseError);
}

TEST(JsonIo, LatticeShape) {
  const Json j = to_json(intersection_lattice(verify::example_a1()));
  EXPECT_EQ(j.at("flats").size(), 12u);
  const Json& top = j.at("flats").back();
  EXPECT_EQ(top.at("codim"), 3);
  EXPECT_EQ(top.at("mu"), -3);
  EXPECT_EQ(top.at("members"), Json::parse("[0, 1, 2, 3]"));
  EXPECT_EQ(j.at("flats")[0].at("normals"), Json::array());
}

TEST(JsonIo, ReportRoundTrip) {
  const ReconstructionReport r = reconstruct(jacobian_ideal(verify::example_a2()));
  const ReconstructionReport back = report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_TRUE(back == r);
  EXPECT_THROW(report_from_json(Json::parse("{}")), ParseError);
}
