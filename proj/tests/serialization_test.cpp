#include "umbra/serialization.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

using nlohmann::json;

TEST(RationalJson, CanonicalStrings) {
  EXPECT_EQ(rational_json(Rational(2)), "2/1");
  EXPECT_EQ(rational_json(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(rational_json(Rational(0)), "0/1");
  EXPECT_EQ(rational_from_json(json("4/6")), Rational(2, 3));
  EXPECT_EQ(rational_from_json(json(-5)), -5);
  EXPECT_THROW(rational_from_json(json(0.5)), ParseError);
  EXPECT_THROW(rational_from_json(json("1/0")), ParseError);
  EXPECT_THROW(rational_from_json(json::array()), ParseError);
}

TEST(LatticeFunctionJson, Shape) {
  const LatticeFunction u{{0, Rational(1, 2), -3}, Rational(1, 2)};
  const json j = to_json(u);
  EXPECT_EQ(j, json::parse(R"({"h": "1/2", "values": ["0/1", "1/2", "-3/1"]})"));
}

TEST(UmbralSeriesJson, Shape) {
  const UmbralSeries f{{1, 2}, 3, DeltaKind::forward};
  EXPECT_EQ(to_json(f), json::parse(R"({"h": "3/1", "zeta": ["1/1", "2/1"]})"));
}

TEST(Json, RoundTrip) {
  testing::RationalGen gen(401);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational h = abs(gen.nonzero());
    const LatticeFunction u{gen.vector(gen.index(0, 12)), h};
    ASSERT_EQ(lattice_function_from_json(json::parse(to_json(u).dump())), u);
    const UmbralSeries f{gen.vector(gen.index(1, 12)), h, DeltaKind::forward};
    const UmbralSeries back = umbral_series_from_json(json::parse(to_json(f).dump()));
    ASSERT_EQ(back.zeta, f.zeta);
    ASSERT_EQ(back.h, f.h);
  }
}

TEST(Json, ReaderErrors) {
  EXPECT_THROW(lattice_function_from_json(json::parse(R"({"values": []})")), ParseError);
  EXPECT_THROW(lattice_function_from_json(json::parse(R"({"h": "1/1"})")), ParseError);
  EXPECT_THROW(lattice_function_from_json(json::parse(R"({"h": "0/1", "values": []})")), ParseError);
  EXPECT_THROW(lattice_function_from_json(json::parse(R"({"h": "-1/2", "values": []})")), ParseError);
  EXPECT_THROW(lattice_function_from_json(json::parse(R"({"h": "1/1", "values": "1/2"})")), ParseError);
  EXPECT_THROW(lattice_function_from_json(json::parse(R"([1, 2])")), ParseError);
  EXPECT_THROW(umbral_series_from_json(json::parse(R"({"h": "1/1", "zeta": ["x"]})")), ParseError);
}

TEST(SolutionSpaceJson, Shape) {
  const json j = to_json(solve_recurrence({-2, 2}, 3));
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["free_indices"], json::parse("[1, 2]"));
  EXPECT_EQ(j["basis"][0]["values"], json::parse(R"(["0/1", "1/1", "2/1", "3/1"])"));
  EXPECT_EQ(j["basis"][1]["values"], json::parse(R"(["0/1", "0/1", "2/1", "6/1"])"));
  EXPECT_EQ(j["basis"][1]["h"], "1/1");
  EXPECT_TRUE(j["diagnostics"].empty());
}

TEST(EquationTableJson, Rows) {
  const json j = equation_table_json(DiscreteEulerEquation({-2, 2}), 5);
  EXPECT_EQ(j["a"], "-2/1");
  EXPECT_EQ(j["b"], "2/1");
  ASSERT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][5], json::parse(R"({"n": 5, "c_nm2": "2/1", "c_nm1": "-6/1", "c_nn": "12/1"})"));
}

TEST(IndicialJson, Shape) {
  const json j = to_json(indicial_roots({-1, 1}));
  EXPECT_EQ(j["kind"], "double_rational");
  EXPECT_EQ(j["discriminant"], "0/1");
  EXPECT_EQ(j["roots"][0]["value"], "1/1");
  EXPECT_EQ(j["roots"][0]["multiplicity"], 2);
}

TEST(IdentityReportJson, PassedReport) {
  const auto reports = run_identity_suite(3, {{1, 2}});
  const json j = to_json(reports.front());
  EXPECT_EQ(j["identity"], "newton_binomial");
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(IdentityReportJson, Counterexample) {
  IdentityReport r{"x", "s", 4, 1, 3, Counterexample{2, Rational(1, 2), std::nullopt, 1, 0}};
  const json j = to_json(r);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["counterexample"], json::parse(R"({"n": 2, "a": "1/2", "lhs": "1/1", "rhs": "0/1"})"));
}

}  // namespace
}  // namespace umbra
