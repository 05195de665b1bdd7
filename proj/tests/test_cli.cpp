#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "hypertan/commands.hpp"
#include "hypertan/plot.hpp"
#include "hypertan/serialize.hpp"

using namespace hypertan;

namespace {

const Poly X = Poly::variable(0, 3), Y = Poly::variable(1, 3), Z = Poly::variable(2, 3);

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& text) {
  static int n = 0;
  std::string path = ::testing::TempDir() + "hypertan_test_" + std::to_string(n++) + ".json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Config, ParsesFig42) {
  CurveConfig c = load_config(fixture("fig42.json"));
  EXPECT_EQ(c.names, (std::vector<std::string>{"B1", "B2", "B3"}));
  EXPECT_EQ(c.curve("B3"), PlaneCurve(Z * Y - X * X + Y * Y));
  EXPECT_EQ(c.plot_chart, "y");
  EXPECT_THROW(c.curve("B4"), InputError);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config(json::parse(R"({"curves":{"A":[[1,0,0,"1"],[0,0,0,"1"]]}})")), InputError);
  EXPECT_THROW(parse_config(json::parse(R"({"curves":{"A":[[1,0,0,"1"],[1,0,0,"2"]]}})")), InputError);
  EXPECT_THROW(parse_config(json::parse(R"({"curves":{"A":[[1,0,0,"x"]]}})")), InputError);
  EXPECT_THROW(parse_config(json::parse(R"({"curves":{"A":[[1,0,0,"1"]]},"configuration":{"components":["B"]}})")),
               InputError);
  EXPECT_THROW(load_config(temp_file("{ not json")), InputError);
  EXPECT_THROW(load_config("/nonexistent/file.json"), InputError);
}

TEST(Config, FieldCoefficients) {
  CurveConfig c = parse_config(json::parse(
      R"({"field":{"generator":"w","minpoly":["-2","0","1"]},"curves":{"A":[[1,0,0,"1"],[0,1,0,["0","1"]]]}})"));
  ASSERT_TRUE(c.field);
  const FieldElement w = FieldElement::generator(c.field);
  EXPECT_EQ(c.curve("A"), PlaneCurve(X + Y.scaled(w)));
  ProjectivePoint p = parse_point("[0,1]:-1:0", c.field);
  EXPECT_TRUE(contains(c.curve("A"), p));
}

TEST(Serialize, CurveRoundTrip) {
  FieldPtr k = parse_field_flag("-3,0,1");
  const FieldElement a = FieldElement::generator(k);
  for (const PlaneCurve& c : {PlaneCurve(Y * Z - X * X.scaled(FieldElement(Rational(3, 7)))),
                              PlaneCurve(X * X + (Y * Z).scaled(a + FieldElement(1)))}) {
    const json j = to_json(c);
    EXPECT_EQ(curve_from_json(json::parse(j.dump())), c);
  }
}

TEST(Commands, HypSearchReportRoundTripsAndReverifies) {
  CommandOutput out = run_command("hyp-search", {{"config", fixture("fig42.json")}});
  EXPECT_EQ(out.exit_code, kOk);
  EXPECT_EQ(out.report["result"]["count"], 4);
  EXPECT_EQ(out.report["schema"], kReportSchema);
  const json again = json::parse(out.report.dump());
  EXPECT_EQ(again, out.report);
  const PlaneCurve base = curve_product(load_config(fixture("fig42.json")).configuration_curves());
  for (const auto& c : again["result"]["certificates"]) EXPECT_TRUE(reverify(base, curve_from_json(c["curve"])));
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run_command_safe("delta", {{"config", fixture("qb4.json")}, {"curve", "Q4"}, {"point", "0:1:0"}}).report["result"]["delta"], 3);
  EXPECT_EQ(run_command_safe("validate-3c", {{"config", fixture("tangential.json")}}).exit_code, kNegative);
  EXPECT_EQ(run_command_safe("hyp-search", {{"config", fixture("cubic113.json")}}).exit_code, kNegative);
  EXPECT_EQ(run_command_safe("qb-families", {{"b", 4}, {"t", "0"}}).exit_code, kInputError);
  EXPECT_EQ(run_command_safe("delta", {{"config", fixture("qb4.json")}, {"curve", "nope"}, {"point", "0:1:0"}}).exit_code,
            kInputError);
  EXPECT_EQ(run_command_safe("delta", {{"config", fixture("qb4.json")}, {"curve", "Q4"}, {"point", "1:2:1"}}).exit_code,
            kInputError);
  EXPECT_EQ(run_command_safe("no-such-command", json::object()).exit_code, kInputError);
  // the conjugate pair of lines in fig42 needs a quadratic field
  EXPECT_EQ(run_command_safe("hyp-lines", {{"config", fixture("fig42.json")}, {"budget_degree", 1}}).exit_code,
            kBudgetExceeded);
}

TEST(Commands, VerdictIndependentOfPlotResolution) {
  const json a = run_command("plot", {{"config", fixture("fig42.json")}, {"resolution", 50}}).report["result"];
  const json b = run_command("plot", {{"config", fixture("fig42.json")}, {"resolution", 300}}).report["result"];
  EXPECT_EQ(a["found"], b["found"]);
  EXPECT_EQ(a["paths"], 7);
  EXPECT_EQ(b["paths"], 7);
}

TEST(Plot, PathsClassesAndDeterminism) {
  PlotOptions opt;
  opt.resolution = 100;
  PlotResult one = render_svg({{"L", PlaneCurve(X), "base"}}, opt);
  EXPECT_EQ(one.paths, 1);
  EXPECT_NE(one.svg.find("class=\"base\""), std::string::npos);
  EXPECT_EQ(one.svg, render_svg({{"L", PlaneCurve(X), "base"}}, opt).svg);
  PlotResult two = render_svg({{"L", PlaneCurve(X), "base"}, {"C", PlaneCurve(Y * Z - X * X), "found"}}, opt);
  EXPECT_EQ(two.paths, 2);
  EXPECT_NE(two.svg.find("class=\"found\""), std::string::npos);
}

TEST(Plot, WarningsAndErrors) {
  PlotOptions opt;
  PlotResult r = render_svg({{"E", PlaneCurve(X * X + Y * Y + Z * Z), "base"}}, opt);
  EXPECT_EQ(r.paths, 0);
  EXPECT_EQ(r.warnings.size(), 1u);
  opt.viewport = {1, 1, 0, 2};
  EXPECT_THROW(render_svg({{"L", PlaneCurve(X), "base"}}, opt), InputError);
  opt.viewport = {-1, 1, -1, 1};
  opt.resolution = 4096;
  EXPECT_THROW(render_svg({{"L", PlaneCurve(X), "base"}}, opt), InputError);
}
