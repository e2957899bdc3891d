#include <cstdio>
#include <fstream>

#include "actions.hpp"
#include "charts.hpp"
#include "doctest.h"
#include "wick/error.hpp"
#include "wick/expression.hpp"
#include "wick/io.hpp"

using namespace wick;
using namespace wick::test;

namespace {

std::string data(const std::string& rel) { return std::string(WICK_DATA_DIR) + "/" + rel; }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("chart files") {
  const Chart fsv = load_chart(data("charts/fs_v.json"));
  CHECK(fsv.dimension() == 1);
  CHECK(fsv.order() == 0);
  CHECK(fsv.has_v());
  CHECK(fsv.u(0)[0] == rf("w1/(1+z1*w1)"));
  CHECK(fsv.v(0)[0] == rf("z1/(1+z1*w1)"));

  const Chart corr = load_chart(data("charts/flat_corrected.json"));
  CHECK(corr.order() == 1);
  CHECK(karabegov_form(corr) == karabegov_form(flat_corrected(1)));

  const Chart gap = chart_from_json(Json::parse(R"({"dimension": 1, "order": 5, "u": [["w1"]],
      "corrections": [{"order": 3, "u": ["w1^2"], "v": ["2*z1*w1"]}], "v": [["z1"]]})"));
  CHECK(gap.order() == 5);
  CHECK(gap.u(1)[0].is_zero());
  CHECK(gap.u(3)[0] == rf("w1^2"));
  CHECK(gap.v(3)[0] == rf("2*z1*w1"));
  CHECK(gap.v(2)[0].is_zero());
  CHECK(validate_chart(gap).ok());

  for (const char* name : {"flat", "flat2", "fs", "fs_v", "flat_v", "hyperbolic", "flat_corrected",
                           "flat_rotation_corrected", "cp2"})
    CHECK_MESSAGE(validate_chart(load_chart(data(std::string("charts/") + name + ".json"))).ok(), name);
}

TEST_CASE("chart file errors name the location") {
  CHECK(error_of([] { chart_from_json(Json::parse(R"({"u": [["w1"]]})")); }).find("dimension") != std::string::npos);
  CHECK(error_of([] { chart_from_json(Json::parse(R"({"dimension": 1})")); }).find("\"u\"") != std::string::npos);
  const std::string bad = error_of([] { chart_from_json(Json::parse(R"({"dimension": 1, "u": [["w1 +* 2"]]})")); });
  CHECK(bad.find("chart.u[0][0]") == 0);
  CHECK(bad.find("column") != std::string::npos);
  CHECK(error_of([] { chart_from_json(Json::parse(R"({"dimension": 1, "u": [["w2"]]})")); }) != "");
  CHECK(error_of([] { chart_from_json(Json::parse(R"({"dimension": 1, "u": [["v"]]})")); }) != "");

  const std::string path = "wick_io_test_broken.json";
  {
    std::ofstream f(path);
    f << "{\n  \"dimension\": 1,\n  \"u\": [[\"w1\"]\n}\n";
  }
  const std::string err = error_of([&] { load_chart(path); });
  std::remove(path.c_str());
  CHECK(err.find("line 4") != std::string::npos);
  CHECK(error_of([] { load_chart("does/not/exist.json"); }).find("cannot open") == 0);
}

TEST_CASE("field, map and action files") {
  CHECK(load_field(data("fields/rotation.json")) == rotation());
  CHECK(load_field(data("fields/translation.json")) == field1("1", "1"));
  const ChartMap inv = load_map(data("maps/inversion.json"));
  CHECK(inv.pullback(rf("z1*w1")) == rf("1/(z1*w1)"));
  CHECK(error_of([] { map_from_json(Json::parse(R"({"hol": ["2*z1"], "inverse": ["z1"]})")); }) != "");
  CHECK(error_of([] { field_from_json(Json::parse(R"({"hol": ["z1"], "antihol": []})")); }) != "");

  const LieAction act = load_action(data("actions/su2_cp1.json"));
  const LieAction ref = su2();
  CHECK(act.m == 3);
  CHECK(act.structure == ref.structure);
  for (int i = 0; i < 3; ++i) CHECK(act.fields[i] == ref.fields[i]);
  CHECK(load_action(data("actions/translations.json")).structure == translations().structure);

  CHECK(error_of([] { action_from_json(Json::parse(R"({"dim": 2, "fields": [{"hol": ["1"], "antihol": ["1"]}]})")); })
            .find("fields") != std::string::npos);
  CHECK(error_of([] {
          action_from_json(Json::parse(
              R"({"dim": 1, "structure": [[1, 1, 2, "1"]], "fields": [{"hol": ["1"], "antihol": ["1"]}]})"));
        }).find("out of range") != std::string::npos);
  CHECK(error_of([] {
          action_from_json(Json::parse(
              R"({"dim": 1, "structure": [[1, 1, 1, "z1"]], "fields": [{"hol": ["1"], "antihol": ["1"]}]})"));
        }).find("number") != std::string::npos);
}

TEST_CASE("report strings re-parse") {
  const auto mm = momentum_map(fs(2), su2(), 2);
  REQUIRE(mm.j_tau);
  for (const auto& f : *mm.j_tau) {
    const Json j = series_json(f);
    REQUIRE(j.size() == 3);
    for (int s = 0; s <= 2; ++s) CHECK(parse_expression(j[s].get<std::string>(), 1) == f[s]);
  }
  for (const auto& t : *mm.coboundary->tau) {
    const Json j = scalar_series_json(t);
    for (int s = 0; s <= 2; ++s) CHECK(parse_expression(j[s].get<std::string>(), 1) == RationalFunction(t[s]));
  }
  const auto p = StarProduct(fs(3), 3).star(rf("z1^2/(1+z1)"), rf("w1^3"));
  const Json j = series_json(p);
  for (int s = 0; s <= 3; ++s) CHECK(parse_expression(j[s].get<std::string>(), 1) == p[s]);
}
