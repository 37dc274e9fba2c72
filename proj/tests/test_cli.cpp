#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"

#include "drinfeld/checks.hpp"
#include "drinfeld/commands.hpp"
#include "drinfeld/parse.hpp"

using namespace drinfeld;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + "_f3.json"; }

RunConfig config(const std::string& cmd, const std::string& curve, int prec = 20) {
  RunConfig c;
  c.command = cmd;
  c.curve_path = fixture_path(curve);
  c.prec = prec;
  c.out = "json";
  return c;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("curve files") {
  for (const char* name : {"rational", "elliptic", "inert", "genus2"}) {
    CurveSpec s = load_curve_spec(fixture_path(name));
    CurveSpec b = builtin_fixture(name);
    CHECK(s.f == b.f);
    CHECK(s.kind == b.kind);
    CurveSpec back = curve_spec_from_json(curve_spec_to_json(s));
    CHECK(back.f == s.f);
    CHECK(back.h == s.h);
    CHECK(back.m == s.m);
  }
  // digit tuples for extension-field coefficients
  CurveSpec e = curve_spec_from_json(json::parse(R"({"p": 3, "m": 2, "model": {"kind": "quadratic", "f": [[1, 1], 1, 0, 1]}})"));
  CHECK(e.f[0] == 4);
  CHECK_THROWS_AS(curve_spec_from_json(json::parse(R"({"p": 3})")), Error);
  CHECK_THROWS_AS(curve_spec_from_json(json::parse(R"({"p": 3, "m": 1, "model": {"kind": "cubic", "f": [1]}})")), Error);
  CHECK_THROWS_AS(load_curve_spec("/nonexistent/curve.json"), Error);
}

TEST_CASE("element literals") {
  auto E = CurveModel::create(builtin_fixture("elliptic"));
  FFElement x = FFElement::x(*E), y = FFElement::y(*E);
  CHECK(parse_element(*E, "x") == x);
  CHECK(parse_element(*E, "T") == x);
  CHECK(parse_element(*E, "2 + y") == y + FFElement::constant(*E, 2));
  CHECK(parse_element(*E, "x^2 y - 4") == x * x * y - FFElement::one(*E));
  CHECK(parse_element(*E, "(2+y)/x") == (y + FFElement::constant(*E, 2)) / x);
  CHECK(parse_element(*E, "-x*(x+1)") == -(x * (x + FFElement::one(*E))));
  CHECK(((y + FFElement::constant(*E, 2)) / x).to_string() == "(2 + y)/x");
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(0, 2);
  for (int t = 0; t < 30; ++t) {
    std::vector<long long> u, v, w{1};
    for (int i = 0; i < 3; ++i) u.push_back(c(rng)), v.push_back(c(rng)), w.push_back(c(rng));
    FFElement a(*E, Poly::from_ints(E->base_field(), u), Poly::from_ints(E->base_field(), v),
                Poly::from_ints(E->base_field(), w).monic());
    CHECK(parse_element(*E, a.to_string()) == a);
  }
  auto gens = parse_generators(*E, "(x, 2 + y)");
  REQUIRE(gens.size() == 2);
  CHECK(parse_ideal(*E, "x, 2+y") == parse_ideal(*E, "(x, 2 + y)"));
  CHECK_THROWS_AS(parse_element(*E, "x +"), Error);
  CHECK_THROWS_AS(parse_element(*E, "z"), Error);
  CHECK_THROWS_AS(parse_element(*E, "1/0"), Error);
  auto R = CurveModel::create(builtin_fixture("rational"));
  CHECK_THROWS_AS(parse_element(*R, "y"), Error);
  try {
    parse_modulus(*R, "0");
    FAIL("zero modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroModulus);
  }
}

TEST_CASE("classgroup summaries") {
  auto r = run_command(config("classgroup", "elliptic"));
  CHECK(r.exit_code == ExitCode::Pass);
  CHECK(r.report["summary"][0] == "Cl(A) ≅ Z/4, h=4, h¹=4");
  CHECK(r.report["results"]["h"] == 4);
  auto t = run_command(config("classgroup", "rational"));
  CHECK(t.report["summary"][0] == "trivial, h=1");
  auto i = run_command(config("classgroup", "inert"));
  CHECK(i.report["results"]["narrow_h"] == 32);
  CHECK(render_text(r.report).find("h=4") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  auto missing = config("classgroup", "elliptic");
  missing.curve_path = "/nonexistent.json";
  CHECK(run_command(missing).exit_code == ExitCode::InputError);
  auto bad = config("classgroup", "elliptic");
  bad.curve_path = temp_file("drinfeld_bad_curve.json", "{ not json");
  auto r = run_command(bad);
  CHECK(r.exit_code == ExitCode::InputError);
  CHECK(r.report.contains("error"));
  auto singular = config("classgroup", "elliptic");
  singular.curve_path = temp_file("drinfeld_singular.json",
                                  R"({"p": 3, "m": 1, "model": {"kind": "quadratic", "f": [0, 0, 1]}})");
  CHECK(run_command(singular).exit_code == ExitCode::InputError);
  auto unknown = config("frobnicate", "elliptic");
  CHECK(run_command(unknown).exit_code == ExitCode::InputError);
  auto ideal = config("star", "elliptic");
  ideal.ideal = "(x,";
  CHECK(run_command(ideal).exit_code == ExitCode::InputError);
  auto low = config("jtable", "elliptic", 0);
  CHECK(run_command(low).exit_code == ExitCode::InputError);
}

TEST_CASE("precision increase keeps certified digits") {
  for (const char* cmd : {"jtable", "drinfeld", "torsion"}) {
    auto lo = run_command(config(cmd, "elliptic", 20));
    auto hi = run_command(config(cmd, "elliptic", 40));
    REQUIRE(lo.exit_code == ExitCode::Pass);
    REQUIRE(hi.exit_code == ExitCode::Pass);
    SeriesComparison c = compare_report_series(lo.report, hi.report);
    CHECK_MESSAGE(c.ok, cmd << ": " << c.first_mismatch);
    CHECK(c.compared > 0);
  }
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  auto a = run_command(config("jtable", "elliptic"));
  auto b = run_command(config("jtable", "elliptic"));
  CHECK(a.report == b.report);
  CHECK(json::parse(a.report.dump()) == a.report);
  CHECK_FALSE(a.report.contains("timing"));
  auto timed = config("jtable", "elliptic");
  timed.timing = true;
  CHECK(run_command(timed).report.contains("timing"));
}

TEST_CASE("series serialization") {
  const GaloisField& F9 = GaloisField::get(3, 2);
  LaurentSeries s(F9, -1, {1, 3, 4}, 5);
  json j = series_json(s);
  CHECK(j["start"] == -1);
  CHECK(j["prec"] == 5);
  CHECK(j["coeffs"][1] == json::array({0, 1}));
  LaurentSeries t(GaloisField::get(3, 1), 0, {2, 1}, 4);
  CHECK(series_json(t)["coeffs"] == json::array({2, 1, 0, 0}));
}

TEST_CASE("verify command") {
  RunConfig c;
  c.command = "verify";
  c.suite = "ore";
  c.out = "json";
  auto r = run_command(c);
  CHECK(r.exit_code == ExitCode::Pass);
  c.suite = "nonsense";
  CHECK(run_command(c).exit_code == ExitCode::InputError);
}
