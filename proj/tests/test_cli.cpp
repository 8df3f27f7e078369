#include "doctest.h"

#include "cli.hpp"
#include "json_io.hpp"
#include "svg.hpp"

#include "sigma/error.hpp"

#include <fstream>
#include <sstream>

using namespace sigma;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SIGMA_TEST_DATA) + "/" + name; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

const std::vector<std::vector<std::string>> kCommands{
    {"raag", "--graph", data("c4.json"), "--n", "2"},
    {"raag", "--graph", data("octahedron.txt"), "--n", "3"},
    {"raag", "--data", data("rp2.json"), "--n", "2"},
    {"mfpr", "--data", data("tri.json"), "--table", "--n", "1"},
    {"mfpr", "--data", data("brown.json")},
    {"mfpr", "--random", "--seed", "11", "--k", "3", "--points", "4", "--table"},
    {"tree-sigma", "--data", data("hnn_summary.json"), "--n", "2"},
    {"tree-sigma", "--data", data("hnn_summary.json"), "--format", "csv"},
    {"busemann", "--data", data("busemann_h2.json")},
    {"busemann", "--data", data("busemann_tree.json")},
    {"tits", "--data", data("tits.json")},
    {"character", "--data", data("bs3.json")},
    {"character", "--data", data("sphere.json")},
    {"character", "--data", data("join.json")},
    {"shift", "--data", data("shift.json")},
    {"cocompact", "--data", data("lattice.json")},
    {"cocompact", "--data", data("free_cyclic.json")},
    {"audit", "lemma13.5", "--data", data("lemma.json"), "--seed", "3"},
    {"audit", "angle", "--data", data("angle.json")},
    {"audit", "sl2z", "--data", data("sl2z.json")},
    {"verify", "--suite", "raag", "--seed", "5"},
};

}  // namespace

TEST_CASE("raag membership") {
  const auto r = run({"raag", "--graph", data("c4.json"), "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.report()["membership"] == "Out");
  CHECK(run({"raag", "--graph", data("c4.json"), "--n", "1"}).report()["membership"] == "In");
  const auto o = run({"raag", "--graph", data("octahedron.txt"), "--n", "2"}).report();
  CHECK(o["membership"] == "In");
  CHECK(o["flag_complex"] == json::array({6, 12, 8}));
  const auto p = run({"raag", "--data", data("rp2.json"), "--n", "2"}).report();
  CHECK(p["homology"][1]["torsion"] == json::array({"2"}));
  CHECK(p["verdict"]["overall"] == "No");
}

TEST_CASE("mfpr table") {
  const auto r = run({"mfpr", "--data", data("tri.json"), "--table"});
  REQUIRE(r.code == 0);
  const auto j = r.report();
  const auto d = io::mfpr_from(j["data"]);
  const auto t = tree_sigma::sigma_table_mfpr(d);
  REQUIRE(j["table"]["ranges"].size() == t.ranges.size());
  for (std::size_t i = 0; i < t.ranges.size(); ++i) {
    CHECK(j["table"]["ranges"][i]["value"] == tree_sigma::to_string(t.ranges[i].value));
    CHECK(j["table"]["ranges"][i]["from"] == t.ranges[i].lo);
  }
  CHECK(j["lengths"]["m_zero"] == 2);
  CHECK(j["lengths"]["m_minus_chi"] == "inf");
  const auto b = run({"mfpr", "--data", data("brown.json")}).report();
  CHECK(b["brown"]["consistent"] == true);
  CHECK(b["brown"]["uncovered"] == json::array({json::array({1, 0, 0})}));
  CHECK(run({"mfpr", "--data", data("tri.json"), "--n", "3"}).code == 2);
}

TEST_CASE("tree-sigma formats") {
  const auto j = run({"tree-sigma", "--data", data("hnn_summary.json"), "--n", "2"}).report();
  CHECK(j["value"] == "Singleton");
  CHECK(j["table"]["ranges"].size() == 3);
  const auto csv = run({"tree-sigma", "--data", data("hnn_summary.json"), "--format", "csv"});
  CHECK(csv.out == "# seed 1\nfrom,to,value\n0,1,WholeBoundary\n2,2,Singleton\n3,3,Empty\n");
}

TEST_CASE("verify reports per-property counts") {
  const auto r = run({"verify", "--suite", "busemann", "--seed", "7", "--cases", "20"});
  CHECK(r.code == 0);
  const auto j = r.report();
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == true);
  for (const auto& p : j["suites"][0]["properties"]) {
    CHECK(p["passed"] == p["total"]);
    CHECK(p["total"].get<int>() > 0);
  }
}

TEST_CASE("input errors exit 2 with a diagnostic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"raag", "--graph", "/nonexistent"}, {"frobnicate"}, {"mfpr"},
        {"audit", "bogus", "--data", data("sl2z.json")}, {"busemann", "--data", data("tri.json")},
        {"verify", "--suite", "nope"}, {"tree-sigma", "--data", data("hnn_summary.json"), "--format", "xml"}}) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const auto d = json::parse(r.err);
    CHECK(d.contains("error"));
    CHECK(d.contains("message"));
  }
  const auto z = run({"character", "--data", data("sphere.json"), "--space", "E0"});
  CHECK(z.code == 0);  // --space is ignored by sphere data
}

TEST_CASE("every report carries the seed and re-parses") {
  for (const auto& args : kCommands) {
    const auto r = run(args);
    INFO(args[0]);
    REQUIRE(r.code == 0);
    if (r.out.front() == '#') continue;  // csv
    const auto j = r.report();
    CHECK(j.contains("seed"));
    CHECK(j["command"] == args[0]);
    CHECK(json::parse(j.dump()) == j);
  }
  // decoded values round trip through their encoders
  const auto m = run({"mfpr", "--random", "--seed", "11", "--k", "3", "--points", "4"}).report();
  CHECK(io::to_json(io::mfpr_from(m["data"])) == m["data"]);
  CHECK(io::to_json(io::summary_from(m["summary"])) == m["summary"]);
  const auto b = run({"busemann", "--data", data("busemann_tree.json")}).report();
  const auto space = io::space_from(b["space"]);
  CHECK(io::to_json(space) == b["space"]);
  CHECK(io::to_json(io::boundary_from(space, b["ray"]["end"])) == b["ray"]["end"]);
  for (const auto& v : b["values"]) CHECK(io::to_json(io::point_from(space, v["point"])) == v["point"]);
  const auto s = run({"character", "--data", data("sphere.json")}).report();
  CHECK(io::to_json(io::polyhedral_from(s["sphere"]["set"])) == s["sphere"]["set"]);
}

TEST_CASE("byte-identical reruns") {
  for (const auto& args : kCommands) CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "test_cli_out.json";
  const auto r = run({"tree-sigma", "--data", data("hnn_summary.json"), "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(json::parse(f)["command"] == "tree-sigma");
}

TEST_CASE("sphere pictures") {
  using sphere::PolyhedralSet;
  using sphere::SpherePoint;
  const auto pt = [](std::vector<long long> v) { return SpherePoint::from_integers(v); };

  // S^0 with both points removed: two open dots.
  const auto s0 = io::sphere_svg(PolyhedralSet::complement_of(1, {pt({1}), pt({-1})}));
  CHECK(count(s0, "r=\"5\"") == 2);
  CHECK(count(s0, "fill=\"white\" stroke") == 2);
  CHECK(count(io::sphere_svg(PolyhedralSet::whole(1)), "fill=\"black\" stroke") == 2);

  // One hemisphere on S^1: a single half-circle arc from (0,-1) to (0,1).
  const auto half = io::sphere_svg(PolyhedralSet(2, {{sphere::OpenHemisphere{pt({1, 0})}}}));
  CHECK(count(half, "<path") == 1);
  CHECK(half.find("M 120.000 220.000 A 100.000 100.000 0 0 0 120.000 20.000") != std::string::npos);
  // A quarter: two hemispheres, one arc.
  const auto quarter =
      io::sphere_svg(PolyhedralSet(2, {{sphere::OpenHemisphere{pt({1, 0})}, sphere::OpenHemisphere{pt({0, 1})}}}));
  CHECK(count(quarter, "<path") == 1);
  CHECK(quarter.find("M 220.000 120.000 A 100.000 100.000 0 0 0 120.000 20.000") != std::string::npos);
  CHECK(count(io::sphere_svg(PolyhedralSet::empty(2)), "<path") == 0);

  // Three 120-degree points removed from S^1: three dots.
  const auto tri = io::sphere_svg(PolyhedralSet::complement_of(2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}));
  CHECK(count(tri, "r=\"5\"") == 3);
  CHECK(count(io::points_svg(2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}), "r=\"5\"") == 3);

  // S^2: one boundary circle per hemisphere.
  const auto s2 = io::sphere_svg(PolyhedralSet(3, {{sphere::OpenHemisphere{pt({0, 0, 1})}}, {sphere::OpenHemisphere{pt({1, 0, 0})}}}));
  CHECK(count(s2, "<line") == 2 * 180);
  CHECK(s2 == io::sphere_svg(PolyhedralSet(3, {{sphere::OpenHemisphere{pt({0, 0, 1})}}, {sphere::OpenHemisphere{pt({1, 0, 0})}}})));

  try {
    io::sphere_svg(PolyhedralSet::whole(4));
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
  CHECK_THROWS_AS(io::points_svg(4, {}), Error);

  // --svg from the CLI
  const auto r = run({"mfpr", "--data", data("tri.json"), "--svg", "test_cli_tri.svg"});
  CHECK(r.code == 0);
  std::ifstream f("test_cli_tri.svg");
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == tri);
}

TEST_CASE("json numbers") {
  CHECK(io::rational_from(json("6/-4")) == Rational(-3, 2));
  CHECK(io::rational_from(json(0.5)) == Rational(1, 2));
  CHECK(io::to_json(Rational(7, 3)) == "7/3");
  CHECK(io::to_json(Rational(-4)) == -4);
  CHECK(io::real_json(0.1 + 0.2) == 0.3);
  CHECK(io::real_json(-0.0).dump() == "0.0");
  CHECK(io::real_json(cat0::kInfinity) == "inf");
  CHECK(io::extnat_from(json("inf")).is_infinite());
  CHECK(io::extnat_from(json(3)) == sphere::ExtNat::finite(3));
  CHECK_THROWS_AS(io::extnat_from(json(-1)), Error);
  CHECK_THROWS_AS(io::space_from(json("E0")), Error);
  CHECK_THROWS_AS(io::space_from(json({{"type", "hnn"}})), Error);
}
