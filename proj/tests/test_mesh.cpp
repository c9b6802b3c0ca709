#include <doctest.h>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/mesh.hpp"

using namespace rotsurf;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

SurfaceSpec cosh14() { return SurfaceSpec::make(RotationPair::Pair14, builtin_curve("cosh14")); }

GridSpec grid(int nt, int ns, double s_min = 1.0, double s_max = 2.0) { return {0.0, 1.0, s_min, s_max, nt, ns}; }

template <class Fn>
std::string capture(Fn fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("grid parsing and validation") {
    CHECK(parse_grid_size("3x5") == std::pair{3, 5});
    CHECK(parse_range("-1.5:2") == std::pair{-1.5, 2.0});
    CHECK_THROWS_AS(parse_grid_size("3by5"), ParseError);
    CHECK_THROWS_AS(parse_range("1"), ParseError);
    CHECK_THROWS_AS(parse_range("a:2"), ParseError);
    CHECK_THROWS_AS(grid(1, 3).validate(), PreconditionError);
    CHECK_THROWS_AS((GridSpec{1.0, 0.0, 0.0, 1.0, 2, 2}.validate()), PreconditionError);
    CHECK(grid(3, 3).t_at(2) == 1.0);
    CHECK(grid(3, 3).s_at(1) == 1.5);
  }

  TEST_CASE("2x2 grid samples the corners") {
    const MeshGrid m = sample_grid(cosh14(), grid(2, 2), false);
    REQUIRE(m.vertices.size() == 4);
    CHECK(m.at(0, 0).t == 0.0);
    CHECK(m.at(0, 0).s == 1.0);
    CHECK(m.at(1, 1).t == 1.0);
    CHECK(m.at(1, 1).s == 2.0);
    CHECK(m.at(1, 0).position == surface_point(cosh14(), 1.0, 1.0));
    CHECK_FALSE(m.at(0, 1).K.has_value());
  }

  TEST_CASE("flat grid has zero curvature, and s = 0 is marked degenerate") {
    const SurfaceSpec lin = SurfaceSpec::make(RotationPair::Pair14, builtin_curve("lin14"));
    const MeshGrid m = sample_grid(lin, grid(4, 5, -1.0, 1.0), true);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 5; ++k) {
        const MeshVertex& v = m.at(i, k);
        if (k == 2) {
          CHECK(v.degenerate);
          CHECK_FALSE(v.K.has_value());
          CHECK(v.position.is_finite());
        } else {
          CHECK_FALSE(v.degenerate);
          REQUIRE(v.K.has_value());
          CHECK(std::abs(*v.K) <= 1e-9);
          REQUIRE(v.H_norm_sq.has_value());
          CHECK(std::abs(*v.H_norm_sq) <= 1e-9);
        }
      }
  }

  TEST_CASE("threaded sampling matches serial sampling") {
    const MeshGrid a = sample_grid(cosh14(), grid(7, 5), true, 1);
    const MeshGrid b = sample_grid(cosh14(), grid(7, 5), true, 4);
    CHECK(capture([&](std::ostream& o) { export_csv(a, o); }) ==
          capture([&](std::ostream& o) { export_csv(b, o); }));
  }

  TEST_CASE("sampling outside the curve domain") {
    const SurfaceSpec spec = SurfaceSpec::make(
        RotationPair::Pair14, curve_from_expressions("1/s, 0, 0, s", {}, Interval{0.5, 3.0}));
    CHECK_NOTHROW(sample_grid(spec, grid(2, 2), false));
    CHECK_THROWS_AS(sample_grid(spec, grid(2, 2, 0.1, 1.0), false), DomainViolation);
  }

  TEST_CASE("csv export") {
    const MeshGrid m = sample_grid(cosh14(), grid(2, 2), false);
    const auto rows = lines(capture([&](std::ostream& o) { export_csv(m, o); }));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "t,s,x1,x2,x3,x4,K,H2");
    const Vec4 p = m.at(0, 0).position;
    CHECK(rows[1] == "0,1," + format_double(p[0]) + "," + format_double(p[1]) + "," + format_double(p[2]) +
                         "," + format_double(p[3]) + ",,");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-2.0) == "-2");
  }

  TEST_CASE("obj export") {
    const MeshGrid m = sample_grid(cosh14(), grid(3, 3), false);
    const auto rows = lines(capture([&](std::ostream& o) { export_obj(m, o, {1, 3, 4}); }));
    int v = 0, f = 0;
    for (const auto& r : rows) {
      v += r.rfind("v ", 0) == 0;
      f += r.rfind("f ", 0) == 0;
    }
    CHECK(v == 9);
    CHECK(f == 4);
    const Vec4 p = m.at(0, 0).position;
    CHECK(rows[0] == "v " + format_double(p[0]) + " " + format_double(p[2]) + " " + format_double(p[3]));
    CHECK(rows[9] == "f 1 2 5 4");
    CHECK_THROWS_AS(export_obj(m, std::cout, {1, 1, 4}), BadProjection);
    CHECK_THROWS_AS(parse_projection("1,2"), BadProjection);
    CHECK_THROWS_AS(parse_projection("0,2,3"), BadProjection);
    CHECK(parse_projection("2,3,4") == Projection{2, 3, 4});
  }

  TEST_CASE("obj skips faces touching degenerate vertices") {
    const SurfaceSpec lin = SurfaceSpec::make(RotationPair::Pair14, builtin_curve("lin14"));
    const MeshGrid m = sample_grid(lin, grid(3, 3, -1.0, 1.0), true);
    const auto rows = lines(capture([&](std::ostream& o) { export_obj(m, o); }));
    int v = 0, f = 0;
    for (const auto& r : rows) {
      v += r.rfind("v ", 0) == 0;
      f += r.rfind("f ", 0) == 0;
    }
    CHECK(v == 9);
    CHECK(f == 0);
  }

  TEST_CASE("json round trip is bit-identical") {
    const MeshGrid m = sample_grid(cosh14(), grid(4, 3), true);
    const auto doc = nlohmann::json::parse(capture([&](std::ostream& o) { export_json(m, o); }));
    REQUIRE(doc["vertices"].size() == m.vertices.size());
    CHECK(doc["provenance"]["grid"]["nt"] == 4);
    CHECK(doc["provenance"]["with_curvature"] == true);
    for (std::size_t n = 0; n < m.vertices.size(); ++n) {
      const auto& jv = doc["vertices"][n];
      const MeshVertex& v = m.vertices[n];
      CHECK(jv["t"].get<double>() == v.t);
      CHECK(jv["s"].get<double>() == v.s);
      for (int c = 0; c < 4; ++c) CHECK(jv["x" + std::to_string(c + 1)].get<double>() == v.position[c]);
      CHECK(jv["K"].get<double>() == *v.K);
      CHECK(jv["H2"].get<double>() == *v.H_norm_sq);
    }
  }

  TEST_CASE("csv output is deterministic") {
    const auto once = [] {
      return capture([](std::ostream& o) { export_csv(sample_grid(cosh14(), grid(5, 4), true, 3), o); });
    };
    CHECK(once() == once());
  }

  TEST_CASE("formats") {
    CHECK(parse_format("json") == ExportFormat::Json);
    CHECK_FALSE(parse_format("ply").has_value());
  }
}
