#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rotsurf/closed_form.hpp"
#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/surface.hpp"

using namespace rotsurf;

namespace {

SurfaceSpec spec_for(const char* curve, RotationPair pair, bool restricted = true) {
  return SurfaceSpec::make(pair, builtin_curve(curve), restricted);
}

double frame_residual(const Frame& f) {
  double r = 0.0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const double expected = a == b ? f.eps[a] : 0.0;
      r = std::max(r, std::abs(inner(f.e[a], f.e[b]) - expected));
    }
  return r;
}

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("identity rotation leaves the curve unchanged") {
    const auto zero = ScalarFunction::constant(0.0);
    const SurfaceSpec spec = SurfaceSpec::make(RotationPair::Pair14, builtin_curve("ex1"), false, zero, zero);
    for (double s : {-1.0, 0.0, 0.4}) CHECK(surface_point(spec, 0.9, s) == builtin_curve("ex1").point(s));
  }

  TEST_CASE("reduced forms") {
    const SurfaceSpec ex1 = spec_for("ex1", RotationPair::Pair14);
    const double t = 0.6, s = 0.9;
    const Vec4 expected{(s + std::sinh(s)) * std::cosh(t), (s + std::cosh(s)) * std::sinh(t),
                        (s + std::sinh(s)) * std::sinh(t), (s + std::cosh(s)) * std::cosh(t)};
    CHECK(oracle::rel(surface_point(ex1, t, s), expected) <= 1e-14);
    CHECK(oracle::rel(reduced_surface_point(ex1, t, s), expected) <= 1e-14);

    const auto zero = ScalarFunction::constant(0.0);
    const auto half_pi = ScalarFunction::constant(std::numbers::pi / 2);
    const SurfaceSpec s56 = SurfaceSpec::make(RotationPair::Pair56, curve_from_expressions("0, 1, 0, 0"),
                                              true, half_pi, ScalarFunction::parse("3*t", "t"));
    CHECK(oracle::rel(surface_point(s56, 0.4, 0.0), Vec4(1, 0, 0, 0)) <= 1e-15);
  }

  TEST_CASE("property: matrix product equals the reduced display") {
    oracle::Gen gen(501);
    const struct {
      const char* curve;
      RotationPair pair;
    } cases[] = {{"ex1", RotationPair::Pair14}, {"cosh14", RotationPair::Pair14},
                 {"ex2", RotationPair::Pair23}, {"cosh56", RotationPair::Pair56},
                 {"ex3", RotationPair::Pair56}};
    for (const auto& c : cases) {
      const SurfaceSpec spec = SurfaceSpec::make(c.pair, builtin_curve(c.curve), true,
                                                 ScalarFunction::parse("t + t^2/2", "t"),
                                                 ScalarFunction::parse("sin(t)", "t"));
      for (int n = 0; n < 50; ++n) {
        const double t = gen.uniform(-1.5, 1.5), s = gen.uniform(-2, 2);
        CHECK(oracle::rel(surface_point(spec, t, s), reduced_surface_point(spec, t, s)) <= 1e-12);
      }
    }
  }

  TEST_CASE("restriction is checked") {
    CHECK_THROWS_AS(spec_for("ex2", RotationPair::Pair14), PreconditionError);
    CHECK_THROWS_AS(spec_for("ex1", RotationPair::Pair56), PreconditionError);
    CHECK_NOTHROW(spec_for("ex2", RotationPair::Pair14, false));
    CHECK(kept_components(RotationPair::Pair56) == std::array<std::size_t, 2>{1, 3});
  }

  TEST_CASE("constant data has vanishing jets") {
    const auto c = ScalarFunction::constant(0.3);
    const SurfaceSpec spec =
        SurfaceSpec::make(RotationPair::Pair23, curve_from_expressions("1, 2, 3, 4"), false, c, c);
    const SurfaceJets j = surface_jets(spec, 0.5, 0.5);
    for (const Vec4& v : {j.St, j.Ss, j.Stt, j.Sss, j.Sts}) CHECK(v == Vec4{});
  }

  TEST_CASE("property: surface jets match finite differences") {
    oracle::Gen gen(502);
    for (auto name : kBuiltinCurves)
      for (RotationPair pair : kAllPairs) {
        const SurfaceSpec spec = SurfaceSpec::make(pair, builtin_curve(name), false,
                                                   ScalarFunction::parse("t^2 - t", "t"),
                                                   ScalarFunction::parse("cos(t)", "t"));
        for (int n = 0; n < 5; ++n) {
          const double t = gen.uniform(-1.5, 1.5), s = gen.uniform(-2, 2);
          const SurfaceJets j = surface_jets(spec, t, s);
          const oracle::Jets o = oracle::central_jets(spec, t, s, 1e-5);
          CHECK(oracle::rel(j.St, o.St) <= 1e-6);
          CHECK(oracle::rel(j.Ss, o.Ss) <= 1e-6);
          CHECK(oracle::rel(j.Stt, o.Stt) <= 1e-6);
          CHECK(oracle::rel(j.Sss, o.Sss) <= 1e-6);
          CHECK(oracle::rel(j.Sts, o.Sts) <= 1e-6);
        }
      }
  }

  TEST_CASE("induced metric") {
    const SurfaceSpec lin = spec_for("lin14", RotationPair::Pair14);
    for (double s : {-1.5, 0.5, 2.0}) {
      const InducedMetric m = induced_metric(lin, 0.3, s);
      CHECK(m.E == doctest::Approx(-3 * s * s).epsilon(1e-14));
      CHECK(std::abs(m.F) <= 1e-14);
      CHECK(m.G == doctest::Approx(3.0).epsilon(1e-14));
      CHECK(m.sign_t == CausalCharacter::TimeLike);
      CHECK(m.sign_s == CausalCharacter::SpaceLike);
    }
    const SurfaceSpec flat = SurfaceSpec::make(RotationPair::Pair14, curve_from_expressions("s, 0, 0, s"));
    for (double s : {-1.0, 0.5, 2.0}) CHECK_THROWS_AS(induced_metric(flat, 0.2, s), DegenerateMetric);
  }

  TEST_CASE("moving frame") {
    // f4^2 > f1^2 and f4'^2 > f1'^2 on cosh14 for s in [1, 2]: e1 is time-like.
    const SurfaceSpec spec = spec_for("cosh14", RotationPair::Pair14);
    const Frame f = moving_frame(spec, 0.4, 1.3);
    CHECK(f.eps[0] == -1);
    CHECK(f.eps[1] == 1);
    CHECK(frame_residual(f) <= 1e-9);
    const SurfaceJets j = surface_jets(spec, 0.4, 1.3);
    CHECK(oracle::rel(f.e[0], j.St / norm(j.St)) <= 1e-14);
    CHECK(oracle::rel(f.e[1], j.Ss / norm(j.Ss)) <= 1e-14);

    const SurfaceSpec lin = spec_for("lin14", RotationPair::Pair14);
    CHECK_NOTHROW(moving_frame(lin, 0.2, 0.3));
    CHECK_THROWS_AS(moving_frame(lin, 0.2, 0.0), DegenerateFrame);
  }

  TEST_CASE("property: frames are pseudo-orthonormal and normal to the surface") {
    oracle::Gen gen(503);
    for (auto name : kBuiltinCurves)
      for (RotationPair pair : kAllPairs)
        for (bool restricted : {true, false}) {
          SurfaceSpec spec;
          try {
            spec = spec_for(std::string(name).c_str(), pair, restricted);
          } catch (const PreconditionError&) {
            continue;
          }
          for (int n = 0; n < 10; ++n) {
            const double t = gen.uniform(-1.5, 1.5), s = gen.uniform(-2, 2);
            Frame f;
            try {
              f = moving_frame(spec, t, s);
            } catch (const Error&) {
              continue;
            }
            const SurfaceJets j = surface_jets(spec, t, s);
            CHECK(frame_residual(f) <= 1e-9);
            for (int a = 2; a < 4; ++a) {
              CHECK(std::abs(inner(f.e[a], j.St)) <= 1e-9 * std::max(1.0, j.St.max_abs()));
              CHECK(std::abs(inner(f.e[a], j.Ss)) <= 1e-9 * std::max(1.0, j.Ss.max_abs()));
            }
            const Frame o = oracle_frame(j);
            CHECK(frame_residual(o) <= 1e-9);
          }
        }
  }

  TEST_CASE("closed-form regime") {
    InducedMetric m;
    m.E = -1.0;
    m.G = 1.0;
    m.sign_t = CausalCharacter::TimeLike;
    m.sign_s = CausalCharacter::SpaceLike;
    CHECK(in_closed_form_regime(RotationPair::Pair14, m));
    CHECK(in_closed_form_regime(RotationPair::Pair56, m));
    CHECK_FALSE(in_closed_form_regime(RotationPair::Pair23, m));
    // ex1 has <S_s, S_s> < 0 at s = 1: -(1 + cosh 1)^2 + (1 + sinh 1)^2 < 0.
    const CurvatureReport r = curvature_report(spec_for("ex1", RotationPair::Pair14), 0.2, 1.0);
    CHECK(r.metric.sign_s == CausalCharacter::TimeLike);
    CHECK_FALSE(r.in_regime);
    CHECK_FALSE(r.findings.empty());
  }

  TEST_CASE("isometry composes on the left") {
    const SurfaceSpec spec = spec_for("cosh14", RotationPair::Pair14);
    const Mat4 M = two_param_matrix(RotationPair::Pair14, 0.3, -0.2);
    const SurfaceSpec moved = spec.with_isometry(M);
    CHECK(oracle::rel(surface_point(moved, 0.1, 1.2), M * surface_point(spec, 0.1, 1.2)) <= 1e-15);
    const SurfaceSpec twice = moved.with_isometry(M);
    CHECK(oracle::rel(surface_point(twice, 0.1, 1.2), M * (M * surface_point(spec, 0.1, 1.2))) <= 1e-14);
  }

  TEST_CASE("printed frames") {
    const SurfaceSpec spec = spec_for("ex2", RotationPair::Pair23);
    const ClosedInputs in = closed_inputs(spec, 0.3, 0.8);
    const auto printed = printed_frame(RotationPair::Pair23, in, NormalChoice::AsPrinted);
    const auto corrected = printed_frame(RotationPair::Pair23, in, NormalChoice::Corrected);
    const SurfaceJets j = surface_jets(spec, 0.3, 0.8);
    // The displayed Pair23 normals are not normal; the corrected ones are.
    CHECK(std::abs(inner(printed[2], j.St)) > 1e-3);
    CHECK(std::abs(inner(corrected[2], j.St)) <= 1e-12);
    CHECK(std::abs(inner(corrected[3], j.St)) <= 1e-12);
    CHECK(printed_signs(RotationPair::Pair56) == std::array<int, 4>{-1, 1, 1, -1});
    CHECK_THROWS_AS(closed_inputs(spec_for("ex2", RotationPair::Pair23, false), 0.3, 0.8),
                    PreconditionError);
  }
}
