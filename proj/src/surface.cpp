#include "rotsurf/surface.hpp"

#include <algorithm>
#include <cmath>

#include "rotsurf/closed_form.hpp"
#include "rotsurf/error.hpp"

namespace rotsurf {

std::array<std::size_t, 2> kept_components(RotationPair pair) {
  switch (pair) {
    case RotationPair::Pair14: return {0, 3};
    case RotationPair::Pair23: return {0, 1};
    case RotationPair::Pair56: return {1, 3};
  }
  return {0, 3};
}

ScalarFunction identity_reparam() { return ScalarFunction::parse("t", "t"); }

namespace {

/// Window of the curve domain used to sample the restriction check.
Interval sample_window(const Interval& d) {
  constexpr double kSpan = 16.0;
  if (d.is_bounded()) return d;
  if (std::isfinite(d.lo)) return {d.lo, d.lo + kSpan};
  if (std::isfinite(d.hi)) return {d.hi - kSpan, d.hi};
  return {-kSpan / 2, kSpan / 2};
}

}  // namespace

SurfaceSpec SurfaceSpec::make(RotationPair pair, Curve4 curve, bool restricted,
                              std::optional<ScalarFunction> reparam1,
                              std::optional<ScalarFunction> reparam2) {
  SurfaceSpec spec;
  spec.pair = pair;
  spec.curve = std::move(curve);
  spec.reparam1 = reparam1 ? std::move(*reparam1) : identity_reparam();
  spec.reparam2 = reparam2 ? std::move(*reparam2) : identity_reparam();
  spec.restricted = restricted;
  if (restricted) {
    const auto kept = kept_components(pair);
    const Interval w = sample_window(spec.curve.domain);
    constexpr int kSamples = 17;
    for (int k = 0; k < kSamples; ++k) {
      const double s = w.lo + (w.hi - w.lo) * k / (kSamples - 1);
      const CurveJet c = spec.curve.eval_jet(s);
      for (std::size_t i = 0; i < 4; ++i) {
        if (i == kept[0] || i == kept[1]) continue;
        if (std::abs(c[i].value) > 1e-12)
          throw PreconditionError("restricted " + std::string(name(pair)) + " surface needs f" +
                                  std::to_string(i + 1) + " = 0, but curve " + spec.curve.name +
                                  " has f" + std::to_string(i + 1) + "(" + std::to_string(s) +
                                  ") = " + std::to_string(c[i].value));
      }
    }
  }
  return spec;
}

SurfaceSpec SurfaceSpec::with_isometry(const Mat4& extra) const {
  SurfaceSpec out = *this;
  out.isometry = isometry ? extra * *isometry : extra;
  return out;
}

double SecondFundamental::at(int s, int i, int j) const {
  if (i > j) std::swap(i, j);
  const int key = s * 100 + i * 10 + j;
  switch (key) {
    case 311: return h3_11;
    case 312: return h3_12;
    case 322: return h3_22;
    case 411: return h4_11;
    case 412: return h4_12;
    case 422: return h4_22;
    default: throw PreconditionError("SecondFundamental::at: index out of range");
  }
}

namespace {

Jet2 reparam_jet(const ScalarFunction& r, double t, int which) {
  const Jet2 j = r.jet(t);
  if (!j.is_finite())
    throw DomainViolation("reparam" + std::to_string(which) + " not finite at t = " +
                          std::to_string(t));
  return j;
}

}  // namespace

Mat4 rotation_at(const SurfaceSpec& spec, double t) {
  const Mat4 R = two_param_matrix(spec.pair, reparam_jet(spec.reparam1, t, 1).value,
                                  reparam_jet(spec.reparam2, t, 2).value);
  return spec.isometry ? *spec.isometry * R : R;
}

Vec4 surface_point(const SurfaceSpec& spec, double t, double s) {
  return rotation_at(spec, t) * spec.curve.point(s);
}

Vec4 reduced_surface_point(const SurfaceSpec& spec, double t, double s) {
  using std::cos, std::cosh, std::sin, std::sinh;
  const CurveJet c = spec.curve.eval_jet(s);
  const double p = reparam_jet(spec.reparam1, t, 1).value;
  const double q = reparam_jet(spec.reparam2, t, 2).value;
  switch (spec.pair) {
    case RotationPair::Pair14: {
      const double f1 = c[0].value, f4 = c[3].value;
      return {f1 * cosh(p), f4 * sinh(q), f1 * sinh(p), f4 * cosh(q)};
    }
    case RotationPair::Pair23: {
      const double f1 = c[0].value, f2 = c[1].value;
      return {f1 * cosh(p), f2 * cosh(q), f2 * sinh(q), f1 * sinh(p)};
    }
    case RotationPair::Pair56: {
      const double f2 = c[1].value, f4 = c[3].value;
      return {f2 * sin(p), f2 * cos(p), f4 * sin(q), f4 * cos(q)};
    }
  }
  return {};
}

std::array<long double, 4> surface_point_extended(const SurfaceSpec& spec, long double t,
                                                  long double s) {
  const auto [gi, gj] = generators(spec.pair);
  const long double p = spec.reparam1.value_extended(t);
  const long double q = spec.reparam2.value_extended(t);
  auto v = apply_one_param(gi, p, apply_one_param(gj, q, spec.curve.value_extended(s)));
  if (!spec.isometry) return v;
  std::array<long double, 4> out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k)
      out[r] += static_cast<long double>((*spec.isometry)(r, k)) * v[k];
  return out;
}

SurfaceJets surface_jets(const SurfaceSpec& spec, double t, double s) {
  const auto [gi, gj] = generators(spec.pair);
  const Jet2 a = reparam_jet(spec.reparam1, t, 1);
  const Jet2 b = reparam_jet(spec.reparam2, t, 2);
  const Mat4 Di = subgroup_generator(gi);
  const Mat4 Dj = subgroup_generator(gj);

  // Pi_i and Pi_j commute, so d/dt (Pi_i(a) Pi_j(b)) = (a' Di + b' Dj) Pi_i(a) Pi_j(b).
  Mat4 R = two_param_matrix(spec.pair, a.value, b.value);
  const Mat4 A = a.d1 * Di + b.d1 * Dj;
  Mat4 Rt = A * R;
  Mat4 Rtt = (a.d2 * Di + b.d2 * Dj) * R + A * Rt;
  if (spec.isometry) {
    R = *spec.isometry * R;
    Rt = *spec.isometry * Rt;
    Rtt = *spec.isometry * Rtt;
  }

  const CurveJet c = spec.curve.eval_jet(s);
  const Vec4 g0{c[0].value, c[1].value, c[2].value, c[3].value};
  const Vec4 g1{c[0].d1, c[1].d1, c[2].d1, c[3].d1};
  const Vec4 g2{c[0].d2, c[1].d2, c[2].d2, c[3].d2};
  return {R * g0, Rt * g0, R * g1, Rtt * g0, R * g2, Rt * g1};
}

double local_scale(const SurfaceJets& j) {
  return std::max({1.0, j.St.euclidean_sq(), j.Ss.euclidean_sq()});
}

InducedMetric metric_from_jets(const SurfaceJets& j) {
  return {inner(j.St, j.St), inner(j.St, j.Ss), inner(j.Ss, j.Ss), causal_character(j.St),
          causal_character(j.Ss)};
}

InducedMetric induced_metric(const SurfaceSpec& spec, double t, double s) {
  const SurfaceJets j = surface_jets(spec, t, s);
  const InducedMetric m = metric_from_jets(j);
  if (std::abs(m.E * m.G - m.F * m.F) <= kMetricDegeneracy * local_scale(j))
    throw DegenerateMetric("degenerate tangent plane at (t, s) = (" + std::to_string(t) + ", " +
                           std::to_string(s) + ")");
  return m;
}

namespace {

int sign_of(double q) { return q < 0.0 ? -1 : 1; }

[[noreturn]] void degenerate_frame(const char* what, double radicand) {
  throw DegenerateFrame(std::string("degenerate frame: ") + what + " radicand " +
                        std::to_string(radicand));
}

}  // namespace

Frame oracle_frame(const SurfaceJets& j) {
  const double floor = kRadicandDegeneracy * local_scale(j);
  Frame f;
  const double E = inner(j.St, j.St);
  if (std::abs(E) <= floor) degenerate_frame("t-direction", E);
  f.e[0] = j.St / std::sqrt(std::abs(E));
  f.eps[0] = sign_of(E);

  const Vec4 w = j.Ss - (f.eps[0] * inner(j.Ss, f.e[0])) * f.e[0];
  const double q = inner(w, w);
  if (std::abs(q) <= floor) degenerate_frame("s-direction", q);
  f.e[1] = w / std::sqrt(std::abs(q));
  f.eps[1] = sign_of(q);

  Vec4 best;
  double best_q = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec4 n = cross3(f.e[0], f.e[1], Vec4::basis(k));
    const double nq = inner(n, n);
    if (std::abs(nq) > std::abs(best_q)) {
      best = n;
      best_q = nq;
    }
  }
  if (std::abs(best_q) <= kRadicandDegeneracy) degenerate_frame("first normal", best_q);
  f.e[2] = best / std::sqrt(std::abs(best_q));
  f.eps[2] = sign_of(best_q);

  const Vec4 n = cross3(f.e[0], f.e[1], f.e[2]);
  const double nq = inner(n, n);
  if (std::abs(nq) <= kRadicandDegeneracy) degenerate_frame("second normal", nq);
  f.e[3] = n / std::sqrt(std::abs(nq));
  f.eps[3] = sign_of(nq);
  return f;
}

Frame oracle_frame(const SurfaceSpec& spec, double t, double s) {
  return oracle_frame(surface_jets(spec, t, s));
}

Frame moving_frame(const SurfaceSpec& spec, double t, double s) {
  const SurfaceJets j = surface_jets(spec, t, s);
  if (!spec.restricted) return oracle_frame(j);

  const ClosedInputs in = closed_inputs(spec, t, s);
  const Radicands r = radicands(spec.pair, in);
  const double floor = kRadicandDegeneracy * local_scale(j);
  if (std::abs(r.t_dir) <= floor) degenerate_frame("t-direction", r.t_dir);
  if (std::abs(r.s_dir) <= floor) degenerate_frame("s-direction", r.s_dir);

  Frame f;
  f.e = printed_frame(spec.pair, in, NormalChoice::Corrected);
  for (std::size_t i = 0; i < 4; ++i) {
    if (spec.isometry) f.e[i] = *spec.isometry * f.e[i];
    f.eps[i] = sign_of(inner(f.e[i], f.e[i]));
  }
  return f;
}

bool in_closed_form_regime(RotationPair pair, const InducedMetric& m) {
  const bool t_time = m.sign_t == CausalCharacter::TimeLike;
  const bool s_space = m.sign_s == CausalCharacter::SpaceLike && m.G != 0.0;
  const bool t_space = m.sign_t == CausalCharacter::SpaceLike && m.E != 0.0;
  const bool s_time = m.sign_s == CausalCharacter::TimeLike;
  return pair == RotationPair::Pair23 ? (t_space && s_time) : (t_time && s_space);
}

}  // namespace rotsurf
