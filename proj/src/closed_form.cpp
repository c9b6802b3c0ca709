#include "rotsurf/closed_form.hpp"

#include <cmath>

#include "rotsurf/error.hpp"

namespace rotsurf {

ClosedInputs closed_inputs(const SurfaceSpec& spec, double t, double s) {
  if (!spec.restricted) throw PreconditionError("closed forms need a restricted surface spec");
  const CurveJet c = spec.curve.eval_jet(s);
  const auto [ka, kb] = kept_components(spec.pair);
  return {c[ka], c[kb], spec.reparam1.jet(t), spec.reparam2.jet(t)};
}

namespace {

// Short names for the ingredients, matching the printed notation:
// a, a1, a2 = fa, fa', fa''; b likewise; p, pd, pdd = p1 and its t-derivatives; q likewise.
struct Terms {
  double a, a1, a2, b, b1, b2;
  double p, pd, pdd, q, qd, qdd;

  explicit Terms(const ClosedInputs& in)
      : a(in.fa.value), a1(in.fa.d1), a2(in.fa.d2),
        b(in.fb.value), b1(in.fb.d1), b2(in.fb.d2),
        p(in.p1.value), pd(in.p1.d1), pdd(in.p1.d2),
        q(in.p2.value), qd(in.p2.d1), qdd(in.p2.d2) {}
};

double root(double r) { return std::sqrt(std::abs(r)); }

}  // namespace

Radicands radicands(RotationPair pair, const ClosedInputs& in) {
  const Terms v(in);
  switch (pair) {
    case RotationPair::Pair14: {
      const double r3 = v.b * v.b * v.qd * v.qd - v.a * v.a * v.pd * v.pd;
      return {r3, -v.a1 * v.a1 + v.b1 * v.b1, r3};
    }
    case RotationPair::Pair23:
      return {v.b * v.b * v.qd * v.qd + v.a * v.a * v.pd * v.pd, v.a1 * v.a1 + v.b1 * v.b1,
              v.b * v.b * v.qd + v.a * v.a * v.pd};
    case RotationPair::Pair56:
      return {-v.a * v.a * v.pd * v.pd + v.b * v.b * v.qd * v.qd, -v.a1 * v.a1 + v.b1 * v.b1,
              -v.a * v.a * v.pd * v.pd + v.b * v.b * v.qd};
  }
  return {};
}

std::array<Vec4, 4> printed_frame(RotationPair pair, const ClosedInputs& in, NormalChoice normals) {
  using std::cos, std::cosh, std::sin, std::sinh;
  const Terms v(in);
  const Radicands r = radicands(pair, in);
  const double n3 = root(r.t_dir), n4 = root(r.s_dir);
  std::array<Vec4, 4> e;
  switch (pair) {
    case RotationPair::Pair14: {
      const double x = v.p, al = v.q;
      e[0] = Vec4{v.a * v.pd * sinh(x), v.b * v.qd * cosh(al), v.a * v.pd * cosh(x), v.b * v.qd * sinh(al)} / n3;
      e[1] = Vec4{v.a1 * cosh(x), v.b1 * sinh(al), v.a1 * sinh(x), v.b1 * cosh(al)} / n4;
      e[2] = Vec4{v.b * v.qd * sinh(x), v.a * v.pd * cosh(al), v.b * v.qd * cosh(x), v.a * v.pd * sinh(al)} / n3;
      e[3] = Vec4{v.b1 * cosh(x), v.a1 * sinh(al), v.b1 * sinh(x), v.a1 * cosh(al)} / n4;
      break;
    }
    case RotationPair::Pair23: {
      const double y = v.p, z = v.q;
      const double k = normals == NormalChoice::Corrected ? -1.0 : 1.0;
      e[0] = Vec4{v.a * v.pd * sinh(y), v.b * v.qd * sinh(z), v.b * v.qd * cosh(z), v.a * v.pd * cosh(y)} / n3;
      e[1] = Vec4{v.a1 * cosh(y), v.b1 * cosh(z), v.b1 * sinh(z), v.a1 * sinh(y)} / n4;
      e[2] = Vec4{v.b * v.qd * sinh(y), k * v.a * v.pd * sinh(z), k * v.a * v.pd * cosh(z), v.b * v.qd * cosh(y)} / n3;
      e[3] = Vec4{v.b1 * cosh(y), k * v.a1 * cosh(z), k * v.a1 * sinh(z), v.b1 * sinh(y)} / n4;
      break;
    }
    case RotationPair::Pair56: {
      const double be = v.p, th = v.q;
      e[0] = Vec4{v.a * v.pd * cos(be), -v.a * v.pd * sin(be), v.b * v.qd * cos(th), -v.b * v.qd * sin(th)} / n3;
      e[1] = Vec4{v.a1 * sin(be), v.a1 * cos(be), v.b1 * sin(th), v.b1 * cos(th)} / n4;
      e[2] = Vec4{-v.b * v.qd * cos(be), v.b * v.qd * sin(be), -v.a * v.pd * cos(th), v.a * v.pd * sin(th)} / n3;
      e[3] = Vec4{v.b1 * sin(be), v.b1 * cos(be), v.a1 * sin(th), v.a1 * cos(th)} / n4;
      break;
    }
  }
  return e;
}

std::array<int, 4> printed_signs(RotationPair pair) {
  switch (pair) {
    case RotationPair::Pair14: return {-1, 1, -1, 1};
    case RotationPair::Pair23: return {1, -1, 1, -1};
    case RotationPair::Pair56: return {-1, 1, 1, -1};
  }
  return {};
}

SecondFundamental printed_h(RotationPair pair, const ClosedInputs& in) {
  const Terms v(in);
  const Radicands r = radicands(pair, in);
  const double n3 = root(r.t_dir), n4 = root(r.s_dir);
  SecondFundamental h;
  switch (pair) {
    case RotationPair::Pair14:
      h.h3_11 = v.a * v.b * (v.pdd * v.qd + v.pd * v.qdd) / n3;
      h.h3_12 = (v.a1 * v.b - v.a * v.b1) * v.pd * v.qd / n3;
      h.h4_11 = (v.a1 * v.b * v.qd * v.qd - v.b1 * v.a * v.pd * v.pd) / n4;
      h.h4_22 = (v.a1 * v.b2 - v.a2 * v.b1) / n4;
      break;
    case RotationPair::Pair23:
      h.h3_11 = v.a * v.b * (v.pd * v.qdd + v.pdd * v.qd) / n3;
      h.h3_12 = (v.a * v.b1 + v.a1 * v.b) * v.pd * v.qd / n3;
      h.h4_11 = (-v.a * v.b1 * v.pd * v.pd - v.a1 * v.b * v.qd * v.qd) / n4;
      h.h4_22 = (-v.a2 * v.b1 - v.a1 * v.b2) / n4;
      break;
    case RotationPair::Pair56:
      h.h3_11 = v.b * v.a * (v.qd * v.pdd - v.pd * v.qdd) / n3;
      h.h3_12 = (v.a1 * v.b - v.a * v.b1) * v.pd * v.qd / n3;
      h.h4_11 = (v.b1 * v.a * v.pd * v.pd - v.a1 * v.b * v.qd * v.qd) / n4;
      // Printed with the label h^3_22; it is the e4 coefficient.
      h.h4_22 = (-v.a2 * v.b1 + v.a1 * v.b2) / n4;
      break;
  }
  return h;
}

Vec4 printed_H(RotationPair pair, const ClosedInputs& in, PrintedSource source,
               SignVariant variant, NormalChoice normals) {
  const Terms v(in);
  const Radicands r = radicands(pair, in);
  const double n3 = root(r.t_dir), n4 = root(r.s_dir);
  double c3 = 0.0, c4 = 0.0;
  switch (pair) {
    case RotationPair::Pair14:
      // Statement and proof share the same display.
      c3 = v.a * v.b * (v.pdd * v.qd + v.pd * v.qdd) / (2.0 * n3) +
           (v.b1 * v.a * v.pd * v.pd - v.a1 * v.b * v.qd * v.qd) / (2.0 * n4);
      c4 = (v.a1 * v.b2 - v.a2 * v.b1) / (2.0 * n4);
      break;
    case RotationPair::Pair23:
      c3 = v.a * v.b * (v.pd * v.qdd + v.pdd * v.qd) / (2.0 * n3);
      c4 = (v.a * v.b1 * v.pd * v.pd + v.a1 * v.b * v.qd * v.qd - v.a2 * v.b1 - v.a1 * v.b2) /
           (2.0 * n4);
      break;
    case RotationPair::Pair56:
      if (source == PrintedSource::Statement)
        c3 = v.b * v.a * (v.pd * v.qdd - v.qd * v.pdd) / (2.0 * n3);
      else
        c3 = -v.b * v.a * (v.qd * v.pdd - v.pd * v.qdd) / (2.0 * n3);
      c4 = (v.b1 * v.a * v.pd * v.pd - v.a1 * v.b * v.qd * v.qd + v.a2 * v.b1 - v.a1 * v.b2) /
           (2.0 * n4);
      break;
  }
  if (variant == SignVariant::Flipped) c3 = -c3;
  const auto e = printed_frame(pair, in, normals);
  return c3 * e[2] + c4 * e[3];
}

double printed_K(RotationPair pair, const ClosedInputs& in, PrintedSource source,
                 SignVariant variant) {
  const Terms v(in);
  const Radicands r = radicands(pair, in);
  double k = 0.0;
  switch (pair) {
    case RotationPair::Pair14: {
      const double m = v.a1 * v.b - v.a * v.b1;
      k = m * m * (v.pd * v.qd) * (v.pd * v.qd) / r.t_dir +
          (v.a1 * v.b * v.qd * v.qd - v.b1 * v.a * v.pd * v.pd) * (v.a1 * v.b2 - v.a2 * v.b1) /
              r.s_dir;
      break;
    }
    case RotationPair::Pair23: {
      const double m = v.a * v.b1 + v.a1 * v.b;
      const double first = m * m * (v.pd * v.qd) * (v.pd * v.qd) / r.t_dir;
      const double second = (v.a * v.b1 * v.pd * v.pd + v.a1 * v.b * v.qd * v.qd) *
                            (v.a2 * v.b1 + v.a1 * v.b2) / r.s_dir;
      k = source == PrintedSource::Statement ? -(first + second) : -first - second;
      break;
    }
    case RotationPair::Pair56: {
      const double m = v.a1 * v.b - v.a * v.b1;
      const double w = v.b1 * v.a * v.pd * v.pd - v.a1 * v.b * v.qd * v.qd;
      const double first = m * m * (v.pd * v.qd) * (v.pd * v.qd) / r.t_dir;
      const double second = (-v.a2 * v.b1 + v.a1 * v.b2) * w * w / r.s_dir;
      k = source == PrintedSource::Statement ? -(first + second) : -first - second;
      break;
    }
  }
  return variant == SignVariant::Flipped ? -k : k;
}

}  // namespace rotsurf
