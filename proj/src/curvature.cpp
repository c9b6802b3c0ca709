#include "rotsurf/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rotsurf/error.hpp"

namespace rotsurf {

SecondFundamental coordinate_projection(const SurfaceJets& j, const Frame& f) {
  return {inner(j.Stt, f.e[2]), inner(j.Sts, f.e[2]), inner(j.Sss, f.e[2]),
          inner(j.Stt, f.e[3]), inner(j.Sts, f.e[3]), inner(j.Sss, f.e[3])};
}

SecondFundamental frame_coefficients(const SurfaceJets& j, const Frame& f) {
  // Express e1, e2 in the coordinate basis (d_t, d_s) through the inverse
  // first fundamental form, then expand the bilinear second derivative.
  const double E = inner(j.St, j.St), F = inner(j.St, j.Ss), G = inner(j.Ss, j.Ss);
  const double det = E * G - F * F;
  std::array<std::array<double, 2>, 2> c{};
  for (std::size_t i = 0; i < 2; ++i) {
    const double pt = inner(f.e[i], j.St), ps = inner(f.e[i], j.Ss);
    c[i] = {(G * pt - F * ps) / det, (-F * pt + E * ps) / det};
  }
  auto d2 = [&](std::size_t a, std::size_t b) {
    return c[a][0] * c[b][0] * j.Stt + (c[a][0] * c[b][1] + c[a][1] * c[b][0]) * j.Sts +
           c[a][1] * c[b][1] * j.Sss;
  };
  const Vec4 v11 = d2(0, 0), v12 = d2(0, 1), v22 = d2(1, 1);
  return {inner(v11, f.e[2]), inner(v12, f.e[2]), inner(v22, f.e[2]),
          inner(v11, f.e[3]), inner(v12, f.e[3]), inner(v22, f.e[3])};
}

namespace {

Vec4 normal_vector(const SecondFundamental& h, const Frame& f, int i, int j) {
  return (f.eps[2] * h.at(3, i, j)) * f.e[2] + (f.eps[3] * h.at(4, i, j)) * f.e[3];
}

}  // namespace

Vec4 mean_curvature_from(const SecondFundamental& h, const Frame& f) {
  return 0.5 * (f.eps[0] * normal_vector(h, f, 1, 1) + f.eps[1] * normal_vector(h, f, 2, 2));
}

double gaussian_curvature_from(const SecondFundamental& h, const Frame& f) {
  const Vec4 v11 = normal_vector(h, f, 1, 1);
  const Vec4 v12 = normal_vector(h, f, 1, 2);
  const Vec4 v22 = normal_vector(h, f, 2, 2);
  return f.eps[0] * f.eps[1] * (inner(v11, v22) - inner(v12, v12));
}

SecondFundamental second_fundamental_closed(const SurfaceSpec& spec, double t, double s) {
  moving_frame(spec, t, s);  // radicand checks
  return printed_h(spec.pair, closed_inputs(spec, t, s));
}

SecondFundamental second_fundamental_oracle(const SurfaceSpec& spec, double t, double s) {
  const SurfaceJets j = surface_jets(spec, t, s);
  return coordinate_projection(j, moving_frame(spec, t, s));
}

namespace {

struct OracleValues {
  Vec4 H;
  double K;
};

OracleValues oracle_values(const SurfaceJets& j) {
  const Frame f = oracle_frame(j);
  const SecondFundamental h = frame_coefficients(j, f);
  return {mean_curvature_from(h, f), gaussian_curvature_from(h, f)};
}

Vec4 apply_isometry(const SurfaceSpec& spec, const Vec4& v) {
  return spec.isometry ? *spec.isometry * v : v;
}

}  // namespace

MeanCurvature mean_curvature(const SurfaceSpec& spec, double t, double s) {
  const SurfaceJets j = surface_jets(spec, t, s);
  MeanCurvature out{std::nullopt, oracle_values(j).H};
  if (spec.restricted) {
    moving_frame(spec, t, s);
    out.closed = apply_isometry(
        spec, printed_H(spec.pair, closed_inputs(spec, t, s), PrintedSource::Statement));
  }
  return out;
}

GaussianCurvature gaussian_curvature(const SurfaceSpec& spec, double t, double s) {
  const SurfaceJets j = surface_jets(spec, t, s);
  GaussianCurvature out{std::nullopt, oracle_values(j).K};
  if (spec.restricted) {
    moving_frame(spec, t, s);
    out.closed = printed_K(spec.pair, closed_inputs(spec, t, s), PrintedSource::Statement);
  }
  return out;
}

double relative_residual(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

double relative_residual(const Vec4& a, const Vec4& b) {
  return (a - b).max_abs() / std::max(1.0, b.max_abs());
}

double relative_residual(const SecondFundamental& a, const SecondFundamental& b) {
  const auto x = a.values(), y = b.values();
  double diff = 0.0, mag = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    diff = std::max(diff, std::abs(x[i] - y[i]));
    mag = std::max(mag, std::abs(y[i]));
  }
  return diff / mag;
}

std::optional<double> CurvatureReport::best_H_residual() const {
  if (H_variants.empty()) return std::nullopt;
  double best = H_variants.front().residual;
  for (const auto& v : H_variants) best = std::min(best, v.residual);
  return best;
}

std::optional<double> CurvatureReport::best_K_residual() const {
  if (K_variants.empty()) return std::nullopt;
  double best = K_variants.front().residual;
  for (const auto& v : K_variants) best = std::min(best, v.residual);
  return best;
}

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::string signs(const std::array<int, 4>& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + std::string(e[i] < 0 ? "-1" : "+1");
  return out + ")";
}

}  // namespace

CurvatureReport curvature_report(const SurfaceSpec& spec, double t, double s) {
  CurvatureReport r;
  r.t = t;
  r.s = s;
  const SurfaceJets j = surface_jets(spec, t, s);
  r.metric = induced_metric(spec, t, s);
  r.in_regime = in_closed_form_regime(spec.pair, r.metric);
  r.frame = moving_frame(spec, t, s);
  r.h_oracle = coordinate_projection(j, r.frame);
  r.h_frame = frame_coefficients(j, r.frame);
  const OracleValues ov = oracle_values(j);
  r.H_oracle = ov.H;
  r.K_oracle = ov.K;

  if (!r.in_regime)
    r.findings.push_back(fmt("causal regime differs from the closed-form assumption: E = %.6g, G = %.6g",
                             r.metric.E, r.metric.G));

  if (!spec.restricted) return r;

  const ClosedInputs in = closed_inputs(spec, t, s);
  r.h_closed = printed_h(spec.pair, in);
  r.h_residual = relative_residual(*r.h_closed, r.h_oracle);
  r.H_closed = apply_isometry(spec, printed_H(spec.pair, in, PrintedSource::Statement));
  r.K_closed = printed_K(spec.pair, in, PrintedSource::Statement);

  struct Variant {
    PrintedSource source;
    SignVariant sign;
    const char* label;
  };
  static constexpr Variant kVariants[] = {
      {PrintedSource::Statement, SignVariant::AsPrinted, "statement"},
      {PrintedSource::Statement, SignVariant::Flipped, "statement, sign flipped"},
      {PrintedSource::Proof, SignVariant::AsPrinted, "proof"},
      {PrintedSource::Proof, SignVariant::Flipped, "proof, sign flipped"},
  };
  for (const Variant& v : kVariants) {
    const Vec4 H = apply_isometry(spec, printed_H(spec.pair, in, v.source, v.sign));
    r.H_variants.push_back({v.label, relative_residual(H, r.H_oracle)});
    r.K_variants.push_back(
        {v.label, relative_residual(printed_K(spec.pair, in, v.source, v.sign), r.K_oracle)});
  }

  const Radicands rad = radicands(spec.pair, in);
  r.radicand_squared_residual = std::abs(std::abs(r.metric.E) - std::abs(rad.t_dir));
  r.radicand_literal_residual = std::abs(std::abs(r.metric.E) - std::abs(rad.t_dir_literal));

  const auto stated = printed_signs(spec.pair);
  if (stated != r.frame.eps)
    r.findings.push_back("frame signs " + signs(r.frame.eps) + " differ from the stated " +
                         signs(stated));
  if (*r.h_residual > kFindingThreshold)
    r.findings.push_back(fmt("printed h differs from the projection oracle: relative residual %.3g",
                             *r.h_residual));
  if (*r.best_H_residual() > kFindingThreshold)
    r.findings.push_back(fmt("no printed H variant matches the oracle: best relative residual %.3g",
                             *r.best_H_residual()));
  if (*r.best_K_residual() > kFindingThreshold)
    r.findings.push_back(fmt("no printed K variant matches the oracle: best relative residual %.3g "
                             "(K_oracle = %.6g, K_printed = %.6g)",
                             *r.best_K_residual(), r.K_oracle, *r.K_closed));
  if (*r.radicand_literal_residual > kFindingThreshold)
    r.findings.push_back(fmt("e1 radicand: squared reading matches |E| to %.3g, literal reading "
                             "is off by %.3g",
                             *r.radicand_squared_residual, *r.radicand_literal_residual));
  return r;
}

}  // namespace rotsurf
