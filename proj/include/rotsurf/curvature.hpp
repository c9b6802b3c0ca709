#pragma once

// Second fundamental form, mean curvature vector and Gaussian curvature of a
// rotational surface, from the printed closed forms and from first
// principles (surface jets projected onto a frame, then the Gauss equation).

#include <optional>
#include <string>
#include <vector>

#include "rotsurf/closed_form.hpp"
#include "rotsurf/surface.hpp"

namespace rotsurf {

/// h^s_ij = g(d_i d_j S, e_s) with i, j in the coordinate directions (t, s).
/// This is the normalization the printed coefficients use.
SecondFundamental coordinate_projection(const SurfaceJets& j, const Frame& f);

/// h^s_ij = g(II(e_i, e_j), e_s) for the frame's own tangent vectors e1, e2.
SecondFundamental frame_coefficients(const SurfaceJets& j, const Frame& f);

/// H = 1/2 sum_i sum_s eps_i eps_s h^s_ii e_s, with h from frame_coefficients.
Vec4 mean_curvature_from(const SecondFundamental& h, const Frame& f);

/// K = eps1 eps2 (g(v11, v22) - g(v12, v12)), v_ij = sum_s eps_s h^s_ij e_s.
double gaussian_curvature_from(const SecondFundamental& h, const Frame& f);

/// Printed coefficients. Restricted specs only; DegenerateFrame propagated.
SecondFundamental second_fundamental_closed(const SurfaceSpec& spec, double t, double s);

/// Coordinate projections of the surface jets onto the moving frame's normals.
SecondFundamental second_fundamental_oracle(const SurfaceSpec& spec, double t, double s);

struct MeanCurvature {
  std::optional<Vec4> closed;  ///< printed statement formula; restricted specs only
  Vec4 oracle;
};

struct GaussianCurvature {
  std::optional<double> closed;
  double oracle = 0.0;
};

MeanCurvature mean_curvature(const SurfaceSpec& spec, double t, double s);
GaussianCurvature gaussian_curvature(const SurfaceSpec& spec, double t, double s);

/// |a - b| / max(1, |b|), componentwise maximum for vectors.
double relative_residual(double a, double b);
double relative_residual(const Vec4& a, const Vec4& b);
double relative_residual(const SecondFundamental& a, const SecondFundamental& b);

/// One printed formula variant and its distance from the oracle.
struct VariantResidual {
  std::string label;  ///< e.g. "statement", "proof, e3 term negated"
  double residual = 0.0;
};

struct CurvatureReport {
  double t = 0.0, s = 0.0;
  InducedMetric metric;
  bool in_regime = false;  ///< causal signs as assumed by the closed forms
  Frame frame;             ///< moving_frame

  SecondFundamental h_oracle;  ///< coordinate projections onto frame normals
  SecondFundamental h_frame;   ///< orthonormal-frame coefficients
  Vec4 H_oracle;
  double K_oracle = 0.0;

  // Closed forms, restricted specs only.
  std::optional<SecondFundamental> h_closed;
  std::optional<Vec4> H_closed;
  std::optional<double> K_closed;
  std::optional<double> h_residual;
  std::vector<VariantResidual> H_variants;
  std::vector<VariantResidual> K_variants;
  /// | |E| - |radicand| | for the squared and the literal reading of the e1 radicand.
  std::optional<double> radicand_squared_residual;
  std::optional<double> radicand_literal_residual;

  std::vector<std::string> findings;

  /// Smallest residual over the variants, or nullopt without closed forms.
  std::optional<double> best_H_residual() const;
  std::optional<double> best_K_residual() const;
  /// g(H, H) of the oracle mean curvature vector.
  double H_norm_sq() const { return inner(H_oracle, H_oracle); }
};

/// Residual threshold above which the report records a finding.
inline constexpr double kFindingThreshold = 1e-6;

/// Collects every quantity; never throws on closed-vs-oracle disagreement.
/// Throws DegenerateMetric or DegenerateFrame at degenerate points.
CurvatureReport curvature_report(const SurfaceSpec& spec, double t, double s);

}  // namespace rotsurf
