#pragma once

// Rotational surfaces S(t, s) = M * Pi_i(r1(t)) * Pi_j(r2(t)) * gamma(s) for a
// commuting generator pair (i, j) and an optional extra isometry M.

#include <array>
#include <optional>
#include <string>

#include "rotsurf/algebra.hpp"
#include "rotsurf/curve.hpp"
#include "rotsurf/rotation.hpp"

namespace rotsurf {

/// Curve components (0-based) that a restricted spec keeps; the other two must vanish.
/// Pair14 -> (f1, f4), Pair23 -> (f1, f2), Pair56 -> (f2, f4).
std::array<std::size_t, 2> kept_components(RotationPair pair);

struct SurfaceSpec {
  RotationPair pair = RotationPair::Pair14;
  Curve4 curve;
  ScalarFunction reparam1;  ///< x(t), y(t) or beta(t)
  ScalarFunction reparam2;  ///< alpha(t), z(t) or theta(t)
  bool restricted = false;
  std::optional<Mat4> isometry;

  /// Reparametrizations default to the identity r(t) = t. A restricted spec
  /// checks at 17 sample points of the curve domain (clipped to [-8, 8] when
  /// unbounded) that the two dropped components vanish; PreconditionError if not.
  static SurfaceSpec make(RotationPair pair, Curve4 curve, bool restricted = true,
                          std::optional<ScalarFunction> reparam1 = std::nullopt,
                          std::optional<ScalarFunction> reparam2 = std::nullopt);

  /// Copy with M' = extra * M.
  SurfaceSpec with_isometry(const Mat4& extra) const;
};

/// Identity reparametrization r(t) = t.
ScalarFunction identity_reparam();

/// Rotation part R(t) = M * Pi_i(r1(t)) * Pi_j(r2(t)).
Mat4 rotation_at(const SurfaceSpec& spec, double t);

Vec4 surface_point(const SurfaceSpec& spec, double t, double s);

/// The reduced closed forms for restricted specs, e.g. for Pair14
/// (f1 cosh x, f4 sinh alpha, f1 sinh x, f4 cosh alpha). Ignores the isometry.
Vec4 reduced_surface_point(const SurfaceSpec& spec, double t, double s);

/// surface_point in long double; used by finite-difference oracles.
std::array<long double, 4> surface_point_extended(const SurfaceSpec& spec, long double t,
                                                  long double s);

struct SurfaceJets {
  Vec4 S, St, Ss, Stt, Sss, Sts;
};

SurfaceJets surface_jets(const SurfaceSpec& spec, double t, double s);

/// max(1, |S_t|^2, |S_s|^2) with Euclidean lengths; the reference scale for
/// the degeneracy thresholds.
double local_scale(const SurfaceJets& j);

inline constexpr double kMetricDegeneracy = 1e-12;
inline constexpr double kRadicandDegeneracy = 1e-14;

struct InducedMetric {
  double E = 0.0, F = 0.0, G = 0.0;
  CausalCharacter sign_t = CausalCharacter::SpaceLike;
  CausalCharacter sign_s = CausalCharacter::SpaceLike;
};

/// Raw first fundamental form; never throws on degeneracy.
InducedMetric metric_from_jets(const SurfaceJets& j);

/// Throws DegenerateMetric when |EG - F^2| <= 1e-12 * scale.
InducedMetric induced_metric(const SurfaceSpec& spec, double t, double s);

struct Frame {
  std::array<Vec4, 4> e{};
  std::array<int, 4> eps{};
};

/// Second fundamental form coefficients h^s_ij, s in {3, 4}, i <= j in {1, 2}.
struct SecondFundamental {
  double h3_11 = 0.0, h3_12 = 0.0, h3_22 = 0.0;
  double h4_11 = 0.0, h4_12 = 0.0, h4_22 = 0.0;

  /// h^s_ij with s in {3, 4} and i, j in {1, 2}; symmetric in i, j.
  double at(int s, int i, int j) const;
  std::array<double, 6> values() const { return {h3_11, h3_12, h3_22, h4_11, h4_12, h4_22}; }
};

/// Restricted specs: the closed-form frame (unit S_t, unit S_s and the two
/// displayed normals, with the Pair23 normals sign-corrected so that they
/// really are normal). Otherwise the oracle frame. Signs are always the
/// computed g(e_i, e_i). Throws DegenerateFrame when a radicand is
/// <= 1e-14 * scale.
Frame moving_frame(const SurfaceSpec& spec, double t, double s);

/// Frame built from first principles: Gram-Schmidt on (S_t, S_s), then
/// normals from the ternary cross product. Throws DegenerateFrame.
Frame oracle_frame(const SurfaceJets& j);
Frame oracle_frame(const SurfaceSpec& spec, double t, double s);

/// Whether the point lies in the causal regime the closed forms assume
/// (Pair14, Pair56: S_t time-like and S_s space-like; Pair23: the reverse).
bool in_closed_form_regime(RotationPair pair, const InducedMetric& m);

}  // namespace rotsurf
