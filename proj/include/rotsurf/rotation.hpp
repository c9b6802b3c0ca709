#pragma once

// Closed-form one-parameter subgroups generated by Omega1..Omega6 and the
// two-parameter abelian products used to sweep rotational surfaces.

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <utility>

#include "rotsurf/algebra.hpp"
#include "rotsurf/killing.hpp"

namespace rotsurf {

enum class RotationKind { Hyperbolic, Elliptic };

/// The commuting generator pairs. No other pair can be named.
enum class RotationPair { Pair14, Pair23, Pair56 };

inline constexpr std::array<RotationPair, 3> kAllPairs{RotationPair::Pair14, RotationPair::Pair23,
                                                       RotationPair::Pair56};

constexpr RotationKind kind(RotationPair p) {
  return p == RotationPair::Pair56 ? RotationKind::Elliptic : RotationKind::Hyperbolic;
}

/// (Omega1, Omega4), (Omega2, Omega3) or (Omega5, Omega6); the first entry is
/// driven by the t-reparametrization r1, the second by r2.
std::pair<GeneratorId, GeneratorId> generators(RotationPair p);

std::string_view name(RotationPair p);
/// Accepts "14", "23", "56" or "Pair14" etc.
std::optional<RotationPair> parse_pair(std::string_view text);

struct OneParamMatrix {
  GeneratorId id = GeneratorId::Omega1;
  double param = 0.0;
  Mat4 matrix = Mat4::identity();
};

/// Coordinate plane (0-based) carrying the 2x2 block of Pi_id.
struct BlockLayout {
  std::size_t a;
  std::size_t b;
  bool elliptic;
};

constexpr BlockLayout block_layout(GeneratorId id) {
  switch (id) {
    case GeneratorId::Omega1: return {0, 2, false};
    case GeneratorId::Omega2: return {0, 3, false};
    case GeneratorId::Omega3: return {1, 2, false};
    case GeneratorId::Omega4: return {1, 3, false};
    case GeneratorId::Omega5: return {0, 1, true};
    case GeneratorId::Omega6: return {2, 3, true};
  }
  return {0, 0, false};
}

/// Applies Pi_id(p) to v in any floating type. Hyperbolic blocks are
/// [[cosh, sinh], [sinh, cosh]]; elliptic ones are [[cos, sin], [-sin, cos]].
template <class T>
std::array<T, 4> apply_one_param(GeneratorId id, T p, const std::array<T, 4>& v) {
  using std::cos, std::cosh, std::sin, std::sinh;
  const BlockLayout L = block_layout(id);
  std::array<T, 4> out = v;
  if (L.elliptic) {
    const T c = cos(p), s = sin(p);
    out[L.a] = c * v[L.a] + s * v[L.b];
    out[L.b] = -s * v[L.a] + c * v[L.b];
  } else {
    const T c = cosh(p), s = sinh(p);
    out[L.a] = c * v[L.a] + s * v[L.b];
    out[L.b] = s * v[L.a] + c * v[L.b];
  }
  return out;
}

/// Closed-form Pi_id(param).
OneParamMatrix one_param_matrix(GeneratorId id, double param);

/// d/dp Pi_id(p) at p = 0, so that Pi_id(p) = exp(p * subgroup_generator(id)).
/// Equals the field matrix for Omega1..Omega4 and its negative for Omega5,
/// Omega6, whose displayed rotation blocks turn the opposite way to the flow
/// of the field.
Mat4 subgroup_generator(GeneratorId id);

/// max |one_param_matrix(id, p) - expm(p * subgroup_generator(id), tol/10)|.
double verify_closed_form(GeneratorId id, double param, double tol);

/// Pi_i(p1) * Pi_j(p2) for the pair's generators (i, j).
Mat4 two_param_matrix(RotationPair pair, double p1, double p2);

}  // namespace rotsurf
