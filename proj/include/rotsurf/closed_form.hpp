#pragma once

// Printed closed-form expressions for the reduced surfaces: frames, second
// fundamental form coefficients, mean curvature vector and Gaussian
// curvature, transcribed term by term. These are evaluated verbatim so that
// they can be compared against first-principles computations; known
// misprints are kept and surfaced by the comparison, not repaired here.
//
// Naming per pair: (fa, fb) are the kept curve components and (p1, p2) the
// rotation parameters.
//   Pair14: fa = f1, fb = f4, p1 = x,    p2 = alpha
//   Pair23: fa = f1, fb = f2, p1 = y,    p2 = z
//   Pair56: fa = f2, fb = f4, p1 = beta, p2 = theta

#include <array>

#include "rotsurf/jet.hpp"
#include "rotsurf/surface.hpp"

namespace rotsurf {

/// Curve jets in s and rotation-parameter jets in t at one point.
struct ClosedInputs {
  Jet2 fa, fb;
  Jet2 p1, p2;
};

/// Throws PreconditionError for an unrestricted spec.
ClosedInputs closed_inputs(const SurfaceSpec& spec, double t, double s);

/// Normalizing radicands.
struct Radicands {
  double t_dir = 0.0;        ///< radicand of e1, e3 with squared rates
  double s_dir = 0.0;        ///< radicand of e2, e4
  double t_dir_literal = 0.0;  ///< e1/e3 radicand exactly as printed (unsquared rates for Pair23, Pair56)
};

Radicands radicands(RotationPair pair, const ClosedInputs& in);

enum class NormalChoice {
  AsPrinted,  ///< normals exactly as displayed
  Corrected,  ///< Pair23 normals with components 2 and 3 negated; identical to AsPrinted otherwise
};

/// Printed frame (without the isometry), each vector divided by sqrt(|radicand|).
std::array<Vec4, 4> printed_frame(RotationPair pair, const ClosedInputs& in,
                                  NormalChoice normals = NormalChoice::AsPrinted);

/// The signs as they are stated alongside each frame.
std::array<int, 4> printed_signs(RotationPair pair);

/// Second fundamental form coefficients as displayed (radicands under sqrt(|.|)).
SecondFundamental printed_h(RotationPair pair, const ClosedInputs& in);

enum class PrintedSource { Statement, Proof };
enum class SignVariant {
  AsPrinted,
  Flipped,  ///< e3 term of H negated, or overall sign of K negated
};

/// Mean curvature vector as printed, expanded over the printed normals.
Vec4 printed_H(RotationPair pair, const ClosedInputs& in, PrintedSource source,
               SignVariant variant = SignVariant::AsPrinted,
               NormalChoice normals = NormalChoice::AsPrinted);

/// Gaussian curvature as printed.
double printed_K(RotationPair pair, const ClosedInputs& in, PrintedSource source,
                 SignVariant variant = SignVariant::AsPrinted);

}  // namespace rotsurf
