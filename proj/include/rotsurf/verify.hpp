#pragma once

// Self-verification suites run by `rotsurf verify`.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rotsurf/rotation.hpp"

namespace rotsurf {

enum class Suite { Algebra, Killing, Groups, Surfaces, All };
std::optional<Suite> parse_suite(std::string_view text);

struct VerifyOptions {
  /// Replaces the threshold of the closed-form vs series comparison (default 1e-10).
  std::optional<double> tol;
};

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> info;  ///< informational findings, never failures
  std::string bracket_grid;

  bool all_passed() const;
  void print(std::ostream& out) const;
};

/// A builtin curve swept by one pair over a parameter window where the
/// restricted surface is non-degenerate.
struct SurfaceCase {
  std::string curve;
  RotationPair pair;
  double s_lo, s_hi;
  double t_lo = -1.5, t_hi = 1.5;
};

std::vector<SurfaceCase> builtin_surface_cases();

VerificationReport run_verification(Suite suite, const VerifyOptions& options = {});

}  // namespace rotsurf
