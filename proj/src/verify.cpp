#include "rotsurf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/killing.hpp"
#include "rotsurf/surface.hpp"

namespace rotsurf {

std::optional<Suite> parse_suite(std::string_view text) {
  if (text == "algebra") return Suite::Algebra;
  if (text == "killing") return Suite::Killing;
  if (text == "groups") return Suite::Groups;
  if (text == "surfaces") return Suite::Surfaces;
  if (text == "all") return Suite::All;
  return std::nullopt;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::print(std::ostream& out) const {
  char line[512];
  for (const CheckResult& c : checks) {
    std::snprintf(line, sizeof line, "[%s] %-9s %-58s residual=%.3e threshold=%.1e\n",
                  c.pass ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(), c.residual,
                  c.threshold);
    out << line;
  }
  if (!bracket_grid.empty()) out << "\nCommutator table [row, col]:\n" << bracket_grid;
  if (!info.empty()) out << '\n';
  for (const std::string& s : info) out << "[INFO] " << s << '\n';
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
  out << '\n' << checks.size() - static_cast<std::size_t>(failed) << '/' << checks.size()
      << " checks passed\n";
}

std::vector<SurfaceCase> builtin_surface_cases() {
  return {
      {"lin14", RotationPair::Pair14, 0.2, 2.0},
      {"cosh14", RotationPair::Pair14, 1.0, 2.0},
      {"ex1", RotationPair::Pair14, 0.2, 2.0},
      {"ex2", RotationPair::Pair23, 0.3, 2.0},
      {"cosh56", RotationPair::Pair56, 1.0, 2.0},
      {"ex3", RotationPair::Pair56, -0.6, 0.6},
  };
}

namespace {

constexpr std::uint64_t kSeed = 20240611;

class Recorder {
 public:
  Recorder(VerificationReport& r, std::string suite) : r_(r), suite_(std::move(suite)) {}

  void residual(std::string name, double residual, double threshold) {
    r_.checks.push_back({suite_, std::move(name), residual, threshold,
                         std::isfinite(residual) && residual <= threshold});
  }
  void exact(std::string name, double residual) {
    r_.checks.push_back({suite_, std::move(name), residual, 0.0, residual == 0.0});
  }
  void boolean(std::string name, bool ok) {
    r_.checks.push_back({suite_, std::move(name), ok ? 0.0 : 1.0, 0.0, ok});
  }

 private:
  VerificationReport& r_;
  std::string suite_;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec4 random_vec(std::mt19937_64& rng) {
  return {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
}

void algebra_suite(VerificationReport& report) {
  Recorder rec(report, "algebra");
  std::mt19937_64 rng(kSeed);
  const Mat4 G = metric_matrix();
  rec.exact("metric symmetric, G^2 = I", std::max((G - G.transpose()).max_abs(),
                                                  (G * G - Mat4::identity()).max_abs()));
  double worst = 0.0, worst_sym = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vec4 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    const Vec4 c = cross3(x, y, z);
    const double scale = std::max(1.0, c.max_abs() * 4.0);
    worst = std::max({worst, std::abs(inner(c, x)) / scale, std::abs(inner(c, y)) / scale,
                      std::abs(inner(c, z)) / scale});
    worst_sym = std::max(worst_sym, std::abs(inner(x, y) - inner(y, x)));
  }
  rec.residual("cross3 g-orthogonal to its arguments (100 triples)", worst, 1e-12);
  rec.exact("inner product symmetric (100 pairs)", worst_sym);
  rec.boolean("causal characters of basis vectors and zero",
              causal_character(Vec4::basis(0)) == CausalCharacter::TimeLike &&
                  causal_character(Vec4::basis(2)) == CausalCharacter::SpaceLike &&
                  causal_character(Vec4{1, 0, 1, 0}) == CausalCharacter::Null &&
                  causal_character(Vec4{}) == CausalCharacter::SpaceLike);
  rec.exact("expm(0) = I", (expm(Mat4::zero(), 1e-15) - Mat4::identity()).max_abs());
  rec.residual("metric matrix pseudo-orthogonal", is_pseudo_orthogonal(G, 1e-15).residual, 1e-15);
}

void killing_suite(VerificationReport& report) {
  Recorder rec(report, "killing");
  using enum GeneratorId;
  for (GeneratorId id : kAllGenerators)
    rec.exact("L_" + std::string(name(id)) + " g = 0", lie_derivative_metric(generator(id)).max_abs());

  std::mt19937_64 rng(kSeed + 1);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    KillingCoefficients c{uniform(rng, 0, 5), uniform(rng, 0, 5), uniform(rng, 0, 5),
                          uniform(rng, 0, 5), uniform(rng, 0, 5), uniform(rng, 0, 5)};
    worst = std::max(worst, lie_derivative_metric(killing_field(c)).max_abs());
  }
  rec.residual("L_W g = 0 for 100 random Killing fields", worst, 1e-12);

  BracketTable table;
  try {
    table = bracket_table();
    report.bracket_grid = table.render();
    rec.boolean("all 36 brackets are 0 or +/- a generator", true);
  } catch (const UnrecognizedBracket& e) {
    rec.boolean(std::string("all 36 brackets are 0 or +/- a generator: ") + e.what(), false);
    return;
  }

  struct Relation {
    GeneratorId a, b, result;
  };
  static constexpr Relation kRelations[] = {
      {Omega1, Omega2, Omega6}, {Omega1, Omega3, Omega5}, {Omega1, Omega5, Omega3},
      {Omega1, Omega6, Omega2}, {Omega2, Omega4, Omega5}, {Omega2, Omega5, Omega4},
      {Omega6, Omega2, Omega1}, {Omega3, Omega4, Omega6}, {Omega5, Omega3, Omega1},
      {Omega3, Omega6, Omega4}, {Omega5, Omega4, Omega2}, {Omega6, Omega4, Omega3},
  };
  for (const Relation& r : kRelations) {
    const LinearVectorField lhs = bracket(generator(r.a), generator(r.b));
    rec.exact("[" + std::string(name(r.a)) + ", " + std::string(name(r.b)) + "] = " +
                  std::string(name(r.result)),
              (lhs.matrix - generator(r.result).matrix).max_abs());
  }

  double anti = 0.0, jacobi = 0.0;
  for (GeneratorId a : kAllGenerators)
    for (GeneratorId b : kAllGenerators) {
      anti = std::max(anti, (bracket(generator(a), generator(b)).matrix +
                             bracket(generator(b), generator(a)).matrix).max_abs());
      for (GeneratorId c : kAllGenerators) {
        const auto X = generator(a), Y = generator(b), Z = generator(c);
        const Mat4 sum = bracket(X, bracket(Y, Z)).matrix + bracket(Y, bracket(Z, X)).matrix +
                         bracket(Z, bracket(X, Y)).matrix;
        jacobi = std::max(jacobi, sum.max_abs());
      }
    }
  rec.exact("antisymmetry over the 36-cell table", anti);
  rec.exact("Jacobi identity over all 216 triples", jacobi);

  int commuting = 0;
  bool only_expected = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (!table.at(kAllGenerators[i], kAllGenerators[j]).is_zero()) continue;
      ++commuting;
      const auto p = std::pair{i, j};
      only_expected = only_expected && (p == std::pair<std::size_t, std::size_t>{0, 3} ||
                                        p == std::pair<std::size_t, std::size_t>{1, 2} ||
                                        p == std::pair<std::size_t, std::size_t>{4, 5});
    }
  rec.boolean("exactly {O1,O4}, {O2,O3}, {O5,O6} commute", commuting == 3 && only_expected);

  for (RotationPair p : kAllPairs) {
    const auto [i, j] = generators(p);
    const std::array<GeneratorId, 2> ids{i, j};
    rec.boolean(std::string(name(p)) + " spans a closed subalgebra", is_closed_subalgebra(ids));
  }
  const std::array<GeneratorId, 2> open{Omega1, Omega2};
  rec.boolean("{Omega1, Omega2} is not closed", !is_closed_subalgebra(open));
}

void groups_suite(VerificationReport& report, const VerifyOptions& options) {
  Recorder rec(report, "groups");
  const double tol = options.tol.value_or(1e-10);
  std::mt19937_64 rng(kSeed + 2);
  const Mat4 G = metric_matrix();
  for (GeneratorId id : kAllGenerators) {
    double series = 0.0, orth = 0.0, law = 0.0, inv = 0.0, det = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double p = uniform(rng, -3, 3), q = uniform(rng, -3, 3);
      series = std::max(series, verify_closed_form(id, p, tol));
      const Mat4 M = one_param_matrix(id, p).matrix;
      orth = std::max(orth, (M.transpose() * G * M - G).max_abs());
      law = std::max(law, (M * one_param_matrix(id, q).matrix - one_param_matrix(id, p + q).matrix).max_abs());
      inv = std::max(inv, (M * one_param_matrix(id, -p).matrix - Mat4::identity()).max_abs());
      const BlockLayout L = block_layout(id);
      const double block_det = M(L.a, L.a) * M(L.b, L.b) - M(L.a, L.b) * M(L.b, L.a);
      det = std::max(det, std::abs(block_det - 1.0));
    }
    const std::string n(name(id));
    rec.residual(n + ": closed form vs series (50 params)", series, tol);
    rec.residual(n + ": M^T G M = G", orth, 1e-12);
    rec.residual(n + ": group law", law, 1e-12);
    rec.residual(n + ": inverse", inv, 1e-12);
    rec.residual(n + ": det = 1", det, 1e-12);
  }
  for (RotationPair p : kAllPairs) {
    const auto [i, j] = generators(p);
    double comm = 0.0, orth = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double a = uniform(rng, -3, 3), b = uniform(rng, -3, 3);
      const Mat4 M = two_param_matrix(p, a, b);
      comm = std::max(comm, (M - one_param_matrix(j, b).matrix * one_param_matrix(i, a).matrix).max_abs());
      orth = std::max(orth, (M.transpose() * G * M - G).max_abs());
    }
    rec.residual(std::string(name(p)) + ": factors commute", comm, 1e-14);
    rec.residual(std::string(name(p)) + ": M^T G M = G", orth, 1e-12);
  }
}

// Finite-difference jets of surface_point in long double.
SurfaceJets fd_jets(const SurfaceSpec& spec, double t, double s, long double h) {
  auto f = [&](long double dt, long double ds) { return surface_point_extended(spec, t + dt, s + ds); };
  const auto c = f(0, 0);
  const auto tp1 = f(h, 0), tm1 = f(-h, 0), tp2 = f(2 * h, 0), tm2 = f(-2 * h, 0);
  const auto sp1 = f(0, h), sm1 = f(0, -h), sp2 = f(0, 2 * h), sm2 = f(0, -2 * h);
  const auto pp = f(h, h), pm = f(h, -h), mp = f(-h, h), mm = f(-h, -h);
  SurfaceJets j;
  for (std::size_t k = 0; k < 4; ++k) {
    j.S[k] = static_cast<double>(c[k]);
    j.St[k] = static_cast<double>((tm2[k] - 8 * tm1[k] + 8 * tp1[k] - tp2[k]) / (12 * h));
    j.Ss[k] = static_cast<double>((sm2[k] - 8 * sm1[k] + 8 * sp1[k] - sp2[k]) / (12 * h));
    j.Stt[k] = static_cast<double>((-tm2[k] + 16 * tm1[k] - 30 * c[k] + 16 * tp1[k] - tp2[k]) / (12 * h * h));
    j.Sss[k] = static_cast<double>((-sm2[k] + 16 * sm1[k] - 30 * c[k] + 16 * sp1[k] - sp2[k]) / (12 * h * h));
    j.Sts[k] = static_cast<double>((pp[k] - pm[k] - mp[k] + mm[k]) / (4 * h * h));
  }
  return j;
}

double jets_distance(const SurfaceJets& a, const SurfaceJets& b) {
  return std::max({(a.St - b.St).max_abs(), (a.Ss - b.Ss).max_abs(), (a.Stt - b.Stt).max_abs(),
                   (a.Sss - b.Sss).max_abs(), (a.Sts - b.Sts).max_abs()});
}

Frame rotate_normals(const Frame& f, double phi) {
  Frame out = f;
  if (f.eps[2] * f.eps[3] > 0) {
    out.e[2] = std::cos(phi) * f.e[2] + std::sin(phi) * f.e[3];
    out.e[3] = -std::sin(phi) * f.e[2] + std::cos(phi) * f.e[3];
  } else {
    out.e[2] = std::cosh(phi) * f.e[2] + std::sinh(phi) * f.e[3];
    out.e[3] = std::sinh(phi) * f.e[2] + std::cosh(phi) * f.e[3];
  }
  return out;
}

struct ClosedSummary {
  int points = 0, in_regime = 0;
  double h = 0.0, H = 0.0, K = 0.0;
};

void surfaces_suite(VerificationReport& report) {
  Recorder rec(report, "surfaces");
  std::mt19937_64 rng(kSeed + 3);
  constexpr int kPoints = 20;

  for (const SurfaceCase& c : builtin_surface_cases()) {
    const SurfaceSpec spec = SurfaceSpec::make(c.pair, builtin_curve(c.curve), true);
    const std::string tag = c.curve + "/" + std::string(name(c.pair)) + ": ";
    double reduced = 0.0, curve_fd = 0.0, jet_fd = 0.0, ortho = 0.0, zeros = 0.0, fdep = 0.0,
           iso = 0.0, fcoef = 0.0;
    ClosedSummary sum;
    for (int k = 0; k < kPoints; ++k) {
      const double t = uniform(rng, c.t_lo, c.t_hi), s = uniform(rng, c.s_lo, c.s_hi);
      reduced = std::max(reduced, (surface_point(spec, t, s) - reduced_surface_point(spec, t, s)).max_abs());
      curve_fd = std::max(curve_fd, fd_check(spec.curve, s, 1e-5));
      const SurfaceJets j = surface_jets(spec, t, s);
      jet_fd = std::max(jet_fd, jets_distance(j, fd_jets(spec, t, s, 1e-5L)));

      const Frame f = moving_frame(spec, t, s);
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          ortho = std::max(ortho, std::abs(inner(f.e[a], f.e[b]) - (a == b ? f.eps[a] : 0)));

      const SecondFundamental h = coordinate_projection(j, f);
      zeros = std::max({zeros, std::abs(h.h3_22), std::abs(h.h4_12)});

      const Frame of = oracle_frame(j);
      const SecondFundamental hf = frame_coefficients(j, of);
      const double K = gaussian_curvature_from(hf, of);
      const Frame rotated = rotate_normals(of, uniform(rng, -1, 1));
      fdep = std::max(fdep, relative_residual(gaussian_curvature_from(frame_coefficients(j, rotated), rotated), K));
      // Same K and H from the closed-form frame.
      const SecondFundamental hm = frame_coefficients(j, f);
      fcoef = std::max({fcoef, relative_residual(gaussian_curvature_from(hm, f), K),
                        relative_residual(mean_curvature_from(hm, f), mean_curvature_from(hf, of))});

      const Mat4 M = two_param_matrix(c.pair, uniform(rng, -1, 1), uniform(rng, -1, 1));
      const CurvatureReport r0 = curvature_report(spec, t, s);
      const CurvatureReport r1 = curvature_report(spec.with_isometry(M), t, s);
      iso = std::max({iso, relative_residual(r1.metric.E, r0.metric.E),
                      relative_residual(r1.metric.F, r0.metric.F),
                      relative_residual(r1.metric.G, r0.metric.G),
                      relative_residual(r1.h_oracle, r0.h_oracle),
                      relative_residual(r1.K_oracle, r0.K_oracle),
                      relative_residual(r1.H_norm_sq(), r0.H_norm_sq())});

      ++sum.points;
      if (r0.in_regime) ++sum.in_regime;
      sum.h = std::max(sum.h, r0.h_residual.value_or(0.0));
      sum.H = std::max(sum.H, r0.best_H_residual().value_or(0.0));
      sum.K = std::max(sum.K, r0.best_K_residual().value_or(0.0));
    }
    rec.residual(tag + "matrix product = reduced form", reduced, 1e-12);
    rec.residual(tag + "curve jets vs finite differences", curve_fd, 1e-6);
    rec.residual(tag + "surface jets vs finite differences", jet_fd, 1e-6);
    rec.residual(tag + "frame pseudo-orthonormal", ortho, 1e-9);
    rec.residual(tag + "h3_22 = h4_12 = 0", zeros, 1e-9);
    rec.residual(tag + "K independent of normal frame", fdep, 1e-8);
    rec.residual(tag + "closed-form frame gives oracle H, K", fcoef, 1e-9);
    rec.residual(tag + "isometry invariance of E,F,G,h,K,g(H,H)", iso, 1e-9);

    char line[400];
    std::snprintf(line, sizeof line,
                  "%s/%s closed form vs oracle over %d points (%d in the assumed causal regime): "
                  "max relative residual h %.3g, best H variant %.3g, best K variant %.3g",
                  c.curve.c_str(), std::string(name(c.pair)).c_str(), sum.points, sum.in_regime,
                  sum.h, sum.H, sum.K);
    report.info.emplace_back(line);
  }

  // Flat case.
  const SurfaceSpec flat = SurfaceSpec::make(RotationPair::Pair14, builtin_curve("lin14"), true);
  double flat_res = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    const double t = uniform(rng, -1.5, 1.5);
    const double s = (k % 2 ? 1.0 : -1.0) * uniform(rng, 0.1, 2.0);
    const CurvatureReport r = curvature_report(flat, t, s);
    for (double v : r.h_oracle.values()) flat_res = std::max(flat_res, std::abs(v));
    for (double v : r.h_closed->values()) flat_res = std::max(flat_res, std::abs(v));
    flat_res = std::max({flat_res, r.H_oracle.max_abs(), r.H_closed->max_abs(),
                         std::abs(r.K_oracle), std::abs(*r.K_closed)});
  }
  rec.residual("lin14/Pair14: h, H, K vanish on both paths", flat_res, 1e-9);

  bool degenerate = false;
  try {
    moving_frame(flat, 0.5, 0.0);
  } catch (const DegenerateFrame&) {
    degenerate = true;
  }
  rec.boolean("lin14/Pair14 frame degenerate at s = 0", degenerate);

  bool null_metric = false;
  try {
    induced_metric(SurfaceSpec::make(RotationPair::Pair14, curve_from_expressions("s,0,0,s"), true), 0.3, 0.7);
  } catch (const DegenerateMetric&) {
    null_metric = true;
  }
  rec.boolean("curve (s,0,0,s)/Pair14 has a degenerate metric", null_metric);
}

}  // namespace

VerificationReport run_verification(Suite suite, const VerifyOptions& options) {
  VerificationReport report;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Algebra) algebra_suite(report);
  if (all || suite == Suite::Killing) killing_suite(report);
  if (all || suite == Suite::Groups) groups_suite(report, options);
  if (all || suite == Suite::Surfaces) surfaces_suite(report);
  return report;
}

}  // namespace rotsurf
