#include "rotsurf/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/killing.hpp"
#include "rotsurf/mesh.hpp"
#include "rotsurf/verify.hpp"

namespace rotsurf {

namespace {

struct SurfaceArgs {
  std::string pair;
  std::string curve;
  std::vector<std::string> params;
  std::string reparam1 = "t";
  std::string reparam2 = "t";
  bool general = false;
};

struct GridArgs {
  std::string grid = "3x3";
  std::string trange = "0:1";
  std::string srange = "1:2";
  std::string format = "csv";
  std::string project = "1,3,4";
  std::string out;
  unsigned threads = 1;
};

void add_surface_options(CLI::App* cmd, SurfaceArgs& a) {
  cmd->add_option("--pair", a.pair, "Commuting generator pair: 14, 23 or 56")->required();
  cmd->add_option("--curve", a.curve,
                  "Builtin curve (ex1 ex2 ex3 lin14 cosh14 cosh56) or four comma-separated "
                  "expressions in s")
      ->required();
  cmd->add_option("--param", a.params, "Named constant for the curve, e.g. c=2 (repeatable)");
  cmd->add_option("--reparam1", a.reparam1, "First rotation parameter as an expression in t")
      ->capture_default_str();
  cmd->add_option("--reparam2", a.reparam2, "Second rotation parameter as an expression in t")
      ->capture_default_str();
  cmd->add_flag("--general", a.general,
                "Skip the reduced closed forms even when the curve allows them");
}

void add_grid_options(CLI::App* cmd, GridArgs& g) {
  cmd->add_option("--grid", g.grid, "Samples NTxNS")->capture_default_str();
  cmd->add_option("--trange", g.trange, "t interval a:b")->capture_default_str();
  cmd->add_option("--srange", g.srange, "s interval a:b")->capture_default_str();
  cmd->add_option("--format", g.format, "csv, json or obj")->capture_default_str();
  cmd->add_option("--project", g.project, "Coordinates kept by obj output")->capture_default_str();
  cmd->add_option("--out", g.out, "Output file (default: standard output)");
  cmd->add_option("--threads", g.threads, "Worker threads for sampling")->capture_default_str();
}

Expression::Params parse_params(const std::vector<std::string>& items) {
  Expression::Params params;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("--param expects name=value, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw ParseError("--param " + item.substr(0, eq) + ": not a number: '" + value + "'");
    params[item.substr(0, eq)] = v;
  }
  return params;
}

SurfaceSpec build_spec(const SurfaceArgs& a, const std::string& srange) {
  const auto pair = parse_pair(a.pair);
  if (!pair) throw ParseError("--pair must be 14, 23 or 56, got '" + a.pair + "'");
  const Expression::Params params = parse_params(a.params);

  Curve4 curve;
  if (is_builtin_curve(a.curve)) {
    curve = builtin_curve(a.curve, params);
  } else if (a.curve.find(',') == std::string::npos) {
    throw UnknownCurve("unknown builtin curve '" + a.curve + "'");
  } else {
    try {
      curve = curve_from_expressions(a.curve, params);
    } catch (const PreconditionError&) {
      // A curve with a division gets the sampled s-range as its domain.
      const auto [lo, hi] = parse_range(srange);
      curve = curve_from_expressions(a.curve, params, Interval{lo, hi});
    }
  }

  auto r1 = ScalarFunction::parse(a.reparam1, "t", params);
  auto r2 = ScalarFunction::parse(a.reparam2, "t", params);
  if (a.general) return SurfaceSpec::make(*pair, std::move(curve), false, r1, r2);
  try {
    return SurfaceSpec::make(*pair, curve, true, r1, r2);
  } catch (const PreconditionError&) {
    return SurfaceSpec::make(*pair, std::move(curve), false, r1, r2);
  }
}

GridSpec build_grid(const GridArgs& g) {
  GridSpec grid;
  std::tie(grid.nt, grid.ns) = parse_grid_size(g.grid);
  std::tie(grid.t_min, grid.t_max) = parse_range(g.trange);
  std::tie(grid.s_min, grid.s_max) = parse_range(g.srange);
  grid.validate();
  return grid;
}

int write_mesh(const MeshGrid& mesh, const GridArgs& g, std::ostream& out) {
  const auto format = parse_format(g.format);
  if (!format) throw ParseError("--format must be csv, json or obj, got '" + g.format + "'");
  const Projection projection = parse_projection(g.project);
  if (g.out.empty()) {
    export_mesh(mesh, *format, out, projection);
    return kExitOk;
  }
  std::ostringstream buffer;
  export_mesh(mesh, *format, buffer, projection);
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw PreconditionError("cannot open '" + g.out + "' for writing");
  file << buffer.str();
  if (!file) throw PreconditionError("failed writing '" + g.out + "'");
  return kExitOk;
}

std::string num(double v) { return format_double(v); }

std::string vec(const Vec4& v) {
  return "(" + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + ", " + num(v[3]) + ")";
}

void print_report(const SurfaceSpec& spec, const CurvatureReport& r, std::ostream& out) {
  out << "surface   " << describe(spec) << '\n';
  out << "point     t=" << num(r.t) << " s=" << num(r.s) << '\n';
  out << "metric    E=" << num(r.metric.E) << " F=" << num(r.metric.F) << " G=" << num(r.metric.G)
      << '\n';
  out << "causal    S_t " << to_string(r.metric.sign_t) << ", S_s " << to_string(r.metric.sign_s)
      << (r.in_regime ? " (assumed regime)" : " (outside the assumed regime)") << '\n';
  out << "eps       " << r.frame.eps[0] << ' ' << r.frame.eps[1] << ' ' << r.frame.eps[2] << ' '
      << r.frame.eps[3] << '\n';
  for (std::size_t i = 0; i < 4; ++i) out << "e" << i + 1 << "        " << vec(r.frame.e[i]) << '\n';
  auto h_line = [&out](const char* label, const SecondFundamental& h) {
    out << label << " h3_11=" << num(h.h3_11) << " h3_12=" << num(h.h3_12)
        << " h3_22=" << num(h.h3_22) << " h4_11=" << num(h.h4_11) << " h4_12=" << num(h.h4_12)
        << " h4_22=" << num(h.h4_22) << '\n';
  };
  h_line("h_oracle ", r.h_oracle);
  h_line("h_frame  ", r.h_frame);
  if (r.h_closed) h_line("h_closed ", *r.h_closed);
  out << "H_oracle  " << vec(r.H_oracle) << "  g(H,H)=" << num(r.H_norm_sq()) << '\n';
  if (r.H_closed) out << "H_closed  " << vec(*r.H_closed) << '\n';
  out << "K_oracle  " << num(r.K_oracle) << '\n';
  if (r.K_closed) out << "K_closed  " << num(*r.K_closed) << '\n';
  for (const auto& v : r.H_variants) out << "H variant " << v.label << ": residual " << num(v.residual) << '\n';
  for (const auto& v : r.K_variants) out << "K variant " << v.label << ": residual " << num(v.residual) << '\n';
  for (const auto& f : r.findings) out << "finding   " << f << '\n';
}

std::pair<double, double> parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--at expects t,s");
  return parse_range(text.substr(0, comma) + ":" + text.substr(comma + 1));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotational surfaces in the pseudo-Euclidean space E^4_2", "rotsurf"};
  app.require_subcommand(1);

  std::string suite_name = "all";
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite_name, "algebra, killing, groups, surfaces or all")
      ->capture_default_str();
  auto* tol_opt = verify->add_option("--tol", tol, "Threshold for the closed-form vs series check");

  auto* brackets = app.add_subcommand("brackets", "Print the commutator table of Omega1..Omega6");

  SurfaceArgs sample_surface;
  GridArgs sample_grid_args;
  auto* sample = app.add_subcommand("sample", "Sample surface points on a (t, s) grid and export");
  add_surface_options(sample, sample_surface);
  add_grid_options(sample, sample_grid_args);

  SurfaceArgs curv_surface;
  GridArgs curv_grid;
  std::string at;
  auto* curvature = app.add_subcommand(
      "curvature", "Curvature report at one point (--at t,s) or a grid export with K and g(H,H)");
  add_surface_options(curvature, curv_surface);
  add_grid_options(curvature, curv_grid);
  curvature->add_option("--at", at, "Single point t,s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto suite = parse_suite(suite_name);
      if (!suite) {
        err << "unknown suite '" << suite_name << "'\n";
        return kExitUsage;
      }
      VerifyOptions options;
      if (*tol_opt) {
        if (!(tol > 0.0)) {
          err << "--tol must be positive\n";
          return kExitUsage;
        }
        options.tol = tol;
      }
      const VerificationReport report = run_verification(*suite, options);
      report.print(out);
      return report.all_passed() ? kExitOk : kExitVerificationFailed;
    }
    if (brackets->parsed()) {
      out << bracket_table().render();
      return kExitOk;
    }
    if (sample->parsed()) {
      const SurfaceSpec spec = build_spec(sample_surface, sample_grid_args.srange);
      const MeshGrid mesh =
          sample_grid(spec, build_grid(sample_grid_args), false, sample_grid_args.threads);
      return write_mesh(mesh, sample_grid_args, out);
    }
    if (curvature->parsed()) {
      const SurfaceSpec spec = build_spec(curv_surface, curv_grid.srange);
      if (!at.empty()) {
        const auto [t, s] = parse_point(at);
        print_report(spec, curvature_report(spec, t, s), out);
        return kExitOk;
      }
      const MeshGrid mesh = sample_grid(spec, build_grid(curv_grid), true, curv_grid.threads);
      return write_mesh(mesh, curv_grid, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rotsurf
