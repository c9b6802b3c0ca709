#include "rotsurf/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"

namespace rotsurf {

void GridSpec::validate() const {
  if (nt < 2 || ns < 2) throw PreconditionError("grid needs at least 2 samples per direction");
  if (!(t_min < t_max)) throw PreconditionError("grid t-range must satisfy t_min < t_max");
  if (!(s_min < s_max)) throw PreconditionError("grid s-range must satisfy s_min < s_max");
}

double GridSpec::t_at(int i) const {
  return i == nt - 1 ? t_max : t_min + (t_max - t_min) * i / (nt - 1);
}

double GridSpec::s_at(int k) const {
  return k == ns - 1 ? s_max : s_min + (s_max - s_min) * k / (ns - 1);
}

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

std::pair<int, int> parse_grid_size(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw ParseError("grid must look like NTxNS, got '" + std::string(text) + "'");
  return {parse_int(text.substr(0, x), "grid"), parse_int(text.substr(x + 1), "grid")};
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto c = text.find(':');
  if (c == std::string_view::npos) throw ParseError("range must look like a:b, got '" + std::string(text) + "'");
  return {parse_number(text.substr(0, c), "range"), parse_number(text.substr(c + 1), "range")};
}

std::string describe(const SurfaceSpec& spec) {
  std::string out = std::string(name(spec.pair)) + " curve=" + spec.curve.name +
                    " reparam1=" + spec.reparam1.label() + " reparam2=" + spec.reparam2.label();
  if (spec.restricted) out += " restricted";
  if (spec.isometry) out += " isometry";
  return out;
}

namespace {

MeshVertex sample_vertex(const SurfaceSpec& spec, double t, double s, bool with_curvature) {
  MeshVertex v;
  v.t = t;
  v.s = s;
  v.position = surface_point(spec, t, s);
  if (!with_curvature) return v;
  try {
    const CurvatureReport r = curvature_report(spec, t, s);
    if (std::isfinite(r.K_oracle) && std::isfinite(r.H_norm_sq())) {
      v.K = r.K_oracle;
      v.H_norm_sq = r.H_norm_sq();
    } else {
      v.degenerate = true;
    }
  } catch (const DegenerateMetric&) {
    v.degenerate = true;
  } catch (const DegenerateFrame&) {
    v.degenerate = true;
  }
  return v;
}

}  // namespace

MeshGrid sample_grid(const SurfaceSpec& spec, const GridSpec& grid, bool with_curvature,
                     unsigned threads) {
  grid.validate();
  if (!spec.curve.domain.contains(grid.s_min) || !spec.curve.domain.contains(grid.s_max))
    throw DomainViolation("curve domain does not cover the s-range");

  MeshGrid mesh;
  mesh.grid = grid;
  mesh.description = describe(spec);
  mesh.with_curvature = with_curvature;
  mesh.vertices.resize(static_cast<std::size_t>(grid.nt * grid.ns));

  auto fill_row = [&](int i) {
    for (int k = 0; k < grid.ns; ++k)
      mesh.vertices[static_cast<std::size_t>(i * grid.ns + k)] =
          sample_vertex(spec, grid.t_at(i), grid.s_at(k), with_curvature);
  };

  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(grid.nt));
  if (workers == 1) {
    for (int i = 0; i < grid.nt; ++i) fill_row(i);
    return mesh;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = static_cast<int>(w); i < grid.nt; i += static_cast<int>(workers)) fill_row(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return mesh;
}

std::optional<ExportFormat> parse_format(std::string_view text) {
  if (text == "csv") return ExportFormat::Csv;
  if (text == "json") return ExportFormat::Json;
  if (text == "obj") return ExportFormat::Obj;
  return std::nullopt;
}

namespace {

void validate_projection(const Projection& p) {
  for (std::size_t a = 0; a < 3; ++a) {
    if (p[a] < 1 || p[a] > 4) throw BadProjection("projection indices must lie in 1..4");
    for (std::size_t b = a + 1; b < 3; ++b)
      if (p[a] == p[b]) throw BadProjection("projection indices must be distinct");
  }
}

}  // namespace

Projection parse_projection(std::string_view text) {
  Projection p{};
  std::size_t n = 0;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
    if (n == 3) throw BadProjection("projection needs exactly 3 indices");
    try {
      p[n++] = parse_int(part, "projection");
    } catch (const ParseError& e) {
      throw BadProjection(e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != 3) throw BadProjection("projection needs exactly 3 indices");
  validate_projection(p);
  return p;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void export_csv(const MeshGrid& mesh, std::ostream& out) {
  out << "t,s,x1,x2,x3,x4,K,H2\n";
  for (const MeshVertex& v : mesh.vertices) {
    out << format_double(v.t) << ',' << format_double(v.s);
    for (std::size_t c = 0; c < 4; ++c) out << ',' << format_double(v.position[c]);
    out << ',' << (v.K ? format_double(*v.K) : "");
    out << ',' << (v.H_norm_sq ? format_double(*v.H_norm_sq) : "");
    out << '\n';
  }
}

void export_json(const MeshGrid& mesh, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json doc;
  const GridSpec& g = mesh.grid;
  doc["provenance"] = {
      {"surface", mesh.description},
      {"grid",
       {{"t_min", g.t_min}, {"t_max", g.t_max}, {"s_min", g.s_min}, {"s_max", g.s_max},
        {"nt", g.nt}, {"ns", g.ns}}},
      {"with_curvature", mesh.with_curvature},
  };
  ordered_json vertices = ordered_json::array();
  for (const MeshVertex& v : mesh.vertices) {
    ordered_json jv;
    jv["t"] = v.t;
    jv["s"] = v.s;
    jv["x1"] = v.position[0];
    jv["x2"] = v.position[1];
    jv["x3"] = v.position[2];
    jv["x4"] = v.position[3];
    jv["K"] = v.K ? ordered_json(*v.K) : ordered_json(nullptr);
    jv["H2"] = v.H_norm_sq ? ordered_json(*v.H_norm_sq) : ordered_json(nullptr);
    vertices.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vertices);
  out << doc.dump(2) << '\n';
}

void export_obj(const MeshGrid& mesh, std::ostream& out, Projection projection) {
  validate_projection(projection);
  for (const MeshVertex& v : mesh.vertices) {
    out << 'v';
    for (int c : projection) out << ' ' << format_double(v.position[static_cast<std::size_t>(c - 1)]);
    out << '\n';
  }
  const int nt = mesh.grid.nt, ns = mesh.grid.ns;
  for (int i = 0; i + 1 < nt; ++i) {
    for (int k = 0; k + 1 < ns; ++k) {
      const int a = i * ns + k, b = i * ns + k + 1, c = (i + 1) * ns + k + 1, d = (i + 1) * ns + k;
      const bool skip = mesh.at(i, k).degenerate || mesh.at(i, k + 1).degenerate ||
                        mesh.at(i + 1, k + 1).degenerate || mesh.at(i + 1, k).degenerate;
      if (skip) continue;
      out << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << ' ' << d + 1 << '\n';
    }
  }
}

void export_mesh(const MeshGrid& mesh, ExportFormat format, std::ostream& out,
                 Projection projection) {
  switch (format) {
    case ExportFormat::Csv: export_csv(mesh, out); break;
    case ExportFormat::Json: export_json(mesh, out); break;
    case ExportFormat::Obj: export_obj(mesh, out, projection); break;
  }
}

}  // namespace rotsurf
