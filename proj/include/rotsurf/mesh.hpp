#pragma once

// Uniform (t, s) sampling of a surface and CSV / JSON / OBJ export.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rotsurf/surface.hpp"

namespace rotsurf {

struct GridSpec {
  double t_min = 0.0, t_max = 1.0;
  double s_min = 0.0, s_max = 1.0;
  int nt = 2, ns = 2;

  /// Throws PreconditionError unless nt, ns >= 2 and both ranges are increasing.
  void validate() const;
  double t_at(int i) const;
  double s_at(int k) const;
};

/// "NTxNS", e.g. "3x5". Throws ParseError.
std::pair<int, int> parse_grid_size(std::string_view text);
/// "a:b". Throws ParseError.
std::pair<double, double> parse_range(std::string_view text);

struct MeshVertex {
  double t = 0.0, s = 0.0;
  Vec4 position;
  std::optional<double> K;        ///< empty at degenerate points or when not requested
  std::optional<double> H_norm_sq;  ///< g(H, H)
  bool degenerate = false;
};

struct MeshGrid {
  GridSpec grid;
  std::string description;  ///< provenance: pair, curve, reparametrizations
  bool with_curvature = false;
  std::vector<MeshVertex> vertices;  ///< row-major: index = i * ns + k

  const MeshVertex& at(int i, int k) const {
    return vertices[static_cast<std::size_t>(i * grid.ns + k)];
  }
};

/// Human-readable provenance string for a spec.
std::string describe(const SurfaceSpec& spec);

/// Samples the grid inclusive of the endpoints. Degenerate points are marked,
/// not fatal. `threads` > 1 evaluates rows concurrently; the output order is
/// the same. Throws DomainViolation if the curve domain misses [s_min, s_max].
MeshGrid sample_grid(const SurfaceSpec& spec, const GridSpec& grid, bool with_curvature,
                     unsigned threads = 1);

enum class ExportFormat { Csv, Json, Obj };
std::optional<ExportFormat> parse_format(std::string_view text);

/// 1-based coordinate indices used by OBJ output.
using Projection = std::array<int, 3>;
inline constexpr Projection kDefaultProjection{1, 3, 4};

/// "i,j,k" of distinct indices in 1..4. Throws BadProjection.
Projection parse_projection(std::string_view text);

void export_csv(const MeshGrid& mesh, std::ostream& out);
void export_json(const MeshGrid& mesh, std::ostream& out);
/// Throws BadProjection unless the indices are distinct and in 1..4.
void export_obj(const MeshGrid& mesh, std::ostream& out, Projection projection = kDefaultProjection);
void export_mesh(const MeshGrid& mesh, ExportFormat format, std::ostream& out,
                 Projection projection = kDefaultProjection);

/// %.17g rendering shared by all writers.
std::string format_double(double v);

}  // namespace rotsurf
