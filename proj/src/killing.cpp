#include "rotsurf/killing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rotsurf/error.hpp"

namespace rotsurf {

std::string_view name(GeneratorId id) {
  static constexpr std::array<std::string_view, 6> kNames{"Omega1", "Omega2", "Omega3",
                                                          "Omega4", "Omega5", "Omega6"};
  return kNames[index(id)];
}

std::optional<GeneratorId> parse_generator(std::string_view text) {
  for (std::string_view prefix : {"Omega", "O", "W"}) {
    if (text.substr(0, prefix.size()) == prefix) {
      text.remove_prefix(prefix.size());
      break;
    }
  }
  if (text.size() != 1 || text[0] < '1' || text[0] > '6') return std::nullopt;
  return static_cast<GeneratorId>(text[0] - '1');
}

LinearVectorField generator(GeneratorId id) {
  Mat4 a;
  switch (id) {
    case GeneratorId::Omega1:  // theta d_xi + xi d_theta
      a(0, 2) = a(2, 0) = 1.0;
      break;
    case GeneratorId::Omega2:  // eta d_xi + xi d_eta
      a(0, 3) = a(3, 0) = 1.0;
      break;
    case GeneratorId::Omega3:  // theta d_rho + rho d_theta
      a(1, 2) = a(2, 1) = 1.0;
      break;
    case GeneratorId::Omega4:  // eta d_rho + rho d_eta
      a(1, 3) = a(3, 1) = 1.0;
      break;
    case GeneratorId::Omega5:  // xi d_rho - rho d_xi
      a(1, 0) = 1.0;
      a(0, 1) = -1.0;
      break;
    case GeneratorId::Omega6:  // theta d_eta - eta d_theta
      a(3, 2) = 1.0;
      a(2, 3) = -1.0;
      break;
  }
  return {a};
}

LinearVectorField killing_field(const KillingCoefficients& k) {
  using enum GeneratorId;
  return k.a * generator(Omega2) + k.b * generator(Omega3) + k.c * generator(Omega1) +
         k.d * generator(Omega4) + k.e * generator(Omega6) + k.f * generator(Omega5);
}

Mat4 lie_derivative_metric(const LinearVectorField& F) {
  const Mat4 G = metric_matrix();
  return F.matrix.transpose() * G + G * F.matrix;
}

LinearVectorField bracket(const LinearVectorField& X, const LinearVectorField& Y) {
  return {Y.matrix * X.matrix - X.matrix * Y.matrix};
}

std::optional<std::array<double, 6>> algebra_coordinates(const LinearVectorField& F,
                                                         double tol) {
  // The generators have disjoint supports, so the Frobenius projection onto
  // each one is exact; whatever remains is outside the span.
  std::array<double, 6> coords{};
  Mat4 rest = F.matrix;
  for (GeneratorId id : kAllGenerators) {
    const Mat4& b = generator(id).matrix;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        num += F.matrix(r, c) * b(r, c);
        den += b(r, c) * b(r, c);
      }
    coords[index(id)] = num / den;
    rest -= (num / den) * b;
  }
  if (rest.max_abs() > tol) return std::nullopt;
  return coords;
}

std::string to_string(const BracketCell& c) {
  if (c.is_zero()) return "0";
  return std::string(c.sign > 0 ? "+" : "-") + std::string(name(c.id));
}

std::string BracketTable::render() const {
  std::ostringstream os;
  auto pad = [&os](const std::string& s) {
    os << s << std::string(s.size() < 9 ? 9 - s.size() : 1, ' ');
  };
  pad("[row,col]");
  for (GeneratorId col : kAllGenerators) pad(std::string(name(col)));
  os << '\n';
  for (GeneratorId row : kAllGenerators) {
    pad(std::string(name(row)));
    for (GeneratorId col : kAllGenerators) pad(to_string(at(row, col)));
    os << '\n';
  }
  return os.str();
}

namespace {

BracketCell match_cell(const LinearVectorField& F, GeneratorId row, GeneratorId col) {
  const auto coords = algebra_coordinates(F, 0.0);
  auto fail = [&] {
    return UnrecognizedBracket("bracket [" + std::string(name(row)) + ", " +
                               std::string(name(col)) + "] is not +/- a generator or zero");
  };
  if (!coords) throw fail();
  BracketCell cell;
  int nonzero = 0;
  for (GeneratorId id : kAllGenerators) {
    const double c = (*coords)[index(id)];
    if (c == 0.0) continue;
    if (c != 1.0 && c != -1.0) throw fail();
    ++nonzero;
    cell.sign = c > 0.0 ? 1 : -1;
    cell.id = id;
  }
  if (nonzero > 1) throw fail();
  return cell;
}

}  // namespace

BracketTable bracket_table() {
  BracketTable table;
  for (GeneratorId row : kAllGenerators)
    for (GeneratorId col : kAllGenerators)
      table.at(row, col) = match_cell(bracket(generator(row), generator(col)), row, col);
  return table;
}

bool is_closed_subalgebra(std::span<const GeneratorId> ids) {
  if (ids.empty()) throw EmptySet("is_closed_subalgebra: empty generator set");
  auto in_set = [&](GeneratorId id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  for (GeneratorId x : ids)
    for (GeneratorId y : ids) {
      const auto coords = algebra_coordinates(bracket(generator(x), generator(y)), 0.0);
      if (!coords) return false;
      for (GeneratorId id : kAllGenerators)
        if ((*coords)[index(id)] != 0.0 && !in_set(id)) return false;
    }
  return true;
}

}  // namespace rotsurf
