#pragma once

// Linear vector fields W(p) = A p on E^4_2, the six rotation generators and
// their Lie algebra.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rotsurf/algebra.hpp"

namespace rotsurf {

enum class GeneratorId { Omega1, Omega2, Omega3, Omega4, Omega5, Omega6 };

inline constexpr std::array<GeneratorId, 6> kAllGenerators{
    GeneratorId::Omega1, GeneratorId::Omega2, GeneratorId::Omega3,
    GeneratorId::Omega4, GeneratorId::Omega5, GeneratorId::Omega6};

constexpr std::size_t index(GeneratorId id) { return static_cast<std::size_t>(id); }

/// "Omega1" ... "Omega6".
std::string_view name(GeneratorId id);

/// Accepts "Omega3", "O3", "W3" or plain "3".
std::optional<GeneratorId> parse_generator(std::string_view text);

/// W(p) = matrix * p. Row index = output component, column = input coordinate.
struct LinearVectorField {
  Mat4 matrix{};

  Vec4 operator()(const Vec4& p) const { return matrix * p; }
  friend bool operator==(const LinearVectorField&, const LinearVectorField&) = default;
  friend LinearVectorField operator+(const LinearVectorField& a, const LinearVectorField& b) {
    return {a.matrix + b.matrix};
  }
  friend LinearVectorField operator*(double k, const LinearVectorField& a) { return {k * a.matrix}; }
};

/// Coefficients of the general Killing field
///   a(eta d_xi + xi d_eta) + b(theta d_rho + rho d_theta) + c(theta d_xi + xi d_theta)
/// + d(eta d_rho + rho d_eta) + e(theta d_eta - eta d_theta) + f(xi d_rho - rho d_xi).
/// The derivation restricts these to non-negative values; any real is accepted.
struct KillingCoefficients {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;

  friend KillingCoefficients operator+(const KillingCoefficients& x, const KillingCoefficients& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d, x.e + y.e, x.f + y.f};
  }
};

LinearVectorField generator(GeneratorId id);

/// a*Omega2 + b*Omega3 + c*Omega1 + d*Omega4 + e*Omega6 + f*Omega5.
LinearVectorField killing_field(const KillingCoefficients& k);

inline Vec4 evaluate_field(const LinearVectorField& F, const Vec4& p) { return F(p); }

/// L_W g for the flat metric: A^T G + G A. Zero iff W is a Killing field.
Mat4 lie_derivative_metric(const LinearVectorField& F);

/// [X, Y] with the coordinate formula sum (X^j d_j Y^i - Y^j d_j X^i) d_i.
/// For X = A p and Y = B p this is (B A - A B) p.
LinearVectorField bracket(const LinearVectorField& X, const LinearVectorField& Y);

/// Coordinates of a field in the basis Omega1..Omega6, or nullopt when the
/// matrix has a component outside the span (residual above tol).
std::optional<std::array<double, 6>> algebra_coordinates(const LinearVectorField& F,
                                                         double tol = 0.0);

/// One cell of the commutator table: zero, or sign * Omega_id.
struct BracketCell {
  int sign = 0;  ///< 0 for the zero field, otherwise +1 / -1
  GeneratorId id = GeneratorId::Omega1;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const BracketCell&, const BracketCell&) = default;
};

std::string to_string(const BracketCell& c);

class BracketTable {
 public:
  const BracketCell& at(GeneratorId row, GeneratorId col) const {
    return cells_[index(row)][index(col)];
  }
  BracketCell& at(GeneratorId row, GeneratorId col) { return cells_[index(row)][index(col)]; }

  /// Rendered as a 6x6 grid, row = left argument.
  std::string render() const;

 private:
  std::array<std::array<BracketCell, 6>, 6> cells_{};
};

/// All 36 brackets [Omega_i, Omega_j], each matched exactly against
/// +/-Omega_k or zero. Throws UnrecognizedBracket on anything else.
BracketTable bracket_table();

/// True iff [Omega_i, Omega_j] lies in span(ids) for every i, j in ids.
/// Throws EmptySet for an empty selection.
bool is_closed_subalgebra(std::span<const GeneratorId> ids);

}  // namespace rotsurf
