#pragma once

// Linear algebra in the pseudo-Euclidean space E^4_2, metric signature (-,-,+,+).
// Coordinates are ordered (xi, rho, theta, eta) = (x1, x2, x3, x4); all indices
// in code are 0-based.

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>

namespace rotsurf {

struct Vec4 {
  std::array<double, 4> c{};

  constexpr Vec4() = default;
  constexpr Vec4(double x1, double x2, double x3, double x4) : c{x1, x2, x3, x4} {}

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  static constexpr Vec4 basis(std::size_t i) {
    Vec4 v;
    v.c[i] = 1.0;
    return v;
  }

  constexpr Vec4& operator+=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Vec4& operator-=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Vec4& operator*=(double k) {
    for (auto& x : c) x *= k;
    return *this;
  }

  friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend constexpr Vec4 operator-(Vec4 a) { return a *= -1.0; }
  friend constexpr Vec4 operator*(double k, Vec4 a) { return a *= k; }
  friend constexpr Vec4 operator*(Vec4 a, double k) { return a *= k; }
  friend constexpr Vec4 operator/(Vec4 a, double k) { return a *= (1.0 / k); }
  friend constexpr bool operator==(const Vec4&, const Vec4&) = default;

  /// Largest absolute component.
  double max_abs() const;
  /// Squared Euclidean length; used only for scale estimates.
  double euclidean_sq() const;
  bool is_finite() const;
};

std::ostream& operator<<(std::ostream& os, const Vec4& v);

/// 4x4 real matrix, row = output index.
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  constexpr double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  constexpr double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  static constexpr Mat4 zero() { return {}; }
  static constexpr Mat4 identity() {
    Mat4 a;
    for (std::size_t i = 0; i < 4; ++i) a.m[i][i] = 1.0;
    return a;
  }
  static constexpr Mat4 diagonal(double a, double b, double c, double d) {
    Mat4 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    r.m[3][3] = d;
    return r;
  }

  Mat4 transpose() const;
  double max_abs() const;
  bool is_finite() const;

  Mat4& operator+=(const Mat4& o);
  Mat4& operator-=(const Mat4& o);
  Mat4& operator*=(double k);

  friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
  friend Mat4 operator-(Mat4 a) { return a *= -1.0; }
  friend Mat4 operator*(double k, Mat4 a) { return a *= k; }
  friend Mat4 operator*(Mat4 a, double k) { return a *= k; }
  friend Mat4 operator*(const Mat4& a, const Mat4& b);
  friend Vec4 operator*(const Mat4& a, const Vec4& v);
  friend constexpr bool operator==(const Mat4&, const Mat4&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat4& a);

/// Diagonal of the metric g = -dx1^2 - dx2^2 + dx3^2 + dx4^2.
inline constexpr std::array<double, 4> kSignature{-1.0, -1.0, 1.0, 1.0};

/// Matrix form G of the metric; G = G^T and G^2 = I.
constexpr Mat4 metric_matrix() { return Mat4::diagonal(-1.0, -1.0, 1.0, 1.0); }

/// g(u, v) = -u1 v1 - u2 v2 + u3 v3 + u4 v4.
constexpr double inner(const Vec4& u, const Vec4& v) {
  return -u[0] * v[0] - u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

enum class CausalCharacter { SpaceLike, TimeLike, Null };

const char* to_string(CausalCharacter c);

/// Exact classification: space-like if g(v,v) > 0 or v = 0, time-like if
/// g(v,v) < 0, null otherwise.
CausalCharacter causal_character(const Vec4& v);

/// Classification that treats |g(v,v)| <= tol * |v|^2 (Euclidean) as null.
CausalCharacter causal_character(const Vec4& v, double tol);

/// sqrt(|g(v,v)|). The absolute value keeps the norm real on time-like vectors.
double norm(const Vec4& v);

/// Ternary cross product: cofactor expansion of the determinant whose first
/// row is (-i1, -i2, i3, i4) and whose remaining rows are x, y, z.
/// The result is g-orthogonal to x, y and z.
Vec4 cross3(const Vec4& x, const Vec4& y, const Vec4& z);

struct PseudoOrthogonality {
  bool holds = false;
  double residual = 0.0;  ///< max |(M^T G M - G)_ij|
};

/// Tests M^T G M = G entrywise against tol. Throws PreconditionError if tol <= 0.
PseudoOrthogonality is_pseudo_orthogonal(const Mat4& M, double tol);

/// Exponential series I + M + M^2/2! + ..., stopped once the next term's
/// max-abs entry is <= tol and at least four terms have been summed.
/// Throws FailedConvergence past 200 terms.
Mat4 expm(const Mat4& M, double tol);

enum class QuadricKind { PseudoSphere, PseudoHyperbolic, Hyperbolic };

/// S^3_2(m, r), H^3_1(m, r) or H^3(m, r).
struct Quadric {
  QuadricKind kind = QuadricKind::PseudoSphere;
  Vec4 center{};
  double radius = 1.0;
};

struct QuadricResidual {
  /// <p-m, p-m> - r^2 on the pseudo-sphere, <p-m, p-m> + r^2 otherwise.
  double residual = 0.0;
  /// Only set for the hyperbolic space: whether p1 > 0.
  std::optional<bool> positive_sheet;
};

/// Throws PreconditionError unless r > 0.
QuadricResidual quadric_residual(const Vec4& p, const Quadric& q);

}  // namespace rotsurf
