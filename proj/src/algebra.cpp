#include "rotsurf/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rotsurf/error.hpp"

namespace rotsurf {

double Vec4::max_abs() const {
  double r = 0.0;
  for (double x : c) r = std::max(r, std::abs(x));
  return r;
}

double Vec4::euclidean_sq() const {
  double r = 0.0;
  for (double x : c) r += x * x;
  return r;
}

bool Vec4::is_finite() const {
  return std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); });
}

std::ostream& operator<<(std::ostream& os, const Vec4& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

Mat4 Mat4::transpose() const {
  Mat4 t;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) t.m[c][r] = m[r][c];
  return t;
}

double Mat4::max_abs() const {
  double r = 0.0;
  for (const auto& row : m)
    for (double x : row) r = std::max(r, std::abs(x));
  return r;
}

bool Mat4::is_finite() const {
  for (const auto& row : m)
    for (double x : row)
      if (!std::isfinite(x)) return false;
  return true;
}

Mat4& Mat4::operator+=(const Mat4& o) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m[r][c] += o.m[r][c];
  return *this;
}

Mat4& Mat4::operator-=(const Mat4& o) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m[r][c] -= o.m[r][c];
  return *this;
}

Mat4& Mat4::operator*=(double k) {
  for (auto& row : m)
    for (double& x : row) x *= k;
  return *this;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 p;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += a.m[r][k] * b.m[k][c];
      p.m[r][c] = acc;
    }
  return p;
}

Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) acc += a.m[r][k] * v[k];
    out[r] = acc;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat4& a) {
  for (std::size_t r = 0; r < 4; ++r) {
    os << '[';
    for (std::size_t c = 0; c < 4; ++c) os << (c ? ", " : "") << a.m[r][c];
    os << "]\n";
  }
  return os;
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::SpaceLike: return "space-like";
    case CausalCharacter::TimeLike: return "time-like";
    case CausalCharacter::Null: return "null";
  }
  return "?";
}

CausalCharacter causal_character(const Vec4& v) {
  const double q = inner(v, v);
  if (q > 0.0 || v == Vec4{}) return CausalCharacter::SpaceLike;
  if (q < 0.0) return CausalCharacter::TimeLike;
  return CausalCharacter::Null;
}

CausalCharacter causal_character(const Vec4& v, double tol) {
  if (v == Vec4{}) return CausalCharacter::SpaceLike;
  const double q = inner(v, v);
  if (std::abs(q) <= tol * v.euclidean_sq()) return CausalCharacter::Null;
  return q > 0.0 ? CausalCharacter::SpaceLike : CausalCharacter::TimeLike;
}

double norm(const Vec4& v) { return std::sqrt(std::abs(inner(v, v))); }

namespace {

double det3(double a, double b, double c,
            double d, double e, double f,
            double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Vec4 cross3(const Vec4& x, const Vec4& y, const Vec4& z) {
  Vec4 out;
  for (std::size_t j = 0; j < 4; ++j) {
    std::array<std::size_t, 3> cols{};
    std::size_t k = 0;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != j) cols[k++] = c;
    const double minor = det3(x[cols[0]], x[cols[1]], x[cols[2]],
                              y[cols[0]], y[cols[1]], y[cols[2]],
                              z[cols[0]], z[cols[1]], z[cols[2]]);
    const double cofactor_sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[j] = kSignature[j] * cofactor_sign * minor;
  }
  return out;
}

PseudoOrthogonality is_pseudo_orthogonal(const Mat4& M, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("is_pseudo_orthogonal: tol must be positive");
  const Mat4 G = metric_matrix();
  const double residual = (M.transpose() * G * M - G).max_abs();
  return {residual <= tol, residual};
}

Mat4 expm(const Mat4& M, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("expm: tol must be positive");
  if (!M.is_finite()) throw PreconditionError("expm: non-finite input");
  constexpr int kMaxTerms = 200;
  constexpr int kMinTerms = 4;

  Mat4 sum = Mat4::identity();
  Mat4 term = Mat4::identity();
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * M;
    term *= 1.0 / k;
    if (!term.is_finite()) break;
    if (k >= kMinTerms && term.max_abs() <= tol) return sum;
    sum += term;
  }
  throw FailedConvergence("expm: series did not converge within " +
                          std::to_string(kMaxTerms) + " terms");
}

QuadricResidual quadric_residual(const Vec4& p, const Quadric& q) {
  if (!(q.radius > 0.0)) throw PreconditionError("quadric_residual: radius must be positive");
  const Vec4 d = p - q.center;
  const double r2 = q.radius * q.radius;
  QuadricResidual out;
  switch (q.kind) {
    case QuadricKind::PseudoSphere:
      out.residual = inner(d, d) - r2;
      break;
    case QuadricKind::PseudoHyperbolic:
      out.residual = inner(d, d) + r2;
      break;
    case QuadricKind::Hyperbolic:
      out.residual = inner(d, d) + r2;
      out.positive_sheet = p[0] > 0.0;
      break;
  }
  return out;
}

}  // namespace rotsurf
