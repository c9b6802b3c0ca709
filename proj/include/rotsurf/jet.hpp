#pragma once

// Second-order forward-mode differentiation: a Jet2 carries (f, f', f'') and
// every operation propagates them through the chain rule.

namespace rotsurf {

struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
  static constexpr Jet2 variable(double s) { return {s, 1.0, 0.0}; }

  bool is_finite() const;

  friend constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
  }
  friend constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
  }
  friend constexpr Jet2 operator-(const Jet2& a) { return {-a.value, -a.d1, -a.d2}; }
  friend constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
  }
  friend constexpr Jet2 operator*(double k, const Jet2& a) { return {k * a.value, k * a.d1, k * a.d2}; }
  friend Jet2 operator/(const Jet2& a, const Jet2& b);
  friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

/// Composition with a scalar function given its value and first two derivatives at a.value.
constexpr Jet2 chain(const Jet2& a, double f, double df, double d2f) {
  return {f, df * a.d1, d2f * a.d1 * a.d1 + df * a.d2};
}

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
/// Power rule with a constant exponent; valid for negative bases when k is an integer.
Jet2 pow(const Jet2& a, double k);
/// General power. Falls back to pow(a, k) when b is constant.
Jet2 pow(const Jet2& a, const Jet2& b);

}  // namespace rotsurf
