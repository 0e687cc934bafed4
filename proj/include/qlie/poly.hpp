#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

/// Univariate polynomial, coefficients stored lowest degree first.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& s);
  static Poly x(Field f);
  /// X - a
  static Poly linear(const Scalar& a);
  /// Product of (X - r) over the given roots.
  static Poly from_roots(Field f, const std::vector<Scalar>& roots);

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Quotient and remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Scalar eval(const Scalar& x) const;
  /// Multiplicity of a as a root.
  int root_multiplicity(const Scalar& a) const;

  std::string str(const std::string& var = "X") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

struct Bezout {
  Poly g, u, v;  // u*a + v*b = g, g monic
};

Bezout poly_gcd_bezout(const Poly& a, const Poly& b);

}  // namespace qlie
