#include "qlie/poly.hpp"

namespace qlie {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (!(s.field() == f)) fail(Errc::FieldMismatch, "polynomial coefficient field");
  trim();
}

Poly Poly::constant(const Scalar& s) { return Poly(s.field(), {s}); }

Poly Poly::x(Field f) { return Poly(f, {Scalar(f, 0), Scalar(f, 1)}); }

Poly Poly::linear(const Scalar& a) { return Poly(a.field(), {-a, Scalar(a.field(), 1)}); }

Poly Poly::from_roots(Field f, const std::vector<Scalar>& roots) {
  Poly r = constant(Scalar(f, 1));
  for (const auto& a : roots) r = r * linear(a);
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(field_, 0);
  return c_[i];
}

const Scalar& Poly::leading() const {
  if (c_.empty()) fail(Errc::PreconditionViolated, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) fail(Errc::FieldMismatch, "polynomial sum");
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(a.field_, 0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) fail(Errc::FieldMismatch, "polynomial product");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(a.field_, 0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
  Poly r = p;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly r = *this;
  if (degree() < d.degree()) return {Poly(field_), r};
  std::vector<Scalar> q(degree() - d.degree() + 1, Scalar(field_, 0));
  Scalar inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Scalar t = r.leading() * inv;
    q[k] = t;
    for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] -= t * d.c_[i];
    r.trim();
  }
  return {Poly(field_, std::move(q)), r};
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r(field_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int Poly::root_multiplicity(const Scalar& a) const {
  if (is_zero()) fail(Errc::PreconditionViolated, "root multiplicity in zero polynomial");
  int m = 0;
  Poly p = *this;
  Poly l = linear(a);
  for (;;) {
    auto [q, r] = p.divmod(l);
    if (!r.is_zero()) return m;
    ++m;
    p = q;
  }
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& s = c_[i];
    if (s.is_zero()) continue;
    std::string v = s.str();
    bool neg = field_.is_rationals() && v[0] == '-';
    if (neg) v.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = v == "1";
    if (i == 0)
      out += v;
    else {
      if (!unit) out += v + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Bezout poly_gcd_bezout(const Poly& a, const Poly& b) {
  Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(Scalar(f, 1)), u1(f);
  Poly v0(f), v1 = Poly::constant(Scalar(f, 1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Scalar inv = r0.leading().inverse();
  return {inv * r0, inv * u0, inv * v0};
}

}  // namespace qlie
