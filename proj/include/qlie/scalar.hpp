#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qlie/error.hpp"

namespace qlie {

/// Ground field: the rationals or a prime field GF(p).
class Field {
 public:
  enum class Kind : std::uint8_t { Rationals, Prime };

  constexpr Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "GF5", "GF(5)", "F5".
  static Field parse(std::string_view s);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(Field f) : Scalar(f, 0) {}
  Scalar(Field f, long v);
  static Scalar fraction(Field f, long num, long den);
  static Scalar from_mpq(Field f, const mpq_class& q);
  /// Integers or "p/q".
  static Scalar parse(Field f, std::string_view s);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Exact square test; 0 counts as a square.
  bool is_square() const;
  /// Exact square root if one exists in the field.
  std::optional<Scalar> sqrt() const;

  std::string str() const;
  /// Representative in [0, p) for GF(p); throws on Q.
  std::uint32_t residue() const;
  /// Exact value; throws on GF(p).
  const mpq_class& rational() const;
  /// Lossy conversion for display only.
  double approx() const;

 private:
  Scalar(Field f, std::uint32_t r, int) : field_(f), v_(r) {}
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qlie
