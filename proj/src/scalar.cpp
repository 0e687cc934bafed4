#include "qlie/scalar.hpp"

#include <charconv>
#include <sstream>

namespace qlie {

std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MinusOneNotSimple: return "MinusOneNotSimple";
    case Errc::CharTwo: return "CharTwo";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Unstabilized: return "Unstabilized";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::NotBraided: return "NotBraided";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

// Tonelli-Shanks; a must be a nonzero quadratic residue.
std::uint32_t sqrt_mod(std::uint32_t a, std::uint32_t p) {
  if (p == 2) return a;
  std::uint32_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint32_t m = s;
  std::uint32_t c = powmod(z, q, p);
  std::uint32_t t = powmod(a, q, p);
  std::uint32_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint32_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 + i < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) fail(Errc::UnsupportedField, "GF(" + std::to_string(p) + ") is not a prime field");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view s) {
  if (s == "Q" || s == "QQ") return rationals();
  std::string_view digits;
  if (s.substr(0, 3) == "GF(" && s.size() > 4 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.substr(0, 2) == "GF")
    digits = s.substr(2);
  else if (s.substr(0, 1) == "F")
    digits = s.substr(1);
  else
    fail(Errc::Parse, "unknown field '" + std::string(s) + "'");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    fail(Errc::Parse, "unknown field '" + std::string(s) + "'");
  return prime(p);
}

std::string Field::name() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rationals())
    v_ = mpq_class(v);
  else
    v_ = reduce(mpz_class(v), f.characteristic());
}

Scalar Scalar::fraction(Field f, long num, long den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  return Scalar(f, num) / Scalar(f, den);
}

Scalar Scalar::from_mpq(Field f, const mpq_class& q) {
  if (f.is_rationals()) {
    Scalar s(f, 0);
    s.v_ = q;
    return s;
  }
  std::uint32_t p = f.characteristic();
  std::uint32_t den = reduce(q.get_den(), p);
  if (den == 0) fail(Errc::DivisionByZero, "denominator vanishes in " + f.name());
  return Scalar(f, mulmod(reduce(q.get_num(), p), powmod(den, p - 2, p), p), 0);
}

Scalar Scalar::parse(Field f, std::string_view s) {
  mpq_class q;
  std::string str(s);
  while (!str.empty() && str.front() == ' ') str.erase(str.begin());
  while (!str.empty() && str.back() == ' ') str.pop_back();
  if (!str.empty() && str.front() == '+') str.erase(str.begin());
  if (str.empty() || q.set_str(str, 10) != 0) fail(Errc::Parse, "bad scalar '" + std::string(s) + "'");
  if (q.get_den() == 0) fail(Errc::DivisionByZero, "bad scalar '" + std::string(s) + "'");
  q.canonicalize();
  return from_mpq(f, q);
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<std::uint32_t>(&v_)) return *r == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<std::uint32_t>(&v_)) return *r == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) fail(Errc::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* x = std::get_if<std::uint32_t>(&r.v_)) {
    if (*x) *x = field_.characteristic() - *x;
  } else {
    mpq_class& q = std::get<mpq_class>(r.v_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* x = std::get_if<std::uint32_t>(&v_)) {
    std::uint64_t s = static_cast<std::uint64_t>(*x) + std::get<std::uint32_t>(o.v_);
    *x = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto* x = std::get_if<std::uint32_t>(&v_)) {
    std::uint32_t p = field_.characteristic();
    std::uint64_t s = static_cast<std::uint64_t>(*x) + p - std::get<std::uint32_t>(o.v_);
    *x = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* x = std::get_if<std::uint32_t>(&v_))
    *x = mulmod(*x, std::get<std::uint32_t>(o.v_), field_.characteristic());
  else
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.v_ == b.v_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  if (auto* x = std::get_if<std::uint32_t>(&v_)) {
    std::uint32_t p = field_.characteristic();
    return Scalar(field_, powmod(*x, p - 2, p), 0);
  }
  Scalar r = *this;
  mpq_class& q = std::get<mpq_class>(r.v_);
  q = 1 / q;
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(field_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  if (auto* x = std::get_if<std::uint32_t>(&v_)) {
    std::uint32_t p = field_.characteristic();
    if (p == 2) return true;
    return powmod(*x, (p - 1) / 2, p) == 1;
  }
  const mpq_class& q = std::get<mpq_class>(v_);
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

std::optional<Scalar> Scalar::sqrt() const {
  if (!is_square()) return std::nullopt;
  if (is_zero()) return *this;
  if (auto* x = std::get_if<std::uint32_t>(&v_))
    return Scalar(field_, sqrt_mod(*x, field_.characteristic()), 0);
  const mpq_class& q = std::get<mpq_class>(v_);
  mpz_class n = ::sqrt(mpz_class(q.get_num())), d = ::sqrt(mpz_class(q.get_den()));
  return from_mpq(field_, mpq_class(n, d));
}

std::string Scalar::str() const {
  if (auto* x = std::get_if<std::uint32_t>(&v_)) return std::to_string(*x);
  return std::get<mpq_class>(v_).get_str();
}

std::uint32_t Scalar::residue() const {
  if (auto* x = std::get_if<std::uint32_t>(&v_)) return *x;
  fail(Errc::UnsupportedField, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  fail(Errc::UnsupportedField, "rational() on a prime-field scalar");
}

double Scalar::approx() const {
  if (auto* x = std::get_if<std::uint32_t>(&v_)) return *x;
  return std::get<mpq_class>(v_).get_d();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qlie
