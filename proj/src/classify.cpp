#include "qlie/classify.hpp"

#include <algorithm>
#include <tuple>

namespace qlie {

namespace {

Mat mat2(Field f, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Mat m(f, 2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// x1 = a x1', x2 = b x1' + x2'.
Mat shear(const Scalar& a, const Scalar& b) {
  Field f = a.field();
  return mat2(f, a, b, Scalar(f, 0), Scalar(f, 1));
}

class Reduction {
 public:
  explicit Reduction(const LiftedQLie& q) : q_(q), alpha_(Mat::identity(q.space.field(), 2)), f_(q.space.field()) {}

  void apply(const Mat& a) {
    q_ = transform(q_, a);
    alpha_ = a * alpha_;
  }
  // Rescales beta so that its x1-coefficient on the given word index becomes 1.
  void normalize_beta(std::size_t j) {
    Scalar b = beta(j);
    if (b.is_zero()) contradiction("cannot normalize a vanishing beta entry");
    apply(b * Mat::identity(f_, 2));
  }

  const Scalar& c(std::size_t i, std::size_t j) const { return q_.space.c()(i, j); }
  const Scalar& beta(std::size_t j) const { return q_.beta(0, j); }
  Field field() const { return f_; }
  const LiftedQLie& current() const { return q_; }
  const Mat& alpha() const { return alpha_; }

  void step(const std::string& label) { path_ += path_.empty() ? label : "." + label; }
  const std::string& path() const { return path_; }

  [[noreturn]] void contradiction(const std::string& why) const {
    fail(Errc::InternalContradiction, "CASE " + path_ + ": " + why + "; input is not a verified lifted QLie algebra");
  }

 private:
  LiftedQLie q_;
  Mat alpha_;
  Field f_;
  std::string path_;
};

// Index of word x_i x_j in V(x)V: x1x1, x2x1, x1x2, x2x2.
constexpr std::size_t W11 = 0, W21 = 1, W12 = 2, W22 = 3;

bool normalized1(const Reduction& r) {
  const Mat& b = r.current().beta;
  for (std::size_t j = 0; j < 4; ++j)
    if (!b(1, j).is_zero()) return false;
  if (!r.beta(W11).is_zero()) return false;
  const std::pair<std::size_t, std::size_t> zeros[] = {{1, 0}, {2, 0}, {3, 0}, {1, 1}, {3, 1}, {2, 2}, {3, 2}};
  for (auto [i, j] : zeros)
    if (!r.c(i, j).is_zero()) return false;
  return true;
}

// Moves a nonzero gamma in the square class of 1 to 1 by rescaling x1.
std::pair<Scalar, bool> square_normalize(Reduction& r) {
  Scalar z = r.c(0, W22);
  Field f = r.field();
  if (z.is_zero() || z.is_one()) return {z, false};
  if (auto s = z.sqrt()) {
    r.apply(shear(s->inverse(), Scalar(f, 0)));
    return {Scalar(f, 1), false};
  }
  return {z, true};
}

}  // namespace

CanonicalFormResult canonical_form(const LiftedQLie& input) {
  const BraidedSpace& sp = input.space;
  Field f = sp.field();
  if (sp.dim() != 2) fail(Errc::PreconditionViolated, "canonical_form needs dim V = 2");
  if (f.characteristic() == 2) fail(Errc::CharTwo, "canonical_form needs char != 2");
  LiftedReport lr = verify_lifted(input);
  if (!lr.ok()) fail(Errc::PreconditionViolated, "not a lifted QLie algebra: " + lr.first_failure() + " fails");
  std::size_t rk = rank(input.beta);
  if (rk == 0) fail(Errc::PreconditionViolated, "beta = 0");
  if (rk == 2) fail(Errc::PreconditionViolated, "dim Im beta = 2 is outside the table; use the appendix checks");
  try {
    if (!split_minpoly(sp)) fail(Errc::PreconditionViolated, "-1 is not a root of the minimal polynomial");
  } catch (const Error& e) {
    if (e.code() != Errc::MinusOneNotSimple) throw;
    fail(Errc::PreconditionViolated, e.what());
  }

  Reduction r(input);
  Scalar zero(f, 0), one(f, 1), two(f, 2);

  // x1 spans Im beta, x2 completes it.
  Vec v;
  for (std::size_t j = 0; j < 4 && v.empty(); ++j)
    if (!is_zero(input.beta.col(j))) v = input.beta.col(j);
  Mat p = v[0].is_zero() ? mat2(f, zero, one, one, zero) : mat2(f, one, zero, v[1] / v[0], one);
  r.apply(*inverse(p));
  if (!normalized1(r)) r.contradiction("Im beta is not categorical or beta(L (x) L) != 0");

  int row = 0;
  std::optional<Scalar> gamma;
  bool note = false;
  auto x = [&] { return r.c(0, W11); };
  auto y = [&] { return r.c(0, W21); };
  auto w = [&] { return r.c(0, W12); };
  auto z = [&] { return r.c(0, W22); };

  if (!x().is_zero()) {
    r.step("1");
    if (r.beta(W21).is_zero()) {
      r.step("1");
      r.normalize_beta(W22);
      if (!(r.c(3, 3) == -one) || !r.c(0, W21).is_zero() || !r.c(0, W12).is_zero() || !(r.c(1, 3) == r.c(2, 3)))
        r.contradiction("braiding is not of the expected shape");
      r.apply(shear(one, r.c(1, 3) / two));
      std::tie(gamma, note) = square_normalize(r);
      row = 4;
    } else {
      r.step("2");
      r.normalize_beta(W21);
      if (!(r.beta(W12) == -one) || !r.beta(W22).is_zero()) r.contradiction("beta is not of the expected shape");
      if (!(y() == w())) {
        r.step("1");
        if (!(x() == one) || !z().is_zero() || !(w() == -y())) r.contradiction("braid relation fails");
        r.apply(shear(y().inverse(), zero));
        row = 2;
      } else {
        r.step("2");
        if (x() == one) {
          r.step("1");
          if (!y().is_zero()) r.contradiction("braid relation fails");
          if (z().is_zero()) {
            r.step("1");
            row = 1;
          } else {
            r.step("2");
            std::tie(gamma, note) = square_normalize(r);
            row = 8;
          }
        } else if (x() == -one) {
          r.step("2");
          r.apply(shear(one, -y() / two));
          std::tie(gamma, note) = square_normalize(r);
          row = 3;
        } else {
          r.step("3");
          gamma = x();
          r.apply(shear(one, y() / (x() - one)));
          row = 7;
        }
      }
    }
  } else {
    r.step("2");
    if (!(r.c(3, 3) == one)) {
      r.step("1");
      r.step(r.beta(W21).is_zero() ? "1" : "2");
      r.contradiction("branch is eliminated");
    }
    r.step("2");
    if (!r.beta(W22).is_zero()) {
      r.step("1");
      r.normalize_beta(W22);
      Scalar b21 = r.beta(W21), b12 = r.beta(W12);
      if (b12 == -b21) {
        r.step("1");
        r.contradiction("branch is eliminated");
      }
      r.step("2");
      r.apply(shear(b12 * b21 * (b12 + b21), b12 * b21));
      if (!r.beta(W22).is_zero()) r.contradiction("beta^22 survives the basis change");
    }
    r.step("2");
    r.normalize_beta(W21);
    if (r.beta(W12) == -one) {
      r.step("1");
      if (y() == w()) {
        r.step("1");
        r.apply(shear(one, -y()));
        gamma = zero;
        row = 7;
      } else {
        r.step("2");
        Scalar d = y() - w();
        r.apply(shear(d.inverse(), -w() / d));
        row = 5;
      }
    } else {
      r.step("2");
      gamma = -r.beta(W12);
      row = 6;
    }
  }

  r.normalize_beta(row == 4 ? W22 : W21);
  TableRow expect = table_row(f, row, gamma);
  if (!(r.current().space.c() == expect.q.space.c()) || !(r.current().beta == expect.q.beta))
    r.contradiction("reduction did not land on row " + std::to_string(row));
  if (!is_morphism(input, expect.q, r.alpha())) r.contradiction("accumulated basis change does not intertwine");
  return CanonicalFormResult{row, gamma, r.alpha(), note, r.path()};
}

std::vector<Mat> general_linear_2(Field f) {
  if (f.is_rationals()) fail(Errc::UnsupportedField, "GL_2 enumeration needs GF(p)");
  std::uint32_t p = f.characteristic();
  std::vector<Scalar> el;
  for (std::uint32_t a = 0; a < p; ++a) el.emplace_back(f, a);
  std::vector<Mat> out;
  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el)
        for (const auto& d : el)
          if (!(a * d - b * c).is_zero()) out.push_back(mat2(f, a, b, c, d));
  return out;
}

namespace {

void check_pair(const LiftedQLie& a, const LiftedQLie& b) {
  if (a.space.dim() != 2 || b.space.dim() != 2) fail(Errc::PreconditionViolated, "iso_bruteforce needs dim V = 2");
  if (!(a.space.field() == b.space.field())) fail(Errc::FieldMismatch, "iso_bruteforce across fields");
}

std::vector<Scalar> height_grid(Field f, long height) {
  std::vector<Scalar> out;
  auto push = [&](const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& t : out)
      if (t == s) return;
    out.push_back(s);
  };
  for (long h = 1; h <= height; ++h)
    for (long n = 1; n <= h; ++n)
      for (long m = 1; m <= h; ++m) {
        if (std::max(n, m) != h) continue;
        Scalar s = Scalar::fraction(f, n, m);
        push(s);
        push(-s);
      }
  return out;
}

std::vector<Scalar> residual(const LiftedQLie& a, const LiftedQLie& b, const Mat& alpha) {
  Mat aa = kron(alpha, alpha);
  Mat dc = aa * a.space.c() - b.space.c() * aa;
  Mat db = alpha * a.beta - b.beta * aa;
  std::vector<Scalar> out;
  for (const Mat* m : {&dc, &db})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) out.push_back((*m)(i, j));
  return out;
}

// Values of the corner entry making alpha = [[p, q], [0, r]] intertwine; nullopt when any q works.
std::optional<std::vector<Scalar>> solve_corner(const LiftedQLie& a, const LiftedQLie& b, const Scalar& p,
                                                const Scalar& r) {
  Field f = p.field();
  Scalar zero(f, 0);
  // Every residual entry has degree <= 2 in q: interpolate at q = 0, 1, 2.
  std::vector<Scalar> nodes{Scalar(f, 0), Scalar(f, 1), Scalar(f, 2)};
  std::vector<std::vector<Scalar>> vals;
  for (const auto& q : nodes) vals.push_back(residual(a, b, mat2(f, p, q, zero, r)));
  std::vector<Poly> basis;
  for (std::size_t k = 0; k < 3; ++k) {
    Poly l = Poly::constant(Scalar(f, 1));
    for (std::size_t j = 0; j < 3; ++j)
      if (j != k) l = (nodes[k] - nodes[j]).inverse() * (l * Poly::linear(nodes[j]));
    basis.push_back(l);
  }
  Poly g = Poly::constant(zero);
  for (std::size_t e = 0; e < vals[0].size(); ++e) {
    Poly pe = Poly::constant(zero);
    for (std::size_t k = 0; k < 3; ++k) pe = pe + vals[k][e] * basis[k];
    g = poly_gcd_bezout(g, pe).g;
  }
  if (g.degree() < 0) return std::nullopt;
  std::vector<Scalar> roots;
  if (g.degree() == 1) roots.push_back(-g.coeff(0));
  if (g.degree() == 2) {
    Scalar disc = g.coeff(1) * g.coeff(1) - Scalar(f, 4) * g.coeff(0);
    if (auto s = disc.sqrt()) {
      Scalar half = Scalar(f, 2).inverse();
      roots.push_back(half * (-g.coeff(1) - *s));
      if (!s->is_zero()) roots.push_back(half * (-g.coeff(1) + *s));
    }
  }
  return roots;
}

}  // namespace

std::optional<Mat> iso_bruteforce(const LiftedQLie& a, const LiftedQLie& b, IsoMode mode, long height) {
  check_pair(a, b);
  Field f = a.space.field();
  if (mode == IsoMode::FiniteExhaustive) {
    if (f.is_rationals()) fail(Errc::UnsupportedField, "exhaustive isomorphism search needs GF(p)");
    for (const auto& m : general_linear_2(f))
      if (is_morphism(a, b, m)) return m;
    return std::nullopt;
  }
  if (f.characteristic() == 2) fail(Errc::CharTwo, "corner interpolation needs char != 2");
  std::vector<Scalar> grid = height_grid(f, height);
  Scalar zero(f, 0);
  for (const auto& p : grid)
    for (const auto& r : grid) {
      auto roots = solve_corner(a, b, p, r);
      std::vector<Scalar> qs = roots ? *roots : std::vector<Scalar>{zero};
      for (const auto& q : qs) {
        Mat m = mat2(f, p, q, zero, r);
        if (is_morphism(a, b, m)) return m;
      }
    }
  return std::nullopt;
}

std::size_t iso_count(const LiftedQLie& a, const LiftedQLie& b) {
  check_pair(a, b);
  std::size_t n = 0;
  for (const auto& m : general_linear_2(a.space.field()))
    if (is_morphism(a, b, m)) ++n;
  return n;
}

}  // namespace qlie
