#include "qlie/lifted.hpp"

#include <functional>

namespace qlie {

namespace {

void require_odd_char(Field f) {
  if (f.characteristic() == 2) fail(Errc::CharTwo, "lifted QLie algebras need char != 2");
}

bool vanishes_on(const Mat& m, const Subspace& s) {
  for (const auto& v : s.basis())
    if (!is_zero(m.apply(v))) return false;
  return true;
}

Mat c1_of(const BraidedSpace& b) { return slot_lift(b.c(), b.dim(), 1, 3, 2, 2); }
Mat c2_of(const BraidedSpace& b) { return slot_lift(b.c(), b.dim(), 2, 3, 2, 2); }

// beta_bar extended to V(x)V through the pivot coordinates of E2.
Mat extend_bar(const QBracketData& q) { return q.beta_bar * q.e2_basis.coord_map(); }

// Stacks the entries of the given matrices into one column vector.
Vec flatten(const std::vector<Mat>& ms) {
  Vec v;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Kernel of a linear map on r x c matrices, returned as matrices.
std::vector<Mat> linear_solutions(Field f, std::size_t r, std::size_t c,
                                  const std::function<std::vector<Mat>(const Mat&)>& eqs) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Mat e(f, r, c);
      e(i, j) = Scalar(f, 1);
      cols.push_back(flatten(eqs(e)));
    }
  Mat sys = Mat::from_cols(f, cols.front().size(), cols);
  std::vector<Mat> out;
  Subspace ker = kernel(sys);
  for (const auto& k : ker.basis()) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = k[i * c + j];
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::string LiftedReport::first_failure() const {
  if (!antisym) return "form:antisymmetrybeta";
  if (!bracket_left || !bracket_right) return "form:bracketbeta";
  if (!jacobi) return "form:Jacobibeta";
  return "";
}

std::string QBracketReport::first_failure() const {
  if (!bracket) return "form:bracket";
  if (!correctness) return "form:correctness";
  if (!jacobi) return "form:Jacobi";
  return "";
}

Mat beta1(const LiftedQLie& q) { return slot_lift(q.beta, q.space.dim(), 1, 3, 2, 1); }
Mat beta2(const LiftedQLie& q) { return slot_lift(q.beta, q.space.dim(), 2, 3, 2, 1); }

LiftedReport verify_lifted(const LiftedQLie& q) {
  const BraidedSpace& b = q.space;
  require_odd_char(b.field());
  std::size_t n = b.dim();
  if (q.beta.rows() != n || q.beta.cols() != n * n) fail(Errc::IndexOutOfRange, "beta must be n x n^2");
  LiftedReport r;
  r.antisym = (q.beta * b.c() + q.beta).is_zero();
  Mat b1 = beta1(q), b2 = beta2(q), c1 = c1_of(b), c2 = c2_of(b);
  r.bracket_left = b.c() * b1 == b2 * c1 * c2;
  r.bracket_right = b.c() * b2 == b1 * c2 * c1;
  r.jacobi = vanishes_on(q.beta * (b1 - b2), e2bar(b));
  return r;
}

QBracketReport verify_qbracket(const QBracketData& q) {
  const BraidedSpace& b = q.space;
  require_odd_char(b.field());
  if (!(q.e2_basis == e2(b))) fail(Errc::BasisMismatch, "E2 basis is not the canonical echelon basis");
  std::size_t n = b.dim(), d = q.e2_basis.dim();
  if (q.beta_bar.rows() != n || q.beta_bar.cols() != d) fail(Errc::IndexOutOfRange, "beta_bar must be n x dim E2");
  Field f = b.field();
  Mat ext = extend_bar(q);
  Mat b1 = slot_lift(ext, n, 1, 3, 2, 1), b2 = slot_lift(ext, n, 2, 3, 2, 1);
  Mat c1 = c1_of(b), c2 = c2_of(b);
  std::vector<Vec> ev, ve;
  for (const auto& e : q.e2_basis.basis())
    for (std::size_t j = 0; j < n; ++j) {
      ev.push_back(tensor_vec(e, unit_vec(f, n, j)));
      ve.push_back(tensor_vec(unit_vec(f, n, j), e));
    }
  Subspace e_v = Subspace::span(f, n * n * n, ev), v_e = Subspace::span(f, n * n * n, ve);
  QBracketReport r;
  r.bracket = true;
  for (const auto& z : ev) {
    Vec moved = (c1 * c2).apply(z);
    if (!v_e.contains(moved) || !(b.c().apply(b1.apply(z)) == b2.apply(moved))) r.bracket = false;
  }
  for (const auto& z : ve) {
    Vec moved = (c2 * c1).apply(z);
    if (!e_v.contains(moved) || !(b.c().apply(b2.apply(z)) == b1.apply(moved))) r.bracket = false;
  }
  Subspace bar = e2bar(b);
  r.correctness = true;
  r.jacobi = true;
  for (const auto& z : bar.basis()) {
    Vec w = (b1 - b2).apply(z);
    if (!q.e2_basis.contains(w)) r.correctness = false;
    if (!is_zero(ext.apply(w))) r.jacobi = false;
  }
  return r;
}

namespace {

void check_split(const BraidedSpace& b, const MinpolySplit& split) {
  Poly xp1 = Poly::linear(Scalar(b.field(), -1));
  if (!(split.f == minimal_polynomial(b.c())) || !(xp1 * split.h == split.f) || split.h.eval(Scalar(b.field(), -1)).is_zero())
    fail(Errc::HypothesisViolated, "split does not factor the minimal polynomial of c");
}

}  // namespace

LiftedQLie lift_bracket(const QBracketData& q, const MinpolySplit& split) {
  check_split(q.space, split);
  if (!(q.e2_basis == e2(q.space))) fail(Errc::BasisMismatch, "E2 basis is not the canonical echelon basis");
  Mat beta = extend_bar(q) * eval_poly_at(split.h, q.space.c());
  return LiftedQLie{q.space, beta};
}

QBracketData restrict_bracket(const LiftedQLie& q, const MinpolySplit& split) {
  const BraidedSpace& b = q.space;
  check_split(b, split);
  Field f = b.field();
  std::size_t n2 = b.c().rows();
  if (!(q.beta * (b.c() + Mat::identity(f, n2))).is_zero())
    fail(Errc::Inconsistent, "beta does not vanish on Im(c + Id)");
  Subspace e = e2(b);
  Mat h = e.coord_map() * eval_poly_at(split.h, b.c());
  auto x = solve(h.transpose(), q.beta.transpose());
  if (!x) fail(Errc::Inconsistent, "no beta_bar with beta_bar o h(c) = beta");
  return QBracketData{b, e, x->transpose()};
}

ImageSubalgebra image_subalgebra(const LiftedQLie& q) {
  const BraidedSpace& b = q.space;
  std::size_t n = b.dim();
  Field f = b.field();
  Subspace l = image(q.beta);
  ImageSubalgebra out{l, std::nullopt};
  std::size_t r = l.dim();
  if (r == 0) return out;
  if (!is_categorical(b, l)) fail(Errc::InternalContradiction, "Im beta is not categorical");
  const auto& basis = l.basis();
  const auto& piv = l.pivots();
  std::vector<Vec> ll;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) ll.push_back(tensor_vec(basis[i], basis[j]));
  Subspace lsq = Subspace::span(f, n * n, ll);
  Mat cl(f, r * r, r * r), bl(f, r, r * r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t col = i + r * j;
      Vec w = b.c().apply(ll[col]);
      if (!lsq.contains(w)) fail(Errc::InternalContradiction, "c does not preserve L(x)L");
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t bb = 0; bb < r; ++bb) cl(a + r * bb, col) = w[piv[a] + n * piv[bb]];
      Vec v = q.beta.apply(ll[col]);
      for (std::size_t a = 0; a < r; ++a) bl(a, col) = v[piv[a]];
    }
  LiftedQLie res{BraidedSpace(r, cl), bl};
  if (!verify_lifted(res).ok()) fail(Errc::InternalContradiction, "restriction to Im beta is not a lifted QLie algebra");
  out.restricted = res;
  return out;
}

LiftedReport verify_dim1(const Scalar& gamma, const Scalar& lambda) {
  Field f = gamma.field();
  LiftedQLie q{BraidedSpace(1, Mat::from_rows(f, 1, {{gamma}})), Mat::from_rows(f, 1, {{lambda}})};
  return verify_lifted(q);
}

bool check_dim1_rigidity(Field f, bool exhaustive) {
  require_odd_char(f);
  std::vector<Scalar> values;
  if (exhaustive) {
    if (f.is_rationals()) fail(Errc::UnsupportedField, "exhaustive mode needs a prime field");
    for (std::uint32_t a = 0; a < f.characteristic(); ++a) values.emplace_back(f, a);
  } else {
    for (long num = -4; num <= 4; ++num)
      for (long den = 1; den <= 3; ++den)
        if (!Scalar(f, den).is_zero()) values.push_back(Scalar::fraction(f, num, den));
  }
  for (const auto& g : values)
    for (const auto& l : values)
      if (!l.is_zero() && verify_dim1(g, l).ok()) return false;
  return true;
}

bool derived_antisym_plus(const LiftedQLie& q) {
  return vanishes_on(q.beta * (beta1(q) + beta2(q)), e2bar(q.space));
}

bool is_morphism(const LiftedQLie& a, const LiftedQLie& b, const Mat& alpha) {
  Mat aa = tensor(alpha, alpha);
  return aa * a.space.c() == b.space.c() * aa && alpha * a.beta == b.beta * aa;
}

LiftedQLie transform(const LiftedQLie& q, const Mat& alpha) {
  auto inv = inverse(alpha);
  if (!inv) fail(Errc::PreconditionViolated, "basis change is not invertible");
  Mat aa = tensor(alpha, alpha), aai = tensor(*inv, *inv);
  return LiftedQLie{BraidedSpace(q.space.dim(), aa * q.space.c() * aai, false), alpha * q.beta * aai};
}

std::vector<Mat> lifted_linear_space(const BraidedSpace& b) {
  std::size_t n = b.dim();
  Field f = b.field();
  Mat id2 = Mat::identity(f, n * n), c1 = c1_of(b), c2 = c2_of(b);
  Mat c12 = c1 * c2, c21 = c2 * c1;
  return linear_solutions(f, n, n * n, [&](const Mat& beta) {
    Mat b1 = slot_lift(beta, n, 1, 3, 2, 1), b2 = slot_lift(beta, n, 2, 3, 2, 1);
    return std::vector<Mat>{beta * (b.c() + id2), b.c() * b1 - b2 * c12, b.c() * b2 - b1 * c21};
  });
}

std::vector<Mat> qbracket_linear_space(const BraidedSpace& b) {
  std::size_t n = b.dim();
  Field f = b.field();
  Subspace e = e2(b);
  if (e.dim() == 0) return {};
  Mat c1 = c1_of(b), c2 = c2_of(b);
  std::vector<Vec> ev, ve;
  for (const auto& x : e.basis())
    for (std::size_t j = 0; j < n; ++j) {
      ev.push_back(tensor_vec(x, unit_vec(f, n, j)));
      ve.push_back(tensor_vec(unit_vec(f, n, j), x));
    }
  Mat ev_m = Mat::from_cols(f, n * n * n, ev), ve_m = Mat::from_cols(f, n * n * n, ve);
  Mat moved_l = c1 * c2 * ev_m, moved_r = c2 * c1 * ve_m;
  Mat p = e.coord_map();
  return linear_solutions(f, n, e.dim(), [&](const Mat& bar) {
    Mat ext = bar * p;
    Mat b1 = slot_lift(ext, n, 1, 3, 2, 1), b2 = slot_lift(ext, n, 2, 3, 2, 1);
    return std::vector<Mat>{b.c() * b1 * ev_m - b2 * moved_l, b.c() * b2 * ve_m - b1 * moved_r};
  });
}

}  // namespace qlie
