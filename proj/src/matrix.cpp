#include "qlie/matrix.hpp"

#include <sstream>

namespace qlie {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar(f, 0)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), r_(rows), c_(cols), a_(rows * cols, Scalar(f, 0)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) fail(Errc::IndexOutOfRange, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(Errc::IndexOutOfRange, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(Errc::IndexOutOfRange, "ragged matrix");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Scalar& Mat::at(std::size_t i, std::size_t j) {
  if (i >= r_ || j >= c_) fail(Errc::IndexOutOfRange, "matrix index");
  return (*this)(i, j);
}

const Scalar& Mat::at(std::size_t i, std::size_t j) const {
  if (i >= r_ || j >= c_) fail(Errc::IndexOutOfRange, "matrix index");
  return (*this)(i, j);
}

Vec Mat::row(std::size_t i) const {
  if (i >= r_) fail(Errc::IndexOutOfRange, "row index");
  return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

Vec Mat::col(std::size_t j) const {
  if (j >= c_) fail(Errc::IndexOutOfRange, "column index");
  Vec v;
  v.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != c_) fail(Errc::IndexOutOfRange, "vector length");
  Vec out = zero_vec(field_, r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool Mat::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(field_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::IndexOutOfRange, "matrix sum shape");
  Mat m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::IndexOutOfRange, "matrix difference shape");
  Mat m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) fail(Errc::IndexOutOfRange, "matrix product shape");
  Mat m(a.field_, a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Mat operator*(const Scalar& s, const Mat& a) {
  Mat m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (!(a.a_[k] == b.a_[k])) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Mat tensor(const Mat& first, const Mat& second) { return kron(second, first); }

Mat rref(const Mat& m, std::vector<std::size_t>* pivots) {
  Mat a = m;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar t = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= t * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::size_t rank(const Mat& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) fail(Errc::IndexOutOfRange, "inverse of non-square matrix");
  auto x = solve(m, Mat::identity(m.field(), m.rows()));
  if (!x || !(m * *x == Mat::identity(m.field(), m.rows()))) return std::nullopt;
  return x;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(Errc::IndexOutOfRange, "solve shape");
  std::size_t n = a.cols(), k = b.cols();
  Mat aug(a.field(), a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  std::vector<std::size_t> piv;
  Mat r = rref(aug, &piv);
  Mat x(a.field(), n, k);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(piv[i], j) = r(i, n + j);
  }
  return x;
}

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), n_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  Mat r = rref(Mat::from_rows(f, ambient, vectors), &s.pivots_);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(r.row(i));
  return s;
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
  std::vector<Vec> e;
  for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vec(f, ambient, i));
  return span(f, ambient, e);
}

Mat Subspace::as_columns() const { return Mat::from_cols(field_, n_, basis_); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != n_) fail(Errc::IndexOutOfRange, "vector length");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar t = w[pivots_[i]];
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!basis_[i][j].is_zero()) w[j] -= t * basis_[i][j];
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis_)
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  if (!contains(v)) fail(Errc::BasisMismatch, "vector is not in the subspace");
  Vec c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Mat Subspace::coord_map() const {
  Mat m(field_, dim(), n_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) m(i, pivots_[i]) = Scalar(field_, 1);
  return m;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Kernel of [A^T | -B^T] gives the common combinations.
  std::size_t a = dim(), b = o.dim();
  if (a == 0 || b == 0) return Subspace(field_, n_);
  Mat m(field_, n_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = basis_[i][j];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, a + i) = -o.basis_[i][j];
  Subspace k = kernel(m);
  std::vector<Vec> vs;
  for (const auto& kv : k.basis()) {
    Vec v = zero_vec(field_, n_);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < n_; ++j) v[j] += kv[i] * basis_[i][j];
    vs.push_back(v);
  }
  return span(field_, n_, vs);
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_ || a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      if (!(a.basis_[i][j] == b.basis_[i][j])) return false;
  return true;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << basis_[i][j];
    os << ")";
  }
  os << "}";
  return os.str();
}

Subspace kernel(const Mat& m) {
  std::vector<std::size_t> piv;
  Mat r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> vs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[f] = Scalar(m.field(), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    vs.push_back(v);
  }
  return Subspace::span(m.field(), m.cols(), vs);
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

Poly minimal_polynomial(const Mat& m) {
  if (!m.is_square()) fail(Errc::IndexOutOfRange, "minimal polynomial of non-square matrix");
  Field f = m.field();
  std::size_t n = m.rows();
  std::vector<Vec> powers;
  Mat p = Mat::identity(f, n);
  auto flat = [&](const Mat& x) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(x(i, j));
    return v;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v = flat(p);
    if (!powers.empty()) {
      Mat a = Mat::from_cols(f, n * n, powers);
      Mat b = Mat::from_cols(f, n * n, {v});
      if (auto x = solve(a, b)) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < k; ++i) c.push_back(-(*x)(i, 0));
        c.push_back(Scalar(f, 1));
        return Poly(f, c);
      }
    } else if (is_zero(v)) {
      return Poly::constant(Scalar(f, 1));
    }
    powers.push_back(v);
    p = p * m;
  }
  fail(Errc::InternalContradiction, "minimal polynomial degree exceeds size");
}

Mat eval_poly_at(const Poly& p, const Mat& m) {
  if (!m.is_square()) fail(Errc::IndexOutOfRange, "polynomial at non-square matrix");
  Mat r(m.field(), m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) r = r * m + p.coeff(i) * Mat::identity(m.field(), m.rows());
  return r;
}

std::optional<MinpolySplit> split_at_minus_one(const Poly& f) {
  Field fld = f.field();
  Scalar minus_one(fld, -1);
  int mult = f.root_multiplicity(minus_one);
  if (mult == 0) return std::nullopt;
  if (mult > 1) fail(Errc::MinusOneNotSimple, "-1 is a root of multiplicity " + std::to_string(mult) + " of " + f.str());
  Poly xp1 = Poly::linear(minus_one);
  Poly h = f.divmod(xp1).first.monic();
  Bezout b = poly_gcd_bezout(xp1, h);
  if (b.g.degree() != 0) fail(Errc::InternalContradiction, "X+1 and cofactor not coprime");
  return MinpolySplit{f, h, h.eval(minus_one), b.u, b.v};
}

std::pair<Subspace, Subspace> complement_split(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    fail(Errc::IndexOutOfRange, "complement_split shapes");
  if (!(a * b).is_zero() || !(b * a).is_zero()) fail(Errc::HypothesisViolated, "the two factors do not annihilate");
  Subspace ia = image(a), ib = image(b);
  if (ia.dim() + ib.dim() != a.rows() || ia.intersect(ib).dim() != 0)
    fail(Errc::HypothesisViolated, "images are not complementary");
  if (!(ia == kernel(b))) fail(Errc::HypothesisViolated, "image of the first factor is not the kernel of the second");
  return {ia, ib};
}

}  // namespace qlie
