#include "qlie/braided.hpp"

namespace qlie {

std::size_t ipow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= n;
  return r;
}

namespace {

std::size_t tensor_length(std::size_t size, std::size_t n) {
  std::size_t l = 0, p = 1;
  while (p < size) {
    p *= n;
    ++l;
  }
  if (p != size) fail(Errc::IndexOutOfRange, "matrix size is not a power of dim V");
  return l;
}

}  // namespace

BraidedSpace::BraidedSpace(std::size_t dim, Mat c, bool check) : n_(dim), c_(std::move(c)) {
  if (n_ == 0) fail(Errc::PreconditionViolated, "dim V must be positive");
  if (c_.rows() != n_ * n_ || c_.cols() != n_ * n_)
    fail(Errc::IndexOutOfRange, "braiding must be n^2 x n^2");
  if (check && !check_yang_baxter(c_, n_)) fail(Errc::NotBraided, "c does not satisfy the Yang-Baxter equation");
}

Mat flip_braiding(Field f, std::size_t n) {
  Mat c(f, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(j + n * i, i + n * j) = Scalar(f, 1);
  return c;
}

Mat diagonal_braiding(const Mat& q) {
  std::size_t n = q.rows();
  Mat c(q.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(j + n * i, i + n * j) = q(i, j);
  return c;
}

Mat slot_lift(const Mat& op, std::size_t n, std::size_t slot, std::size_t k, std::size_t in_len,
              std::size_t out_len) {
  if (slot < 1 || slot + in_len - 1 > k) fail(Errc::IndexOutOfRange, "slot out of range");
  if (op.cols() != ipow(n, in_len) || op.rows() != ipow(n, out_len))
    fail(Errc::IndexOutOfRange, "operator shape does not match tensor lengths");
  std::size_t lo = ipow(n, slot - 1);
  std::size_t in_mid = ipow(n, in_len), out_mid = ipow(n, out_len);
  std::size_t hi = ipow(n, k - (slot - 1) - in_len);
  Mat m(op.field(), lo * out_mid * hi, lo * in_mid * hi);
  for (std::size_t c = 0; c < hi; ++c)
    for (std::size_t b = 0; b < in_mid; ++b)
      for (std::size_t r = 0; r < out_mid; ++r) {
        const Scalar& x = op(r, b);
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < lo; ++a) m(a + lo * r + lo * out_mid * c, a + lo * b + lo * in_mid * c) = x;
      }
  return m;
}

Mat slot_lift(const Mat& op, std::size_t n, std::size_t slot, std::size_t k) {
  if (n == 1) {
    if (slot < 1 || slot > k) fail(Errc::IndexOutOfRange, "slot out of range");
    return op;
  }
  return slot_lift(op, n, slot, k, tensor_length(op.cols(), n), tensor_length(op.rows(), n));
}

bool check_yang_baxter(const Mat& c, std::size_t n) {
  Mat c1 = slot_lift(c, n, 1, 3, 2, 2), c2 = slot_lift(c, n, 2, 3, 2, 2);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

bool check_yang_baxter(const BraidedSpace& b) { return check_yang_baxter(b.c(), b.dim()); }

Subspace e2(const BraidedSpace& b) {
  return kernel(b.c() + Mat::identity(b.field(), b.c().rows()));
}

Subspace e2bar(const BraidedSpace& b) {
  std::size_t n = b.dim(), n3 = ipow(n, 3);
  Mat id = Mat::identity(b.field(), n3);
  Mat a1 = slot_lift(b.c(), n, 1, 3, 2, 2) + id, a2 = slot_lift(b.c(), n, 2, 3, 2, 2) + id;
  Mat stacked(b.field(), 2 * n3, n3);
  for (std::size_t i = 0; i < n3; ++i)
    for (std::size_t j = 0; j < n3; ++j) {
      stacked(i, j) = a1(i, j);
      stacked(n3 + i, j) = a2(i, j);
    }
  return kernel(stacked);
}

std::optional<MinpolySplit> split_minpoly(const BraidedSpace& b) {
  return split_at_minus_one(minimal_polynomial(b.c()));
}

Vec tensor_vec(const Vec& u, const Vec& v) {
  Field f = u.empty() ? v.front().field() : u.front().field();
  Vec w = zero_vec(f, u.size() * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!u[i].is_zero()) w[i + u.size() * j] = u[i] * v[j];
  }
  return w;
}

bool is_categorical(const BraidedSpace& b, const Subspace& l) {
  std::size_t n = b.dim();
  if (l.ambient() != n) fail(Errc::IndexOutOfRange, "subspace is not in V");
  std::vector<Vec> lv, vl;
  for (const auto& x : l.basis())
    for (std::size_t j = 0; j < n; ++j) {
      Vec e = unit_vec(b.field(), n, j);
      lv.push_back(tensor_vec(x, e));
      vl.push_back(tensor_vec(e, x));
    }
  Subspace l_v = Subspace::span(b.field(), n * n, lv), v_l = Subspace::span(b.field(), n * n, vl);
  for (const auto& w : lv)
    if (!v_l.contains(b.c().apply(w))) return false;
  for (const auto& w : vl)
    if (!l_v.contains(b.c().apply(w))) return false;
  return true;
}

}  // namespace qlie
