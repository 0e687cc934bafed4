#include "qlie/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qlie/table.hpp"

namespace qlie {

namespace {

constexpr std::uint8_t X1 = 0, X2 = 1;

Mat braid_factor(const BraidedSpace& b, std::size_t slot, std::size_t n) {
  return slot_lift(b.c(), b.dim(), slot, n, 2, 2);
}

Word power(std::uint8_t letter, std::size_t k) { return Word(k, letter); }

Word monomial(std::size_t a, std::size_t b) { return concat(power(X1, a), power(X2, b)); }

// Coproduct legs reduced to canonical coset representatives.
class QuotientCoalgebra {
 public:
  QuotientCoalgebra(const Presentation& p, const IdealTruncation& t) : tb_(p.space), t_(t) {}

  TensorBialgebra& bialgebra() { return tb_; }

  const TensorElem& nf(const Word& w) {
    auto it = nf_.find(w);
    if (it != nf_.end()) return it->second;
    return nf_.emplace(w, t_.normal_form(TensorElem::word(tb_.field(), tb_.dim(), w))).first->second;
  }

  TensorElem nf(const TensorElem& x) {
    TensorElem r(tb_.field(), tb_.dim());
    for (const auto& [w, s] : x.terms()) r += s * nf(w);
    return r;
  }

  SplitTensorElem reduce(const SplitTensorElem& x) {
    SplitTensorElem r(tb_.field(), tb_.dim());
    for (const auto& [uv, s] : x.terms()) {
      const TensorElem& a = nf(uv.first);
      const TensorElem& b = nf(uv.second);
      for (const auto& [wa, sa] : a.terms())
        for (const auto& [wb, sb] : b.terms()) r.add({wa, wb}, s * sa * sb);
    }
    return r;
  }

  SplitTensorElem delta(const Word& w) { return reduce(tb_.coproduct(w)); }

 private:
  TensorBialgebra tb_;
  const IdealTruncation& t_;
  std::map<Word, TensorElem> nf_;
};

// Classical coproduct of x2^m for the flip: sum_i C(m, i) x2^i (x) x2^(m-i).
SplitTensorElem delta0_x2(Field f, std::size_t m) {
  SplitTensorElem r(f, 2);
  long binom = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    r.add({power(X2, i), power(X2, m - i)}, Scalar(f, binom));
    binom = binom * static_cast<long>(m - i) / static_cast<long>(i + 1);
  }
  return r;
}

SplitTensorElem componentwise(const SplitTensorElem& a, const SplitTensorElem& b) {
  SplitTensorElem r(a.field(), a.dim());
  for (const auto& [w1, s1] : a.terms())
    for (const auto& [w2, s2] : b.terms()) r.add({concat(w1.first, w2.first), concat(w1.second, w2.second)}, s1 * s2);
  return r;
}

}  // namespace

Mat quantum_symmetrizer(const BraidedSpace& b, std::size_t n) {
  Field f = b.field();
  std::size_t d = b.dim();
  Mat omega = Mat::identity(f, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat lifted = k == 1 ? Mat::identity(f, d) : slot_lift(omega, d, 1, k, k - 1, k - 1);
    std::size_t size = ipow(d, k);
    Mat t = Mat::identity(f, size), chain = Mat::identity(f, size);
    for (std::size_t j = k - 1; j >= 1; --j) {
      chain = chain * braid_factor(b, j, k);
      t = t + chain;
    }
    omega = lifted * t;
  }
  return omega;
}

Mat quantum_symmetrizer_by_words(const BraidedSpace& b, std::size_t n, WordSchedule s) {
  Field f = b.field();
  std::size_t size = ipow(b.dim(), n);
  std::vector<Mat> factors;
  for (std::size_t i = 1; i < n; ++i) factors.push_back(braid_factor(b, i, n));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mat sum(f, size, size);
  do {
    std::vector<std::size_t> a = perm, word;
    for (;;) {
      std::size_t pos = n;
      if (s == WordSchedule::LeftmostDescent) {
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (a[i] > a[i + 1]) {
            pos = i;
            break;
          }
      } else {
        for (std::size_t i = n - 1; i-- > 0;)
          if (a[i] > a[i + 1]) {
            pos = i;
            break;
          }
      }
      if (pos == n) break;
      std::swap(a[pos], a[pos + 1]);
      word.push_back(pos);
    }
    Mat m = Mat::identity(f, size);
    for (std::size_t i : word) m = factors[i] * m;
    sum = sum + m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool nichols_quadratic_at(const BraidedSpace& b, std::size_t N) {
  if (N < 2) fail(Errc::PreconditionViolated, "degree cap must be at least 2");
  std::vector<std::size_t> sq = sq_graded_dims(b, N);
  for (std::size_t n = 0; n <= N; ++n)
    if (rank(quantum_symmetrizer(b, n)) != sq[n]) return false;
  return true;
}

PrimitiveReport primitives_of_quotient(const Presentation& p, std::size_t N, std::size_t buffer) {
  IdealTruncation t = ideal_truncation(p, N, buffer);
  QuotientCoalgebra qc(p, t);
  Field f = p.space.field();
  std::size_t n = p.space.dim();
  PrimitiveReport rep;
  rep.degree_cap = N;
  rep.graded = std::all_of(p.relations.begin(), p.relations.end(), [](const TensorElem& r) { return r.is_homogeneous(2); });

  for (const auto& r : p.relations)
    if (!qc.reduce(qc.bialgebra().coproduct(r)).is_zero()) rep.coideal = false;

  // Defect Delta(w) - w (x) 1 - 1 (x) w of each standard word.
  std::vector<std::vector<Word>> words(N + 1);
  std::map<Word, SplitTensorElem> defect;
  for (std::size_t len = 0; len <= N; ++len) {
    words[len] = t.standard_words(len);
    for (const auto& w : words[len]) {
      SplitTensorElem d = qc.delta(w);
      d.add({w, {}}, Scalar(f, -1));
      d.add({{}, w}, Scalar(f, -1));
      defect.emplace(w, std::move(d));
    }
  }

  rep.levels.resize(N + 1);
  for (std::size_t level = 1; level <= N; ++level) {
    std::vector<Word> cand;
    for (std::size_t len = rep.graded ? level : 0; len <= level; ++len)
      cand.insert(cand.end(), words[len].begin(), words[len].end());
    std::map<WordPair, std::size_t> rows;
    for (const auto& w : cand)
      for (const auto& [uv, s] : defect.at(w).terms()) rows.try_emplace(uv, rows.size());
    Mat m(f, rows.size(), cand.size());
    for (std::size_t j = 0; j < cand.size(); ++j)
      for (const auto& [uv, s] : defect.at(cand[j]).terms()) m(rows.at(uv), j) = s;
    Subspace ker = kernel(m);
    for (const auto& k : ker.basis()) {
      TensorElem z(f, n);
      for (std::size_t j = 0; j < cand.size(); ++j) z.add(cand[j], k[j]);
      rep.levels[level].push_back(z);
    }
  }

  rep.equals_v = true;
  for (std::size_t level = 1; level <= N; ++level) {
    std::size_t expect = (rep.graded && level > 1) ? 0 : n;
    if (rep.levels[level].size() != expect) rep.equals_v = false;
  }
  for (std::size_t level = 1; level <= N && rep.equals_v; ++level) {
    std::vector<Vec> vs;
    for (const auto& z : rep.levels[level]) {
      if (!z.is_homogeneous(1)) rep.equals_v = false;
      vs.push_back(z.component(1).to_vec(1));
    }
    if (rep.graded && level > 1) continue;
    Subspace span = Subspace::span(f, n, vs);
    for (std::size_t i = 0; i < n; ++i)
      if (!span.contains(unit_vec(f, n, i))) rep.equals_v = false;
  }
  return rep;
}

Scalar q_binomial(long n, long t, const Scalar& q) {
  Field f = q.field();
  if (t < 0 || t > n) return Scalar(f, 0);
  // row[k] holds binom(m, k)_q for the current m.
  std::vector<Scalar> row(n + 1, Scalar(f, 0));
  row[0] = Scalar(f, 1);
  for (long m = 1; m <= n; ++m)
    for (long k = m; k >= 1; --k) row[k] = row[k - 1] + q.pow(k) * row[k];
  return row[t];
}

bool verify_qpower_coproduct(int row, const std::optional<Scalar>& gamma, std::size_t n_max) {
  if (row != 5 && row != 6 && row != 7) fail(Errc::PreconditionViolated, "closed-form coproducts cover rows 5, 6, 7");
  Field f = gamma ? gamma->field() : Field::rationals();
  TableRow tr = table_row(f, row, gamma);
  Scalar zero(f, 0), one(f, 1);
  Scalar q1 = row == 7 ? *gamma : zero;
  Scalar q12 = row == 6 ? *gamma : one;
  Scalar q2 = one;
  Presentation p = sq_relations(tr.q.space);
  IdealTruncation t = ideal_truncation(p, std::max<std::size_t>(n_max, 2));
  QuotientCoalgebra qc(p, t);
  for (std::size_t total = 0; total <= n_max; ++total)
    for (std::size_t n1 = 0; n1 <= total; ++n1) {
      std::size_t n2 = total - n1;
      SplitTensorElem closed(f, 2);
      for (std::size_t t1 = 0; t1 <= n1; ++t1)
        for (std::size_t t2 = 0; t2 <= n2; ++t2) {
          Scalar s = q_binomial(n1, t1, q1) * q_binomial(n2, t2, q2) * q12.pow(static_cast<long>((n1 - t1) * t2));
          closed.add({monomial(t1, t2), monomial(n1 - t1, n2 - t2)}, s);
        }
      if (!(qc.reduce(closed) == qc.delta(monomial(n1, n2)))) return false;
    }
  return true;
}

long alpha_coeff(long t, long n) {
  if (t < 0 || n < 0) return 0;
  std::vector<long> a(t + 1, 0);
  a[0] = 1;
  for (long m = 0; m < n; ++m)
    for (long s = t; s >= 1; --s) a[s] += a[s - 1] * (m + 2 - 2 * s);
  return a[t];
}

Cx2Report verify_cx2_and_alpha(const Scalar& gamma, std::size_t n_max) {
  Field f = gamma.field();
  TableRow tr = table_row(f, 8, gamma);
  Presentation p = sq_relations(tr.q.space);
  std::size_t cap = std::max<std::size_t>(n_max + 1, 6);
  IdealTruncation t = ideal_truncation(p, cap);
  QuotientCoalgebra qc(p, t);
  TensorBialgebra& tb = qc.bialgebra();
  Cx2Report r;

  r.braiding = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    SplitTensorElem lhs = qc.reduce(tb.braid_words({X2}, power(X2, n)));
    SplitTensorElem rhs(f, 2);
    rhs.add({power(X2, n), {X2}}, Scalar(f, 1));
    if (n > 0) rhs.add({monomial(1, n - 1), {X1}}, Scalar(f, static_cast<long>(n)) * gamma);
    if (!(lhs == qc.reduce(rhs))) r.braiding = false;
  }

  r.coproduct = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    SplitTensorElem formula(f, 2);
    for (std::size_t s = 0; 2 * s <= n; ++s) {
      SplitTensorElem x1s = SplitTensorElem::pure(f, 2, power(X1, s), power(X1, s));
      Scalar coeff = Scalar(f, alpha_coeff(static_cast<long>(s), static_cast<long>(n))) * gamma.pow(static_cast<long>(s));
      formula += coeff * tb.mul(x1s, delta0_x2(f, n - 2 * s));
    }
    if (!(qc.reduce(formula) == qc.delta(power(X2, n)))) r.coproduct = false;
  }

  r.bridge = true;
  SplitTensorElem one_x2 = SplitTensorElem::pure(f, 2, {}, {X2});
  SplitTensorElem x1x1 = SplitTensorElem::pure(f, 2, {X1}, {X1});
  for (std::size_t m = 1; m <= 5; ++m) {
    SplitTensorElem lhs = qc.reduce(tb.mul(one_x2, delta0_x2(f, m)));
    SplitTensorElem rhs = componentwise(one_x2, delta0_x2(f, m)) +
                          (Scalar(f, static_cast<long>(m)) * gamma) * tb.mul(x1x1, delta0_x2(f, m - 1));
    if (!(lhs == qc.reduce(rhs))) r.bridge = false;
  }

  r.alpha_edges = alpha_coeff(1, 2) == 1;
  for (long n = 0; n <= static_cast<long>(n_max); ++n) {
    if (alpha_coeff(0, n) != 1) r.alpha_edges = false;
    for (long s = 1; s <= static_cast<long>(n_max); ++s)
      if (n < 2 * s && alpha_coeff(s, n) != 0) r.alpha_edges = false;
  }

  SplitTensorElem d3 = qc.delta(power(X2, 3));
  auto it = d3.terms().find(WordPair{monomial(1, 1), {X1}});
  Scalar got = it == d3.terms().end() ? Scalar(f, 0) : it->second;
  r.alpha13_direct = alpha_coeff(1, 3) == 3 && got == Scalar(f, 3) * gamma;
  return r;
}

}  // namespace qlie
