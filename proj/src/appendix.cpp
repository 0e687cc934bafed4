#include "qlie/appendix.hpp"

#include <functional>
#include <random>

#include "qlie/classify.hpp"

namespace qlie {

namespace {

// A linear condition sum_k coeffs[k] * beta_k = rhs, beta flattened row-major (2 x 4).
struct BetaCondition {
  std::vector<long> coeffs;
  long rhs;
};

BetaCondition entry_is(std::size_t i, std::size_t j, long v) {
  std::vector<long> c(8, 0);
  c[i * 4 + j] = 1;
  return {c, v};
}

std::vector<Scalar> field_elements(Field f) {
  std::vector<Scalar> out;
  for (std::uint32_t a = 0; a < f.characteristic(); ++a) out.emplace_back(f, static_cast<long>(a));
  return out;
}

bool hypothesis_holds(const BraidedSpace& b) {
  try {
    return split_minpoly(b).has_value();
  } catch (const Error& e) {
    if (e.code() == Errc::MinusOneNotSimple) return false;
    throw;
  }
}

// Walks every beta in the lifted linear space of b that satisfies the conditions.
void for_each_beta(const BraidedSpace& b, const std::vector<BetaCondition>& conds,
                   const std::function<void(const Mat&)>& visit) {
  Field f = b.field();
  std::vector<Mat> basis = lifted_linear_space(b);
  std::size_t k = basis.size();
  Mat a(f, conds.size(), k), rhs(f, conds.size(), 1);
  for (std::size_t r = 0; r < conds.size(); ++r) {
    for (std::size_t t = 0; t < k; ++t) {
      Scalar s(f, 0);
      for (std::size_t e = 0; e < 8; ++e)
        if (conds[r].coeffs[e] != 0) s = s + Scalar(f, conds[r].coeffs[e]) * basis[t](e / 4, e % 4);
      a(r, t) = s;
    }
    rhs(r, 0) = Scalar(f, conds[r].rhs);
  }
  Vec base = zero_vec(f, k);
  if (!conds.empty()) {
    if (k == 0) {
      for (std::size_t r = 0; r < conds.size(); ++r)
        if (conds[r].rhs != 0) return;
    } else {
      auto x = solve(a, rhs);
      if (!x) return;
      base = x->col(0);
    }
  }
  std::vector<Vec> dirs = k == 0 ? std::vector<Vec>{} : (conds.empty() ? Subspace::whole(f, k) : kernel(a)).basis();
  std::vector<Scalar> el = field_elements(f);
  std::size_t p = el.size(), total = 1;
  for (std::size_t i = 0; i < dirs.size(); ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    Vec t = base;
    std::size_t cc = code;
    for (const auto& v : dirs) {
      const Scalar& s = el[cc % p];
      cc /= p;
      for (std::size_t i = 0; i < k; ++i) t[i] = t[i] + s * v[i];
    }
    Mat beta(f, 2, 4);
    for (std::size_t i = 0; i < k; ++i) beta = beta + t[i] * basis[i];
    visit(beta);
  }
}

void scan(FamilyReport& fr, const BraidedSpace& b, const std::vector<BetaCondition>& conds, std::size_t want_rank) {
  ++fr.braidings;
  for_each_beta(b, conds, [&](const Mat& beta) {
    ++fr.betas;
    if (rank(beta) == want_rank && verify_lifted(LiftedQLie{b, beta}).ok()) ++fr.solutions;
  });
}

// Calls visit on every assignment of the listed c entries over GF(p).
void for_each_assignment(Field f, const Mat& start, const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                         const std::function<void(const Mat&)>& visit) {
  std::vector<Scalar> el = field_elements(f);
  std::size_t p = el.size(), total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= p;
  Mat c = start;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t cc = code;
    for (auto [i, j] : slots) {
      c(i, j) = el[cc % p];
      cc /= p;
    }
    visit(c);
  }
}

std::vector<FamilyReport> table_families(Field f) {
  FamilyReport f211{"table CASE 2.1.1", 0, 0, 0}, f212{"table CASE 2.1.2", 0, 0, 0}, f2211{"table CASE 2.2.1.1", 0, 0, 0};
  std::vector<BetaCondition> shape{entry_is(0, 0, 0)};
  for (std::size_t j = 0; j < 4; ++j) shape.push_back(entry_is(1, j, 0));
  auto with = [&](std::vector<BetaCondition> extra) {
    extra.insert(extra.begin(), shape.begin(), shape.end());
    return extra;
  };
  auto c211 = with({entry_is(0, 1, 0), entry_is(0, 3, 1)});
  auto c212 = with({entry_is(0, 1, 1)});
  auto c2211 = with({entry_is(0, 3, 1), BetaCondition{{0, 1, 1, 0, 0, 0, 0, 0}, 0}});
  Mat start(f, 4, 4);
  for_each_assignment(f, start, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 3}}, [&](const Mat& c) {
    if (!check_yang_baxter(c, 2)) return;
    BraidedSpace b(2, c, false);
    if (!hypothesis_holds(b)) return;
    if (!c(3, 3).is_one()) {
      scan(f211, b, c211, 1);
      scan(f212, b, c212, 1);
    } else {
      scan(f2211, b, c2211, 1);
    }
  });
  return {f211, f212, f2211};
}

std::vector<FamilyReport> appendix_families(Field f) {
  Mat id = Mat::identity(f, 4), minus = Scalar(f, -1) * id;
  FamilyReport zero{"appendix dim Im(c+Id) = 0", 0, 0, 0};
  {
    BraidedSpace b(2, minus, false);
    if (hypothesis_holds(b)) scan(zero, b, {}, 2);
  }

  // c = -Id + u v^T with u normalized to have leading entry 1.
  FamilyReport one{"appendix dim Im(c+Id) = 1", 0, 0, 0};
  std::vector<Scalar> el = field_elements(f);
  std::size_t p = el.size(), total = p * p * p * p;
  for (std::size_t cu = 1; cu < total; ++cu) {
    Vec u(4, Scalar(f, 0));
    std::size_t t = cu;
    for (auto& x : u) {
      x = el[t % p];
      t /= p;
    }
    std::size_t lead = 0;
    while (u[lead].is_zero()) ++lead;
    if (!u[lead].is_one()) continue;
    for (std::size_t cv = 1; cv < total; ++cv) {
      Mat c = minus;
      std::size_t s = cv;
      for (std::size_t j = 0; j < 4; ++j, s /= p)
        for (std::size_t i = 0; i < 4; ++i) c(i, j) = c(i, j) + u[i] * el[s % p];
      if (!check_yang_baxter(c, 2)) continue;
      BraidedSpace b(2, c, false);
      if (hypothesis_holds(b)) scan(one, b, {}, 2);
    }
  }

  // Shape left once x_i (x) x_i lies in Im h(c), split as in the proof.
  FamilyReport a1{"appendix CASE 1", 0, 0, 0}, a21{"appendix CASE 2.1", 0, 0, 0},
      a221{"appendix CASE 2.2.1", 0, 0, 0}, a222{"appendix CASE 2.2.2", 0, 0, 0};
  Mat start(f, 4, 4);
  start(0, 0) = Scalar(f, -1);
  start(3, 3) = Scalar(f, -1);
  for_each_assignment(f, start, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}, [&](const Mat& c) {
    if (rank(c + id) != 1 || !check_yang_baxter(c, 2)) return;
    BraidedSpace b(2, c, false);
    if (!hypothesis_holds(b)) return;
    scan(a1, b, {entry_is(1, 0, 1)}, 2);
    scan(a21, b, {entry_is(1, 0, 0), entry_is(0, 3, 1)}, 2);
    scan(a221, b, {entry_is(1, 0, 0), entry_is(0, 3, 0), entry_is(1, 1, 1)}, 2);
    scan(a222, b, {entry_is(1, 0, 0), entry_is(0, 3, 0), entry_is(1, 1, 0), entry_is(1, 2, 1)}, 2);
  });
  return {zero, one, a1, a21, a221, a222};
}

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rationals()) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Scalar::fraction(f, num(rng), den(rng));
  }
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
  return Scalar(f, d(rng));
}

Scalar random_unit(Field f, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

UduReport udu_check(Field f, std::size_t trials, std::mt19937_64& rng) {
  UduReport r;
  Mat u(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) u(i, j) = Scalar(f, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    Mat d(f, 4, 4);
    Scalar tr(f, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      d(i, i) = random_scalar(f, rng);
      tr = tr + d(i, i);
    }
    ++r.trials;
    if (u * d * u == tr * u) ++r.passed;
  }
  return r;
}

// Three candidate generators, used round robin.
Mat survey_candidate(Field f, std::size_t i, std::mt19937_64& rng) {
  Mat c(f, 4, 4);
  std::uniform_int_distribution<int> coin(0, 2), slot(0, 15);
  switch (i % 3) {
    case 0:
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
          if (coin(rng) == 0) c(r, s) = random_scalar(f, rng);
      return c;
    case 1: {
      Mat u(f, 4, 2), w(f, 2, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
          u(r, s) = random_scalar(f, rng);
          w(s, r) = random_scalar(f, rng);
        }
      return u * w - Mat::identity(f, 4);
    }
    default: {
      // Diagonal type with one perturbed entry, moved by a random basis change.
      c(0, 0) = random_unit(f, rng);
      c(2, 1) = random_unit(f, rng);
      c(1, 2) = random_unit(f, rng);
      c(3, 3) = random_unit(f, rng);
      int e = slot(rng);
      c(e / 4, e % 4) = c(e / 4, e % 4) + random_scalar(f, rng);
      Mat a(f, 2, 2);
      do {
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t s = 0; s < 2; ++s) a(r, s) = random_scalar(f, rng);
      } while (!inverse(a));
      Mat aa = kron(a, a);
      return aa * c * *inverse(aa);
    }
  }
}

SurveyReport survey(Field f, std::size_t samples, std::mt19937_64& rng) {
  SurveyReport r;
  std::uint32_t p = f.characteristic();
  for (std::size_t i = 0; i < samples; ++i) {
    ++r.samples;
    Mat c = survey_candidate(f, i, rng);
    if (!check_yang_baxter(c, 2)) continue;
    ++r.braided;
    BraidedSpace b(2, c, false);
    if (!hypothesis_holds(b)) continue;
    ++r.hypothesis;
    std::vector<Mat> basis = lifted_linear_space(b);
    std::vector<Mat> betas;
    std::size_t points = 1;
    for (std::size_t k = 0; k < basis.size() && points <= 625; ++k) points *= p;
    if (points <= 625) {
      for_each_beta(b, {}, [&](const Mat& beta) { betas.push_back(beta); });
    } else {
      for (int t = 0; t < 64; ++t) {
        Mat beta(f, 2, 4);
        for (const auto& m : basis) beta = beta + random_scalar(f, rng) * m;
        betas.push_back(beta);
      }
    }
    for (const auto& beta : betas) {
      std::size_t rk = rank(beta);
      if (rk == 0) continue;
      LiftedQLie q{b, beta};
      if (!verify_lifted(q).ok()) continue;
      ++r.lifted;
      if (rk == 1) {
        ++r.im_beta_1;
        try {
          canonical_form(q);
          ++r.classified;
        } catch (const Error&) {
        }
      } else {
        ++r.im_beta_2;
        if (rank(c + Mat::identity(f, 4)) == 2) ++r.im_c_plus_id_2;
        if (ker_beta_splits(q)) ++r.ker_split;
      }
    }
  }
  return r;
}

}  // namespace

std::string scope_name(AppendixScope s) {
  switch (s) {
    case AppendixScope::Udu: return "udu";
    case AppendixScope::CaseFamilies: return "case_families";
    case AppendixScope::RandomSurvey: return "random_survey";
  }
  return "";
}

AppendixScope parse_scope(const std::string& s) {
  if (s == "udu") return AppendixScope::Udu;
  if (s == "case_families") return AppendixScope::CaseFamilies;
  if (s == "random_survey") return AppendixScope::RandomSurvey;
  fail(Errc::Parse, "unknown scope '" + s + "'");
}

bool AppendixReport::ok() const {
  if (udu && !udu->ok()) return false;
  for (const auto& fr : families)
    if (fr.solutions != 0) return false;
  if (survey && !survey->ok()) return false;
  return true;
}

bool ker_beta_splits(const LiftedQLie& q) {
  const Mat& c = q.space.c();
  Field f = q.space.field();
  auto split = split_minpoly(q.space);
  if (!split) return false;
  Subspace k = kernel(q.beta);
  Subspace a = image(c + Mat::identity(f, c.rows()));
  Subspace b = k.intersect(image(eval_poly_at(split->h, c)));
  return a.intersect(b).dim() == 0 && a.sum(b) == k;
}

AppendixReport appendix_checks(Field f, AppendixScope scope, const AppendixOptions& opt) {
  if (f.characteristic() == 2) fail(Errc::CharTwo, "appendix checks need char != 2");
  if (scope != AppendixScope::Udu && f.is_rationals())
    fail(Errc::UnsupportedField, scope_name(scope) + " enumerates over GF(p)");
  AppendixReport r;
  r.field = f;
  r.scope = scope;
  std::mt19937_64 rng(opt.seed);
  switch (scope) {
    case AppendixScope::Udu: r.udu = udu_check(f, opt.trials, rng); break;
    case AppendixScope::CaseFamilies: {
      r.families = table_families(f);
      auto more = appendix_families(f);
      r.families.insert(r.families.end(), more.begin(), more.end());
      break;
    }
    case AppendixScope::RandomSurvey: r.survey = survey(f, opt.samples, rng); break;
  }
  return r;
}

}  // namespace qlie
