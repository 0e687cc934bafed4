#include "qlie/table.hpp"

namespace qlie {

namespace {

constexpr std::uint8_t X1 = 0, X2 = 1;

TensorElem rel(Field f, std::initializer_list<std::pair<Scalar, Word>> terms) {
  TensorElem t(f, 2);
  for (const auto& [s, w] : terms) t.add(w, s);
  return t;
}

Mat flip_like(Field f, const std::vector<Scalar>& first_row, const Scalar& last) {
  Mat c = Mat::from_ints(f, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
  for (std::size_t j = 0; j < 4; ++j) c(0, j) = first_row[j];
  c(3, 3) = last;
  return c;
}

Mat beta_row(Field f, long a, const Scalar& b, long d) {
  Mat m(f, 2, 4);
  m(0, 1) = Scalar(f, a);
  m(0, 2) = b;
  m(0, 3) = Scalar(f, d);
  return m;
}

}  // namespace

bool row_is_parametric(int row) { return row == 3 || row == 4 || row == 6 || row == 7 || row == 8; }

std::string gamma_constraint(int row) {
  switch (row) {
    case 3:
    case 4: return "gamma in {0, 1} or gamma not a square";
    case 6: return "gamma != 0, 1";
    case 7: return "gamma != 1, -1";
    case 8: return "gamma = 1 or gamma not a square";
    default: return "";
  }
}

bool gamma_admissible(int row, const Scalar& g) {
  Field f = g.field();
  switch (row) {
    case 3:
    case 4: return g.is_zero() || g.is_one() || !g.is_square();
    case 6: return !g.is_zero() && !g.is_one();
    case 7: return !g.is_one() && !(g == Scalar(f, -1));
    case 8: return g.is_one() || !g.is_square();
    default: return false;
  }
}

TableRow table_row(Field f, int row, const std::optional<Scalar>& gamma) {
  if (row < 1 || row > 8) fail(Errc::PreconditionViolated, "table rows are numbered 1 to 8");
  if (f.characteristic() == 2) fail(Errc::CharTwo, "table rows need char != 2");
  if (row_is_parametric(row)) {
    if (!gamma) fail(Errc::PreconditionViolated, "row " + std::to_string(row) + " needs gamma");
    if (!(gamma->field() == f)) fail(Errc::FieldMismatch, "gamma field");
    if (!gamma_admissible(row, *gamma))
      fail(Errc::PreconditionViolated, "gamma = " + gamma->str() + " violates " + gamma_constraint(row));
  } else if (gamma) {
    fail(Errc::PreconditionViolated, "row " + std::to_string(row) + " takes no gamma");
  }
  Scalar zero(f, 0), one(f, 1), m1(f, -1), two(f, 2);
  Scalar g = gamma ? *gamma : zero;
  Poly x2m1 = Poly::from_roots(f, {one, m1});
  Mat c(f, 4, 4), beta = beta_row(f, 1, m1, 0);
  Poly fp = x2m1;
  std::vector<TensorElem> rels;
  switch (row) {
    case 1:
      c = flip_like(f, {one, zero, zero, zero}, one);
      rels = {rel(f, {{one, {X2, X1}}, {m1, {X1, X2}}, {one, {X1}}})};
      break;
    case 2:
      c = flip_like(f, {one, one, m1, zero}, one);
      rels = {rel(f, {{one, {X1, X1}}, {m1, {X2, X1}}, {one, {X1, X2}}, {m1, {X1}}})};
      break;
    case 3:
      c = flip_like(f, {m1, zero, zero, g}, one);
      rels = {rel(f, {{one, {X1, X1}}}), rel(f, {{one, {X2, X1}}, {m1, {X1, X2}}, {one, {X1}}})};
      break;
    case 4:
      c = flip_like(f, {one, zero, zero, g}, m1);
      beta = beta_row(f, 0, zero, 1);
      rels = {rel(f, {{one, {X2, X1}}, {m1, {X1, X2}}}), rel(f, {{g, {X1, X1}}, {-two, {X2, X2}}, {m1, {X1}}})};
      break;
    case 5:
      c = flip_like(f, {zero, one, zero, zero}, one);
      fp = x2m1 * Poly::x(f);
      rels = {rel(f, {{one, {X1, X1}}, {m1, {X2, X1}}, {one, {X1, X2}}, {one, {X1}}})};
      break;
    case 6:
      c = flip_like(f, {zero, zero, zero, zero}, one);
      c(1, 2) = g;
      c(2, 1) = g.inverse();
      beta = beta_row(f, 1, -g, 0);
      fp = x2m1 * Poly::x(f);
      rels = {rel(f, {{-g, {X2, X1}}, {one, {X1, X2}}, {g, {X1}}})};
      break;
    case 7:
      c = flip_like(f, {g, zero, zero, zero}, one);
      fp = x2m1 * Poly::linear(g);
      rels = {rel(f, {{one + g, {X2, X1}}, {-(one + g), {X1, X2}}, {m1, {X1}}})};
      break;
    case 8:
      c = flip_like(f, {one, zero, zero, g}, one);
      fp = x2m1 * Poly::linear(one);
      rels = {rel(f, {{two, {X2, X1}}, {-two, {X1, X2}}, {m1, {X1}}})};
      break;
  }
  return TableRow{row, gamma, LiftedQLie{BraidedSpace(2, c), beta}, fp, rels};
}

std::vector<std::optional<Scalar>> row_instances(int row, const std::vector<Scalar>& candidates) {
  if (!row_is_parametric(row)) return {std::nullopt};
  std::vector<std::optional<Scalar>> out;
  for (const auto& g : candidates)
    if (gamma_admissible(row, g)) out.emplace_back(g);
  return out;
}

std::vector<Scalar> default_gammas(Field f) { return {Scalar(f, 0), Scalar(f, 1), Scalar(f, 2)}; }

std::vector<std::optional<Scalar>> finite_field_instances(Field f, int row) {
  if (f.is_rationals()) fail(Errc::UnsupportedField, "finite field instances need GF(p)");
  std::vector<Scalar> all;
  for (std::uint32_t a = 0; a < f.characteristic(); ++a) all.emplace_back(f, a);
  if (row == 3 || row == 4 || row == 8) {
    std::vector<Scalar> reps{Scalar(f, 0), Scalar(f, 1)};
    for (const auto& a : all)
      if (!a.is_square()) {
        reps.push_back(a);
        break;
      }
    return row_instances(row, reps);
  }
  return row_instances(row, all);
}

TableCheck check_table_row(const TableRow& r) {
  TableCheck t;
  t.lifted = verify_lifted(r.q).ok();
  t.minpoly = minimal_polynomial(r.q.space.c()) == r.f;
  auto split = split_minpoly(r.q.space);
  if (split) {
    Presentation p = uq_relations(r.q, split);
    t.relations = p.relations == canonical_relations(r.relations, 2);
  }
  return t;
}

std::vector<TableRow> table_emit(Field f, const std::vector<Scalar>& gammas) {
  std::vector<TableRow> out;
  for (int row = 1; row <= 8; ++row)
    for (const auto& g : row_instances(row, gammas)) {
      TableRow r = table_row(f, row, g);
      TableCheck t = check_table_row(r);
      if (!t.ok())
        fail(Errc::InternalContradiction, "table row " + std::to_string(row) + (g ? " gamma=" + g->str() : "") +
                                              " failed re-verification");
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace qlie
