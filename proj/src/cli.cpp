#include "qlie/cli.hpp"

#include <algorithm>
#include <iomanip>

#include <CLI11.hpp>

#include "qlie/appendix.hpp"
#include "qlie/classify.hpp"
#include "qlie/json_io.hpp"
#include "qlie/nichols.hpp"

namespace qlie {

namespace {

using json_io::Json;
using json_io::OJson;
using json_io::to_json;

struct Options {
  std::string input;
  std::string field = "Q";
  std::string search_field = "GF(3)";
  std::vector<std::string> gammas;
  std::size_t degree = 6;
  std::size_t buffer = 2;
  std::string scope;
  std::uint64_t seed = AppendixOptions{}.seed;
  std::size_t samples = AppendixOptions{}.samples;
  unsigned jobs = 1;
  std::string format = "json";
};

// Verdict plus report; the exit code is 0 when ok.
struct Outcome {
  OJson report;
  bool ok = true;
};

OJson opt_scalar(const std::optional<Scalar>& s) { return s ? to_json(*s) : OJson(nullptr); }

OJson relations_json(const std::vector<TensorElem>& rels) {
  OJson out = OJson::array();
  for (const auto& r : rels) out.push_back(OJson{{"text", r.str()}, {"terms", to_json(r)}});
  return out;
}

OJson sizes(const std::vector<std::size_t>& v) {
  OJson out = OJson::array();
  for (auto x : v) out.push_back(x);
  return out;
}

// Any of: a lifted QLie algebra (U_Q), an explicit presentation, or a bare space (S_Q).
std::pair<Presentation, std::string> presentation_input(const Json& j) {
  if (j.is_object() && j.contains("beta")) {
    LiftedQLie q = json_io::lifted_from_json(j);
    return {uq_relations(q, split_minpoly(q.space)), "U_Q"};
  }
  if (j.is_object() && j.contains("relations")) return {json_io::presentation_from_json(j), "given"};
  if (j.is_object() && j.contains("c")) return {sq_relations(json_io::space_from_json(j)), "S_Q"};
  fail(Errc::Parse, "/: expected a lifted QLie algebra, a presentation or a braided space");
}

void require_braided(const BraidedSpace& b) {
  if (!check_yang_baxter(b)) fail(Errc::NotBraided, "c does not satisfy the braid relation");
}

Outcome cmd_verify(const Options& o) {
  LiftedQLie q = json_io::lifted_from_json(json_io::load(o.input));
  bool ybe = check_yang_baxter(q.space);
  LiftedReport r = verify_lifted(q);
  Outcome out;
  out.ok = ybe && r.ok();
  out.report = OJson{{"command", "verify"},
                     {"field", q.space.field().name()},
                     {"yang_baxter", ybe},
                     {"antisymmetry", r.antisym},
                     {"bracket_left", r.bracket_left},
                     {"bracket_right", r.bracket_right},
                     {"jacobi", r.jacobi},
                     {"ok", out.ok}};
  if (!ybe)
    out.report["failure"] = "yang_baxter";
  else if (!r.ok())
    out.report["failure"] = r.first_failure();
  return out;
}

Outcome cmd_classify(const Options& o) {
  LiftedQLie q = json_io::lifted_from_json(json_io::load(o.input));
  require_braided(q.space);
  CanonicalFormResult r = canonical_form(q);
  TableRow row = table_row(q.space.field(), r.row, r.gamma);
  return {OJson{{"command", "classify"},
                {"row", r.row},
                {"gamma", opt_scalar(r.gamma)},
                {"gamma_square_class_note", r.gamma_square_class_note},
                {"case", r.case_path},
                {"alpha", to_json(r.alpha)},
                {"f", row.f.str("X")}},
          true};
}

Outcome cmd_envelope(const Options& o) {
  auto [p, kind] = presentation_input(json_io::load(o.input));
  require_braided(p.space);
  std::vector<std::size_t> fd = filtration_dims(p, o.degree, o.buffer);
  std::vector<std::size_t> sd = sq_graded_dims(p.space, o.degree);
  Outcome out;
  out.report = OJson{{"command", "envelope"},
                     {"algebra", kind},
                     {"field", p.space.field().name()},
                     {"degree", o.degree},
                     {"buffer", o.buffer},
                     {"relations", relations_json(canonical_relations(p.relations, p.space.dim()))},
                     {"filtration_dims", sizes(fd)},
                     {"sq_dims", sizes(sd)},
                     {"pbw", fd == sd}};
  out.ok = fd == sd;
  int top = 0;
  for (const auto& r : p.relations) top = std::max(top, r.degree());
  if (top <= 2) {
    BGReport bg = bg_conditions(p);
    out.report["bg"] = OJson{{"I", bg.I}, {"J", bg.J}};
    out.ok = out.ok && bg.I && bg.J;
  }
  return out;
}

Outcome cmd_primitives(const Options& o) {
  auto [p, kind] = presentation_input(json_io::load(o.input));
  require_braided(p.space);
  PrimitiveReport r = primitives_of_quotient(p, o.degree, o.buffer);
  OJson levels = OJson::array();
  for (std::size_t d = 1; d < r.levels.size(); ++d) {
    OJson basis = OJson::array();
    for (const auto& z : r.levels[d]) basis.push_back(z.str());
    levels.push_back(OJson{{"level", d}, {"dim", r.levels[d].size()}, {"basis", basis}});
  }
  return {OJson{{"command", "primitives"},
                {"algebra", kind},
                {"field", p.space.field().name()},
                {"degree", o.degree},
                {"graded", r.graded},
                {"coideal", r.coideal},
                {"equals_v", r.equals_v},
                {"levels", levels}},
          r.equals_v && r.coideal};
}

std::vector<Scalar> gamma_values(Field f, const Options& o) {
  std::vector<Scalar> out;
  for (const auto& g : o.gammas) out.push_back(Scalar::parse(f, g));
  return out;
}

Outcome cmd_table(const Options& o) {
  Field f = Field::parse(o.field);
  std::vector<TableRow> table;
  if (o.gammas.empty() && !f.is_rationals()) {
    for (int row = 1; row <= 8; ++row)
      for (const auto& g : finite_field_instances(f, row)) table.push_back(table_row(f, row, g));
  } else {
    table = table_emit(f, o.gammas.empty() ? default_gammas(f) : gamma_values(f, o));
  }
  OJson rows = OJson::array();
  for (const auto& r : table) {
    std::vector<std::string> rels;
    for (const auto& t : r.relations) rels.push_back(t.str());
    rows.push_back(OJson{{"row", r.row},
                         {"gamma", opt_scalar(r.gamma)},
                         {"gamma_constraint", gamma_constraint(r.row)},
                         {"f", r.f.str("X")},
                         {"c", to_json(r.q.space.c())},
                         {"beta", to_json(r.q.beta)},
                         {"relations", rels}});
  }
  return {OJson{{"command", "table"}, {"field", f.name()}, {"rows", rows}}, true};
}

OJson appendix_json(const AppendixReport& r) {
  OJson j{{"scope", scope_name(r.scope)}, {"ok", r.ok()}};
  if (r.udu) j["udu"] = OJson{{"trials", r.udu->trials}, {"passed", r.udu->passed}};
  if (!r.families.empty()) {
    OJson fams = OJson::array();
    for (const auto& fr : r.families)
      fams.push_back(OJson{{"family", fr.name}, {"braidings", fr.braidings}, {"betas", fr.betas}, {"solutions", fr.solutions}});
    j["families"] = fams;
  }
  if (r.survey) {
    const SurveyReport& s = *r.survey;
    j["survey"] = OJson{{"samples", s.samples},
                        {"braided", s.braided},
                        {"hypothesis", s.hypothesis},
                        {"lifted", s.lifted},
                        {"im_beta_1", s.im_beta_1},
                        {"classified", s.classified},
                        {"im_beta_2", s.im_beta_2},
                        {"im_c_plus_id_2", s.im_c_plus_id_2},
                        {"ker_split", s.ker_split}};
  }
  return j;
}

Outcome cmd_search(const Options& o) {
  Field f = Field::parse(o.search_field);
  std::vector<AppendixScope> scopes;
  if (!o.scope.empty())
    scopes.push_back(parse_scope(o.scope));
  else if (f.is_rationals())
    scopes = {AppendixScope::Udu};
  else
    scopes = {AppendixScope::Udu, AppendixScope::CaseFamilies, AppendixScope::RandomSurvey};
  AppendixOptions ao;
  ao.seed = o.seed;
  ao.samples = o.samples;
  Outcome out;
  OJson reports = OJson::array();
  for (auto s : scopes) {
    AppendixReport r = appendix_checks(f, s, ao);
    out.ok = out.ok && r.ok();
    reports.push_back(appendix_json(r));
  }
  out.report = OJson{{"command", "search"}, {"field", f.name()}, {"seed", o.seed}, {"reports", reports}, {"ok", out.ok}};
  return out;
}

OJson nichols_entry(const BraidedSpace& b, std::size_t degree) {
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= degree; ++n) ranks.push_back(rank(quantum_symmetrizer(b, n)));
  std::vector<std::size_t> sq = sq_graded_dims(b, degree);
  return OJson{{"ranks", sizes(ranks)}, {"sq_dims", sizes(sq)}, {"quadratic", ranks == sq}};
}

Outcome cmd_nichols(const Options& o) {
  Outcome out;
  OJson entries = OJson::array();
  std::string field;
  if (!o.input.empty()) {
    Json j = json_io::load(o.input);
    BraidedSpace b = j.is_object() && j.contains("space") ? json_io::space_from_json(j["space"], "/space")
                                                          : json_io::space_from_json(j);
    require_braided(b);
    field = b.field().name();
    entries.push_back(nichols_entry(b, o.degree));
  } else {
    Field f = Field::parse(o.field);
    field = f.name();
    std::vector<Scalar> gammas = o.gammas.empty() ? std::vector<Scalar>{Scalar(f, 2)} : gamma_values(f, o);
    for (int row = 1; row <= 8; ++row)
      for (const auto& g : row_instances(row, gammas)) {
        OJson e{{"row", row}, {"gamma", opt_scalar(g)}};
        e.update(nichols_entry(table_row(f, row, g).q.space, o.degree));
        entries.push_back(e);
      }
  }
  for (const auto& e : entries) out.ok = out.ok && e["quadratic"].get<bool>();
  out.report = OJson{{"command", "nichols-check"}, {"field", field}, {"degree", o.degree}, {"entries", entries}, {"ok", out.ok}};
  return out;
}

std::string cell(const OJson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const OJson& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + cell(x);
    return s;
  }
  return v.dump();
}

void render_text(const OJson& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, v] : j.items()) {
    bool records = v.is_array() && !v.empty() &&
                   std::all_of(v.begin(), v.end(), [](const OJson& x) { return x.is_object(); });
    bool table = records && std::all_of(v.begin(), v.end(), [](const OJson& x) {
                   return std::none_of(x.begin(), x.end(), [](const OJson& y) { return y.is_object(); });
                 });
    if (records && !table) {
      out << indent << key << ":\n";
      for (const auto& x : v) {
        out << indent << "  -\n";
        render_text(x, out, indent + "    ");
      }
    } else if (v.is_object()) {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    } else if (table) {
      out << indent << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, x] : v.front().items()) cols.push_back(k);
      std::vector<std::vector<std::string>> cells{cols};
      for (const auto& row : v) {
        std::vector<std::string> line;
        for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row[c]) : "");
        cells.push_back(line);
      }
      std::vector<std::size_t> width(cols.size(), 0);
      for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      for (const auto& line : cells) {
        out << indent << "  ";
        for (std::size_t i = 0; i < line.size(); ++i)
          out << std::left << std::setw(static_cast<int>(i + 1 < line.size() ? width[i] + 2 : 0)) << line[i];
        out << "\n";
      }
    } else {
      out << indent << key << ": " << cell(v) << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifted QLie algebras: verification, classification and enveloping algebras", "qlie"};
  app.require_subcommand(1);
  Options o;
  auto with_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto with_input = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--input", o.input, "JSON file, or inline JSON starting with '{'");
    if (required) opt->required();
  };
  auto with_degree = [&](CLI::App* s) {
    s->add_option("--degree", o.degree, "degree cap N")->check(CLI::Range(2, 12));
    s->add_option("--buffer", o.buffer, "stabilization buffer")->check(CLI::Range(1, 8));
  };

  auto* verify = app.add_subcommand("verify", "check the lifted QLie axioms");
  with_input(verify, true);
  with_format(verify);
  auto* classify = app.add_subcommand("classify", "reduce to a table row");
  with_input(classify, true);
  with_format(classify);
  auto* envelope = app.add_subcommand("envelope", "truncated U_Q: relations, dimensions, PBW");
  with_input(envelope, true);
  with_degree(envelope);
  with_format(envelope);
  auto* primitives = app.add_subcommand("primitives", "primitive elements of a truncated quotient");
  with_input(primitives, true);
  with_degree(primitives);
  with_format(primitives);
  auto* table = app.add_subcommand("table", "emit the classification table");
  table->add_option("--field", o.field, "Q or GF(p)");
  table->add_option("--gamma", o.gammas, "gamma values (repeatable)");
  with_format(table);
  auto* search = app.add_subcommand("search", "appendix checks for dim Im beta = 2");
  search->add_option("--field", o.search_field, "Q or GF(p)");
  search->add_option("--scope", o.scope, "udu, case_families or random_survey")
      ->check(CLI::IsMember({"udu", "case_families", "random_survey"}));
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--samples", o.samples, "survey sample count")->check(CLI::Range(1, 10000000));
  search->add_option("--jobs", o.jobs, "worker count")->check(CLI::Range(1, 256));
  with_format(search);
  auto* nichols = app.add_subcommand("nichols-check", "symmetrizer ranks against dim S_Q");
  with_input(nichols, false);
  nichols->add_option("--field", o.field, "Q or GF(p), for the table rows");
  nichols->add_option("--gamma", o.gammas, "gamma values (default 2)");
  nichols->add_option("--degree", o.degree, "largest degree")->check(CLI::Range(1, 7));
  with_format(nichols);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    // Options are validated before any computation.
    Field f = Field::parse(o.field);
    Field::parse(o.search_field);
    for (const auto& g : o.gammas) {
      try {
        Scalar::parse(f, g);
      } catch (const Error&) {
        fail(Errc::Parse, "--gamma: cannot read \"" + g + "\" as an element of " + f.name());
      }
    }
    Outcome res;
    if (verify->parsed()) res = cmd_verify(o);
    else if (classify->parsed()) res = cmd_classify(o);
    else if (envelope->parsed()) res = cmd_envelope(o);
    else if (primitives->parsed()) res = cmd_primitives(o);
    else if (table->parsed()) res = cmd_table(o);
    else if (search->parsed()) res = cmd_search(o);
    else res = cmd_nichols(o);
    if (o.format == "json")
      out << res.report.dump(2) << "\n";
    else
      render_text(res.report, out);
    return res.ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Parse || e.code() == Errc::UnsupportedField ? 2 : 1;
  }
}

}  // namespace qlie
