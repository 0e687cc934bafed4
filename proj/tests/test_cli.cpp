#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "qlie/classify.hpp"
#include "qlie/cli.hpp"
#include "qlie/json_io.hpp"

using namespace qlie;
using namespace qlie::test;
using json_io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string inline_json(const LiftedQLie& q) { return json_io::to_json(q).dump(); }

std::vector<std::size_t> sizes(const Json& j) { return j.get<std::vector<std::size_t>>(); }

}  // namespace

TEST_CASE("verify reports each axiom") {
  Run ok = run({"verify", "--input", inline_json(row_q(1))});
  CHECK(ok.code == 0);
  Json j = ok.json();
  CHECK(j["command"] == "verify");
  for (const char* k : {"yang_baxter", "antisymmetry", "bracket_left", "bracket_right", "jacobi", "ok"}) CHECK(j[k] == true);

  LiftedQLie bad = row_q(1);
  bad.beta(1, 1) = Scalar(Q, 1);
  Run r = run({"verify", "--input", inline_json(bad)});
  CHECK(r.code == 1);
  Json b = r.json();
  CHECK(b["antisymmetry"] == false);
  CHECK(b["ok"] == false);
  CHECK(b["failure"] == verify_lifted(bad).first_failure());
}

TEST_CASE("classify agrees with the library") {
  std::mt19937 rng(5);
  for (int row : {1, 4, 7, 8}) {
    LiftedQLie q = transform(row_q(row, 3), random_invertible(Q, 2, rng));
    CanonicalFormResult lib = canonical_form(q);
    Run r = run({"classify", "--input", inline_json(q)});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["row"] == lib.row);
    CHECK(j["case"] == lib.case_path);
    CHECK(j["alpha"] == Json::parse(json_io::to_json(lib.alpha).dump()));
    if (lib.gamma) CHECK(j["gamma"] == lib.gamma->str());
  }
}

TEST_CASE("envelope and primitives") {
  LiftedQLie q = row_q(8, 1);
  Run r = run({"envelope", "--input", inline_json(q), "--degree", "5"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  Presentation p = uq_relations(q, split_minpoly(q.space));
  CHECK(sizes(j["filtration_dims"]) == filtration_dims(p, 5));
  CHECK(sizes(j["sq_dims"]) == sq_graded_dims(q.space, 5));
  CHECK(j["pbw"] == true);
  CHECK(j["bg"]["I"] == true);

  Run s = run({"primitives", "--input", inline_json(row_q(1)), "--degree", "4"});
  CHECK(s.code == 0);
  CHECK(s.json()["equals_v"] == true);

  // A bare space selects S_Q.
  Json space = json_io::to_json(table_row(Field::prime(3), 1).q.space);
  Run g = run({"primitives", "--input", space.dump(), "--degree", "3"});
  CHECK(g.code == 1);
  CHECK(g.json()["algebra"] == "S_Q");
  CHECK(g.json()["equals_v"] == false);
}

TEST_CASE("table, search and nichols-check") {
  Run t = run({"table", "--field", "GF(5)"});
  REQUIRE(t.code == 0);
  std::size_t expected = 0;
  for (int row = 1; row <= 8; ++row) expected += finite_field_instances(Field::prime(5), row).size();
  CHECK(t.json()["rows"].size() == expected);

  Run s = run({"search", "--scope", "udu"});
  CHECK(s.code == 0);
  CHECK(s.json()["ok"] == true);

  Run n = run({"nichols-check", "--degree", "4"});
  CHECK(n.code == 0);
  for (const auto& e : n.json()["entries"]) CHECK(e["quadratic"] == true);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"search", "--field", "GF(5)", "--scope", "random_survey", "--samples", "300", "--seed", "9"};
  Run a = run(args), b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  Run c = run({"table", "--format", "text"}), d = run({"table", "--format", "text"});
  CHECK(c.out == d.out);
}

TEST_CASE("text format") {
  Run r = run({"verify", "--format", "text", "--input", inline_json(row_q(2))});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: true") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("exit codes and error paths") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"envelope", "--input", inline_json(row_q(1)), "--degree", "40"}).code == 2);
  CHECK(run({"table", "--format", "yaml"}).code == 2);

  Run field = run({"table", "--field", "GF(4)"});
  CHECK(field.code == 2);
  CHECK(field.out.empty());

  Run gamma = run({"table", "--gamma", "1/0"});
  CHECK(gamma.code == 2);
  CHECK(gamma.err.find("--gamma") != std::string::npos);

  Run cell = run({"verify", "--input", R"({"space":{"field":"Q","dim":2,"c":[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]},"beta":[[0,"x",0,0],[0,0,0,0]]})"});
  CHECK(cell.code == 2);
  CHECK(cell.err.find("/beta/0/1") != std::string::npos);

  Run shape = run({"verify", "--input", R"({"space":{"field":"Q","dim":2,"c":[[1,0],[0,1]]},"beta":[[0,0,0,0],[0,0,0,0]]})"});
  CHECK(shape.code == 2);
  CHECK(shape.err.find("/space/c") != std::string::npos);

  Run garbage = run({"verify", "--input", "{not json"});
  CHECK(garbage.code == 2);

  Run braid = run({"classify", "--input", R"({"space":{"field":"Q","dim":2,"c":[[1,0,0,0],[1,0,1,0],[0,1,0,0],[0,0,0,1]]},"beta":[[0,0,0,0],[0,0,0,0]]})"});
  CHECK(braid.code == 1);
  CHECK(braid.err.find("NotBraided") != std::string::npos);

  Run scope = run({"classify", "--input", inline_json({row_q(1).space, Mat(Q, 2, 4)})});
  CHECK(scope.code == 1);
  CHECK(scope.err.find("PreconditionViolated") != std::string::npos);
}
