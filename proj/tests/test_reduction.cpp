#include <sstream>

#include "doctest.h"
#include "infotile/reduction.hpp"

using namespace infotile;

namespace {

TileSet mono() { return {1, {{1, 1, 1, 1}}}; }

}  // namespace

TEST_CASE("monochrome compile: manifest by hand") {
  ConstraintSystem cs = compile_ttori(mono());
  REQUIRE(cs.manifest);
  const auto& m = *cs.manifest;
  CHECK(m.k == 9);
  // one of each wrapper
  for (auto key : {"TTORI", "OTORI", "CTORI", "TORI", "COLD", "COL", "SW"}) CHECK(m.instances.at(key) == 1);
  CHECK(m.instances.at("CYCS") == 2);
  CHECK(m.instances.at("SAT_NE_1_2") == 4);
  // switch pairs: 8 colors, residues mod 4 two each; 36 pairs j1 <= j2 minus
  // 2*2 + 2*2 excluded per block = 28; two blocks, four rows each
  CHECK(m.instances.at("SAT_LE_1_2") == 224);
  // 2 faces, 2^4 quadruples minus the one tile, two rows each
  CHECK(m.instances.at("SAT_LE_3_4") == 60);
  CHECK(m.instances.at("FLIP") == 18);
  CHECK(m.instances.at("UNIF_4") == 18);
  CHECK(m.instances.at("UNIF_3") == 2 * 18 + 224);
  CHECK(m.instances.at("UNIF_105") == 60);
  CHECK(m.instances.at("UNIF_2") == 2 + 18 + 9 + 4);
  CHECK(m.instances.at("UNIF") == 18 + 260 + 60 + 33 + 4);
  CHECK(m.instances.at("TRIPLE") == m.instances.at("UNIF"));
  CHECK(m.instances.size() == 18);
  CHECK(cs.free_vars.empty());
  CHECK(lint(cs).empty());
}

TEST_CASE("compile is byte-deterministic and round-trips") {
  std::string a = json_doc_string(system_json(compile_ttori(mono())));
  std::string b = json_doc_string(system_json(compile_ttori(mono())));
  CHECK(a == b);
  ConstraintSystem back = system_from_json(json::parse(a));
  CHECK(json_doc_string(system_json(back)) == a);
}

TEST_CASE("tile set changes only the last block") {
  TileSet two{2, {{1, 1, 1, 1}, {2, 2, 2, 2}}};
  auto cs = compile_ttori(two);
  CHECK(cs.manifest->instances.at("SAT_LE_3_4") == 2 * 2 * (16 - 2));
  TileSet rot{2, {{1, 2, 1, 2}}};
  // face 1 reads (d3,d4,d1,d2) = (1,2,1,2) as well
  CHECK(compile_ttori(rot).manifest->instances.at("SAT_LE_3_4") == 2 * 2 * 15);
  TileSet asym{2, {{1, 1, 2, 2}}};
  CHECK(compile_ttori(asym).manifest->instances.at("SAT_LE_3_4") == 2 * 2 * 15);
}

TEST_CASE("flatten and slackify") {
  ConstraintSystem cs;
  cs.free_vars = {"A", "B"};
  cs.rows.push_back({ci_expr({"A"}, {"B"}, {}), Rel::EQ, 0, "eq"});
  cs.rows.push_back({InfoExpr::entropy({"A"}), Rel::GE, Rational(1, 2), "ge"});
  cs.rows.push_back({InfoExpr::entropy({"B"}), Rel::LE, 2, "le"});
  SparseAffineSystem sas = flatten(cs);
  REQUIRE(sas.rows.size() == 4);
  for (auto& r : sas.rows) CHECK(r.rel == Rel::GE);
  CHECK(sas.rows[3].lhs.coef({"B"}) == -1);
  CHECK(sas.rows[3].rhs == -2);

  std::vector<VarId> slacks;
  SparseAffineSystem s = slackify(sas, &slacks);
  REQUIRE(slacks.size() == 4);
  CHECK(slacks[0].name() == "V1");
  CHECK(s.vars.size() == 6);
  for (size_t j = 0; j < s.rows.size(); ++j) {
    CHECK(s.rows[j].rel == Rel::EQ);
    CHECK(s.rows[j].lhs.coef({slacks[j]}) == -1);
  }
  CHECK_THROWS_AS(slackify(s), std::invalid_argument);

  // name clash with an existing V1
  SparseAffineSystem clash{{"V1"}, {{InfoExpr::entropy({"V1"}), Rel::GE, 0, ""}}};
  std::vector<VarId> sl;
  slackify(clash, &sl);
  CHECK(sl[0].name() == "V1~1");

  auto back = sparse_from_json(sparse_json(s));
  CHECK(json_doc_string(sparse_json(back)) == json_doc_string(sparse_json(s)));
}

TEST_CASE("conjoin keeps witnesses apart") {
  ConstraintSystem p, q;
  p.free_vars = {"X"};
  p.exists = {"U"};
  p.rows.push_back({ci_expr({"X"}, {"U"}, {}), Rel::EQ, 0, "p"});
  q.free_vars = {"U"};
  q.exists = {"X"};
  q.rows.push_back({ci_expr({"U"}, {"X"}, {}), Rel::EQ, 0, "q"});
  auto c = conjoin(p, q);
  CHECK(c.free_vars == std::vector<VarId>{"X", "U"});
  CHECK(c.exists == std::vector<VarId>{"U~1", "X~1"});
  CHECK(c.rows[0].lhs == ci_expr({"X"}, {"U~1"}, {}));
  CHECK(c.rows[1].lhs == ci_expr({"U"}, {"X~1"}, {}));

  auto e = exists_extend(p, {"X"}, {});
  CHECK(e.free_vars.empty());
  CHECK(e.exists.size() == 2);
  CHECK_THROWS_AS(exists_extend(p, {"U"}, {}), std::invalid_argument);
}

TEST_CASE("lint flags stray rows") {
  ConstraintSystem cs;
  cs.free_vars = {"A"};
  cs.rows.push_back({InfoExpr::entropy({"A"}, 2), Rel::GE, 1, "odd"});
  auto issues = lint(cs);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].tag == "odd");
}

TEST_CASE("statement forms trace every coefficient") {
  CISystem ci;
  ci.vars = {"X1", "A", "B"};
  ci.binary_var = VarId("X1");
  ci.relations = {{{"X1"}, {"A"}, {}}, {{"A"}, {"B"}, {"X1"}}, {{"A"}, {"A"}, {"X1", "B"}}};
  auto rows = source_rows(ci);
  CHECK(rows.size() == 4);
  for (auto f : {StatementForm::COND_AFFINE, StatementForm::AFFINE_SUBSPACE, StatementForm::BOOLEAN}) {
    Statement st = emit_form(ci, f);
    CHECK(!check_audit(st, rows));
    std::ostringstream os;
    write_statement(os, st);
    CHECK(os.str() == json_doc_string(statement_json(st)));
    CHECK(!statement_text(st).empty());
    Statement back = statement_from_json(json::parse(os.str()));
    CHECK(!check_audit(back, rows));
    CHECK(json_doc_string(statement_json(back)) == os.str());
  }
  Statement st = emit_form(ci, StatementForm::COND_AFFINE);
  InfoExpr want;
  for (auto& r : ci.relations) want += ci_expr(r.a, r.b, r.c);
  CHECK(st.a == want);
  CHECK(st.vars[0] == VarId("X1"));

  Statement bad = st;
  bad.a.add({"A"}, 1);
  CHECK(check_audit(bad, rows));
  Statement dropped = st;
  dropped.audit.erase(dropped.audit.begin());
  CHECK(check_audit(dropped, rows));

  Statement b = emit_form(ci, StatementForm::BOOLEAN);
  CHECK(b.disjuncts.size() == 8);
  b.disjuncts[0].b += 1;
  CHECK(check_audit(b, rows));
}

TEST_CASE("statement from a sparse system with a sign flip") {
  SparseAffineSystem sas;
  sas.vars = {"R", "A", "B"};
  InfoExpr neg = ci_expr({"A"}, {"B"}, {});
  neg *= -1;
  sas.rows.push_back({neg, Rel::GE, 0, ""});
  sas.rows.push_back({InfoExpr::entropy({"R"}), Rel::EQ, 1, ""});
  Statement st = emit_form(sas, StatementForm::AFFINE_SUBSPACE, VarId("R"));
  CHECK(st.a == ci_expr({"A"}, {"B"}, {}));
  CHECK(!check_audit(st, source_rows(sas)));
  sas.rows.push_back({InfoExpr::entropy({"A"}), Rel::GE, 1, ""});
  CHECK_THROWS_AS(emit_form(sas, StatementForm::COND_AFFINE, VarId("R")), std::invalid_argument);
  CHECK_NOTHROW(emit_form(sas, StatementForm::BOOLEAN, std::nullopt));
  CHECK(parse_form("boolean") == StatementForm::BOOLEAN);
  CHECK_THROWS_AS(parse_form("nope"), std::invalid_argument);
}
