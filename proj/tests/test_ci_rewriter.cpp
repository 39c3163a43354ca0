#include <random>
#include <set>

#include "doctest.h"
#include "infotile/ci_rewriter.hpp"
#include "infotile/constants.hpp"
#include "infotile/entropy.hpp"
#include "infotile/gadgets.hpp"

using namespace infotile;

namespace {

CISystem fd2() {
  CISystem ci;
  ci.vars = {"X1", "X2"};
  ci.relations = {{{"X1"}, {"X1"}, {"X2"}}};
  ci.target = CITriple{{"X1"}, {"X2"}, {}};
  return ci;
}

// X2 uniform on 4 values, X1 = X2 mod 2: X1 is a function of X2.
FactoredJoint fd2_joint() {
  FactoredJoint j;
  uint32_t s = j.add_uniform_seed("s", 4);
  j.add_var("X2", {s}, {0, 1, 2, 3});
  j.add_var("X1", {s}, {0, 1, 0, 1});
  return j;
}

}  // namespace

TEST_CASE("disjointify on the two-variable functional dependency") {
  CISystem in = fd2();
  CHECK(!all_disjoint(in));
  CISystem out = disjointify(in);
  CHECK(all_disjoint(out));
  CHECK(is_disjoint(*out.target));
  REQUIRE(out.n() == 20);
  size_t named = 0, aux = 0;
  for (auto v : out.vars) (v.name().rfind("EQRES.", 0) == 0 ? aux : named)++;
  CHECK(named == 12);
  CHECK(aux == 8);
  // 4 EQRES x 4 RES3 x 3, 2 saturation rows per copy, 1 mapped relation
  CHECK(out.relations.size() == 48 + 12 + 1);
  CHECK(out.relations.back().a == VarSet{"Y1"});
  CHECK(out.relations.back().b == VarSet{"Y3"});
  CHECK(out.relations.back().c == VarSet{"Y6"});
  CHECK(out.target->b == VarSet{"Y4"});
  CHECK(out.size() <= static_cast<size_t>(kDisjointifySizeFactor) * in.size() * in.size());

  FactoredJoint j = fd2_joint();
  for (auto& r : in.relations) CHECK(std::abs(eval_relation(j, r)) < 1e-12);
  FactoredJoint ext = canonical_disjoint_extension(j, in, out);
  for (auto& r : out.relations) CHECK(std::abs(eval_relation(ext, r)) <= 1e-9);
}

TEST_CASE("disjointify preconditions") {
  CISystem one;
  one.vars = {"X1"};
  one.relations = {{{"X1"}, {"X1"}, {}}};
  one.target = one.relations[0];
  CHECK_THROWS_AS(disjointify(one), std::invalid_argument);
  CISystem nt = fd2();
  nt.target.reset();
  CHECK_THROWS_AS(disjointify(nt), std::invalid_argument);
  CISystem undeclared = fd2();
  undeclared.relations.push_back({{"Q"}, {"X1"}, {}});
  CHECK_THROWS_AS(validate_ci(undeclared), std::invalid_argument);
}

TEST_CASE("size growth stays under the asserted bound on a corpus") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CISystem ci;
    int n = 2 + static_cast<int>(rng() % 5);
    for (int i = 1; i <= n; ++i) ci.vars.emplace_back("X" + std::to_string(i));
    auto rnd = [&] {
      std::vector<VarId> s;
      for (auto v : ci.vars)
        if (rng() % 3 == 0) s.push_back(v);
      return VarSet(s);
    };
    int m = 1 + static_cast<int>(rng() % 6);
    for (int r = 0; r < m; ++r) ci.relations.push_back({rnd() | VarSet{ci.vars[0]}, rnd() | VarSet{ci.vars[1]}, rnd()});
    ci.target = CITriple{{ci.vars[0]}, {ci.vars[1]}, {}};
    CISystem out = disjointify(ci);
    CHECK(all_disjoint(out));
    CHECK(out.size() <= static_cast<size_t>(kDisjointifySizeFactor) * ci.size() * ci.size());
  }
}

TEST_CASE("CI-only rewrite of cardinality windows") {
  auto cs = instantiate_gadget({"UNIF_K", 2}, {"Y"});
  CISystem ci = to_ci_only(cs);
  REQUIRE(ci.binary_var);
  CHECK(ci.vars[0] == *ci.binary_var);
  CHECK(ci.binary_var->name() == "X1");
  // UNIF(X1): 2 aux + 6 rows; UNIF(Y) rows: 6; UNIF_EQ(Y;X1): 3 aux + 12 rows
  CHECK(ci.relations.size() == 6 + 6 + 12);
  CHECK(ci.n() == 1 + 3 + 2 + 3);
  std::set<std::string> names;
  for (auto v : ci.vars) names.insert(v.name());
  CHECK(names.count("UNIF_EQ.r1.U1"));

  auto big = instantiate_gadget({"UNIF_K", 105}, {"Y"});
  CISystem c105 = to_ci_only(big);
  bool saw_window = false, saw_prod = false;
  for (auto v : c105.vars) {
    if (v.name().rfind("UNIF_105_CI.", 0) == 0) saw_window = true;
    if (v.name().rfind("PROD.", 0) == 0) saw_prod = true;
  }
  CHECK(saw_window);
  CHECK(saw_prod);

  ConstraintSystem clash;
  clash.free_vars = {"X1"};
  clash.rows.push_back({ci_expr({"X1"}, {"X1"}, {}), Rel::EQ, 0, ""});
  CHECK(to_ci_only(clash).binary_var->name() == "X1~1");

  ConstraintSystem odd;
  odd.free_vars = {"A"};
  odd.rows.push_back({InfoExpr::entropy({"A"}), Rel::GE, Rational(1, 3), "odd"});
  CHECK_THROWS_AS(to_ci_only(odd), std::invalid_argument);
}

TEST_CASE("cardinality implication") {
  auto ci = to_ci_only(instantiate_gadget({"UNIF_K", 2}, {"Y"}));
  for (long r : {2L, 3L, 8L}) {
    CISystem out = to_cardinality_implication(ci, r);
    CHECK(out.card_bound == r);
    CHECK(out.vars[0].name() == "Y~1");
    CHECK(out.target->a == VarSet{out.vars[0]});
    CHECK(out.audit.size() == 4);
    CHECK(out.audit[3]["holds"] == true);
    CHECK(out.audit[3]["floor_log_r"] == (r == 8 ? 3 : 1));
  }
  CHECK_THROWS_AS(to_cardinality_implication(ci, 1), std::invalid_argument);
  CHECK_THROWS_AS(to_cardinality_implication(fd2(), 2), std::invalid_argument);
}

TEST_CASE("binary implication") {
  auto ci = to_cardinality_implication(to_ci_only(instantiate_gadget({"UNIF_K", 2}, {"Y"})), 3);
  CISystem out = binary_implication_instance(ci, 3);
  CHECK(all_disjoint(out));
  CHECK(out.target->a == VarSet{"Y1"});
  CHECK(out.target->b == VarSet{"Z1"});
  CHECK(out.card_bound == 3);
  CHECK_THROWS_AS(binary_implication_instance(ci, 4), std::invalid_argument);
  CHECK_THROWS_AS(binary_implication_instance(fd2(), 3), std::invalid_argument);
}

TEST_CASE("json round trip") {
  CISystem out = disjointify(fd2());
  std::string a = json_doc_string(ci_system_json(out));
  CHECK(json_doc_string(ci_system_json(ci_system_from_json(json::parse(a)))) == a);
  CHECK_THROWS_AS(ci_system_from_json(json::parse(R"({"n":3,"vars":["A"],"relations":[]})")), std::invalid_argument);
}
