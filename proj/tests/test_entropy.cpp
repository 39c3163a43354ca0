#include <sstream>

#include "doctest.h"
#include "infotile/entropy.hpp"
#include "oracles.hpp"

using namespace infotile;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(floor_log2(BigInt(1)) == 0);
  CHECK(floor_log2(BigInt(1023)) == 9);
  CHECK(floor_log2(BigInt(1024)) == 10);
}

TEST_CASE("varsets are sorted sets ordered by name") {
  VarSet a{"b", "a", "b"};
  CHECK(a.size() == 2);
  CHECK(a.str() == "{a,b}");
  VarSet c{"c"};
  CHECK((a | c).size() == 3);
  CHECK(a.disjoint(c));
  CHECK(a.minus(VarSet{"a"}) == VarSet{"b"});
  CHECK(VarSet{"a"} < VarSet{"b"});
}

TEST_CASE("info expressions") {
  VarSet A{"A"}, B{"B"}, C{"C"};
  InfoExpr e = ci_expr(A, B, C);
  CHECK(e.coef(VarSet{"A", "C"}) == 1);
  CHECK(e.coef(VarSet{"B", "C"}) == 1);
  CHECK(e.coef(VarSet{"A", "B", "C"}) == -1);
  CHECK(e.coef(C) == -1);
  // I(A;B) has no H(empty) term
  CHECK(ci_expr(A, B, {}).size() == 3);
  // I(A;A|C) = H(A|C)
  CHECK(ci_expr(A, A, C).size() == 2);
  InfoExpr d = e;
  d += d;
  CHECK(d.coef(C) == -2);
  e -= e;
  CHECK(e.empty());

  AffineConstraint row{ci_expr(A, B, C), Rel::EQ, 0, "t"};
  auto t = recognize_ci(row);
  REQUIRE(t);
  CHECK(ci_expr(t->a, t->b, t->c) == row.lhs);
  row.lhs *= 2;
  CHECK(recognize_ci(row));
  row.lhs *= -1;
  CHECK(!recognize_ci(row));
  CHECK(to_ge_form(row).size() == 2);
  CHECK(to_ge_form({InfoExpr::entropy(A), Rel::LE, 1, ""})[0].lhs.coef(A) == -1);
}

TEST_CASE("entropy matches brute-force enumeration on random joints") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    FactoredJoint j = oracle::random_joint(rng, 3, 4, 6);
    std::vector<VarId> vars;
    for (auto& v : j.vars()) vars.push_back(v.name);
    for (uint32_t m = 1; m < 16; ++m) {
      std::vector<VarId> s;
      for (int i = 0; i < 4; ++i)
        if (m >> i & 1) s.push_back(vars[i]);
      CHECK(subset_entropy(j, VarSet(s)) == doctest::Approx(oracle::entropy(j, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("entropic vectors satisfy the Shannon axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FactoredJoint j = oracle::random_joint(rng, 4, 4, 8);
    std::vector<VarId> vars;
    for (auto& v : j.vars()) vars.push_back(v.name);
    EntropyVector ev = entropic_vector(j, vars);
    for (uint32_t a = 0; a < 16; ++a) {
      CHECK(ev.at(a) >= -1e-9);
      for (uint32_t b = 0; b < 16; ++b) {
        if ((a & b) == a) CHECK(ev.at(a) <= ev.at(b) + 1e-9);
        CHECK(ev.at(a | b) + ev.at(a & b) <= ev.at(a) + ev.at(b) + 1e-9);
      }
    }
  }
}

TEST_CASE("known distributions") {
  FactoredJoint j;
  uint32_t s = j.add_uniform_seed("s", 4);
  uint32_t t = j.add_seed("t", {Rational(1, 4), Rational(3, 4)});
  j.add_var("X", {s}, {0, 1, 2, 3});
  j.add_var("P", {s}, {0, 1, 0, 1});
  j.add_var("B", {t}, {0, 1});
  j.add_var("C", {}, {0});
  CHECK(subset_entropy(j, {"X"}) == doctest::Approx(2.0));
  CHECK(subset_entropy(j, {"X", "P"}) == doctest::Approx(2.0));
  CHECK(subset_entropy(j, {"B"}) == doctest::Approx(binary_entropy(0.25)));
  CHECK(subset_entropy(j, {"C"}) == 0.0);
  CHECK(subset_entropy(j, {"X", "B"}) == doctest::Approx(2.0 + binary_entropy(0.25)));
  EvalStats st;
  subset_entropy(j, {"P"}, &st);
  CHECK(st.atoms == 4);  // t is never touched

  auto pm = exact_marginal(j, {"P"});
  CHECK(pm.size() == 2);
  CHECK(pm.begin()->second == Rational(1, 2));
  auto pb = exact_marginal(j, {"B"});
  CHECK(pb.at({1}) == Rational(3, 4));

  CHECK_THROWS_AS(j.add_seed("bad", {Rational(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(j.add_var("Y", {s}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(j.add_var("X", {s}, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("joint files round-trip") {
  std::mt19937_64 rng(3);
  FactoredJoint j = oracle::random_joint(rng, 3, 3, 5);
  std::stringstream ss;
  write_joint(ss, j);
  std::string first = ss.str();
  FactoredJoint k = read_joint(ss);
  std::stringstream again;
  write_joint(again, k);
  CHECK(again.str() == first);
  std::istringstream bad("{\"seeds\":[{\"name\":\"a\",\"size\":2,\"probs\":[\"1/2\"]}],\"vars\":[]}");
  CHECK_THROWS_AS(read_joint(bad), std::invalid_argument);
}
