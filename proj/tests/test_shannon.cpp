#include <random>

#include "doctest.h"
#include "infotile/shannon.hpp"

using namespace infotile;

namespace {

SparseAffineSystem sys(std::vector<VarId> vars, std::vector<std::pair<InfoExpr, Rational>> eqs) {
  SparseAffineSystem s;
  s.vars = std::move(vars);
  for (auto& [e, r] : eqs) s.rows.push_back({e, Rel::EQ, r, ""});
  return s;
}

InfoExpr H(std::initializer_list<const char*> names) {
  std::vector<VarId> v;
  for (auto n : names) v.emplace_back(n);
  return InfoExpr::entropy(VarSet(v));
}

}  // namespace

TEST_CASE("elemental inequality counts") {
  CHECK(elemental_count(1) == 1);
  CHECK(elemental_count(2) == 3);
  CHECK(elemental_count(3) == 9);
  CHECK(elemental_count(4) == 28);
  for (int n = 1; n <= 6; ++n) CHECK(elemental_inequalities(n).size() == elemental_count(n));
  auto e = elemental_inequalities(2);
  CHECK(e[0].expr == H({"X1", "X2"}) - H({"X2"}));
  CHECK(e[2].kind == Elemental::COND_MI);
  CHECK(e[2].expr == H({"X1"}) + H({"X2"}) - H({"X1", "X2"}));
}

TEST_CASE("refutes a system violating subadditivity") {
  auto s = sys({"X1", "X2"}, {{H({"X1"}), Rational(1, 2)}, {H({"X2"}), 1}, {H({"X1", "X2"}), 2}});
  LPOutcome out = refute(s);
  REQUIRE(out.status == LPOutcome::REFUTED);
  CHECK(!replay(s, out));
  for (auto& [id, y] : out.multipliers) CHECK(y > 0);
  // the json form replays as well
  LPOutcome back = outcome_from_json(json::parse(outcome_json(out).dump()));
  CHECK(!replay(s, back));
  // a tampered certificate does not
  LPOutcome bad = out;
  bad.multipliers[0].second *= 2;
  CHECK(replay(s, bad));
  LPOutcome unknown_row = out;
  unknown_row.multipliers.push_back({"elem:99", 1});
  CHECK(replay(s, unknown_row));
}

TEST_CASE("UNKNOWN on satisfiable systems") {
  auto s = sys({"X1"}, {{H({"X1"}), 1}});
  LPOutcome out = refute(s);
  CHECK(out.status == LPOutcome::UNKNOWN);
  CHECK(out.multipliers.empty());
  CHECK(replay(s, out));
  CHECK(status_str(out.status) == "UNKNOWN");
}

TEST_CASE("monotonicity and negativity refutations") {
  CHECK(refute(sys({"A", "B"}, {{H({"A"}), 1}, {H({"A", "B"}), 0}})).status == LPOutcome::REFUTED);
  CHECK(refute(sys({"A"}, {{H({"A"}), -1}})).status == LPOutcome::REFUTED);
  // I(A;B|C) = -1 is not Shannon
  InfoExpr i = H({"A", "C"}) + H({"B", "C"}) - H({"A", "B", "C"}) - H({"C"});
  auto s = sys({"A", "B", "C"}, {{i, -1}});
  auto out = refute(s);
  REQUIRE(out.status == LPOutcome::REFUTED);
  CHECK(!replay(s, out));
}

TEST_CASE("restriction drops rows over other variables") {
  auto s = sys({"X1", "X2", "X3"}, {{H({"X1"}), Rational(1, 2)}, {H({"X2"}), 1}, {H({"X1", "X2"}), 2}, {H({"X3"}), 5}});
  LPOutcome a = refute(s, std::vector<VarId>{"X1", "X2"});
  CHECK(a.status == LPOutcome::REFUTED);
  CHECK(a.rows_dropped == 1);
  CHECK(!replay(s, a));
  LPOutcome b = refute(s, std::vector<VarId>{"X3"});
  CHECK(b.status == LPOutcome::UNKNOWN);
  CHECK(b.rows_dropped == 3);
}

TEST_CASE("variable cap") {
  SparseAffineSystem s;
  for (int i = 1; i <= 11; ++i) s.vars.emplace_back("X" + std::to_string(i));
  s.rows.push_back({H({"X1"}), Rel::EQ, 1, ""});
  CHECK_THROWS_AS(refute(s), std::length_error);
  CHECK(refute(s, std::vector<VarId>{"X1", "X2"}).status == LPOutcome::UNKNOWN);
}

// Each variable is a tuple of independent fair bits, so H(S) is the number of
// bits S sees. Any system built from exact values is entropic, hence never refuted.
TEST_CASE("random entropic systems are never refuted") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<VarId> vars;
    std::vector<unsigned> bits(n);
    for (int i = 0; i < n; ++i) {
      vars.emplace_back("X" + std::to_string(i + 1));
      bits[i] = static_cast<unsigned>(rng() % 16);
    }
    auto value = [&](unsigned mask) {
      unsigned u = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) u |= bits[i];
      return __builtin_popcount(u);
    };
    SparseAffineSystem s;
    s.vars = vars;
    int m = 1 + static_cast<int>(rng() % 5);
    for (int r = 0; r < m; ++r) {
      InfoExpr e;
      Rational rhs = 0;
      for (int t = 0; t < 3; ++t) {
        unsigned mask = 1 + static_cast<unsigned>(rng() % ((1u << n) - 1));
        long c = static_cast<long>(rng() % 5) - 2;
        std::vector<VarId> v;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) v.push_back(vars[i]);
        e += Rational(c) * InfoExpr::entropy(VarSet(v));
        rhs += c * value(mask);
      }
      Rel rel = static_cast<Rel>(rng() % 3);
      if (rel == Rel::GE) rhs -= static_cast<long>(rng() % 2);
      if (rel == Rel::LE) rhs += static_cast<long>(rng() % 2);
      s.rows.push_back({e, rel, rhs, ""});
    }
    CHECK(refute(s).status == LPOutcome::UNKNOWN);
    CHECK(refute(s, std::vector<VarId>(vars.begin(), vars.begin() + 2)).status == LPOutcome::UNKNOWN);
  }
}
