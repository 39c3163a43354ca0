#include <cmath>

#include "doctest.h"
#include "infotile/verify.hpp"
#include "infotile/witness.hpp"
#include "oracles.hpp"

using namespace infotile;

namespace {

bool unit_ok(const GadgetRef& g, const std::vector<VarId>& actuals, const FactoredJoint& base) {
  UnitWitness u = unit_witness(g, actuals, base);
  auto rep = verify(u.joint, u.cs, kUnitTolerance);
  if (!rep.ok()) MESSAGE(g.name << " max violation " << rep.max_violation);
  return rep.ok();
}

GadgetRef sat(const std::string& name, long k, std::vector<int> S, std::vector<int> Sbar) {
  GadgetRef g{name, k};
  g.e = 1;
  g.S = std::move(S);
  g.Sbar = std::move(Sbar);
  return g;
}

std::vector<int> range(int a, int b) {
  std::vector<int> r;
  for (int i = a; i <= b; ++i) r.push_back(i);
  return r;
}

std::string refusal(const GadgetRef& g, const oracle::GroupBase& b) {
  try {
    unit_witness(g, b.actuals(), b.joint);
  } catch (const WitnessRefusal& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("TRIPLE: sum mod 3") {
  FactoredJoint j;
  uint32_t a = j.add_uniform_seed("a", 3), b = j.add_uniform_seed("b", 3);
  j.add_var("Y1", {a}, {0, 1, 2});
  j.add_var("Y2", {b}, {0, 1, 2});
  std::vector<uint32_t> t(9), bad(9);
  for (uint32_t x = 0; x < 3; ++x)
    for (uint32_t y = 0; y < 3; ++y) {
      t[x * 3 + y] = (x + y) % 3;
      bad[x * 3 + y] = x;
    }
  FactoredJoint ok = j;
  ok.add_var("Y3", {a, b}, t);
  CHECK(unit_ok({"TRIPLE"}, {"Y1", "Y2", "Y3"}, ok));
  CHECK(unit_ok({"UNIF"}, {"Y1"}, ok));
  CHECK(unit_ok({"UNIF_K", 3}, {"Y3"}, ok));
  // corrupted: Y3 copies Y1
  j.add_var("Y3", {a, b}, bad);
  auto cs = instantiate_gadget({"TRIPLE"}, {"Y1", "Y2", "Y3"});
  auto rep = verify(j, cs, kUnitTolerance);
  CHECK(!rep.ok());
  CHECK(rep.max_violation == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("FLIP: G1 = g when F = 0, G2 = (1-w) F") {
  FactoredJoint j;
  uint32_t f = j.add_uniform_seed("f", 2), g = j.add_uniform_seed("g", 2), w = j.add_uniform_seed("w", 2);
  j.add_var("F", {f}, {0, 1});
  j.add_var("G1", {f, g}, {0, 1, 0, 0});
  j.add_var("G2", {f, w}, {0, 0, 1, 0});
  CHECK(unit_ok({"FLIP"}, {"F", "G1", "G2"}, j));
  // (F,G1,G2) on 3 atoms is refused
  FactoredJoint k;
  uint32_t s = k.add_uniform_seed("s", 2);
  k.add_var("F", {s}, {0, 1});
  k.add_var("G1", {s}, {0, 0});
  k.add_var("G2", {s}, {0, 0});
  CHECK_THROWS_AS(unit_witness({"FLIP"}, {"F", "G1", "G2"}, k), WitnessRefusal);
}

TEST_CASE("SW with independent switches") {
  const long k = 4;
  FactoredJoint j;
  uint32_t f = j.add_uniform_seed("f", 2);
  j.add_var("F", {f}, {0, 1});
  std::vector<VarId> args;
  std::vector<VarId> V, Vb;
  for (long i = 1; i <= k; ++i) {
    std::string n = std::to_string(i);
    uint32_t w = j.add_uniform_seed("w" + n, 2);
    j.add_var("W" + n, {w}, {0, 1});
    // [w][f]
    j.add_var("V" + n, {w, f}, {0, 1, 0, 0});
    j.add_var("Vb" + n, {w, f}, {0, 0, 0, 1});
    args.emplace_back("W" + n);
    V.emplace_back("V" + n);
    Vb.emplace_back("Vb" + n);
  }
  args.insert(args.end(), V.begin(), V.end());
  args.insert(args.end(), Vb.begin(), Vb.end());
  args.emplace_back("F");
  CHECK(unit_ok({"SW", k}, args, j));
}

TEST_CASE("SAT != 1/2: groups of one sign") {
  const long k = 4;
  auto g = sat("SAT_NE_1_2", k, {static_cast<int>(k)}, {});
  CHECK(unit_ok(g, oracle::group_base({{1, 2}, {-1, -2}}, k).actuals(), oracle::group_base({{1, 2}, {-1, -2}}, k).joint));
  auto pos = oracle::group_base({{1, 2}, {3, 1}}, k);
  CHECK(unit_ok(g, pos.actuals(), pos.joint));
  auto neg = oracle::group_base({{-3, -2}, {-1, -1}}, k);
  CHECK(unit_ok(g, neg.actuals(), neg.joint));

  auto mixed = oracle::group_base({{1, -2}, {1, 2}}, k);
  std::string msg = refusal(g, mixed);
  CHECK(msg == "SAT_NE_1_2@0: in context (E=0,V4=0) P(F=1|context) = 1/3, and 1/3 * 2 = 2/3 is not an integer, "
               "so F is no function of the context and a uniform 2-valued U independent of it");
}

TEST_CASE("SAT <= 1/2 with at most one low color per group") {
  const long k = 9;
  auto g = sat("SAT_LE_1_2", k, {}, range(3, 9));
  auto b = oracle::group_base({{3, 4}, {1, 3}, {2, 7}, {-1, -5}}, k);
  CHECK(unit_ok(g, b.actuals(), b.joint));
  auto bad = oracle::group_base({{1, 2}, {3, 4}}, k);
  std::string msg = refusal(g, bad);
  CHECK(msg.find("P(F=1|context) = 1/2, and 1/2 * 3 = 3/2 is not an integer") != std::string::npos);
  CHECK(msg.rfind("SAT_LE_1_2@0: in context (E=0,", 0) == 0);
}

TEST_CASE("SAT <= 3/4 with up to three low colors per group") {
  const long k = 9;
  auto g = sat("SAT_LE_3_4", k, {}, range(5, 9));
  auto b = oracle::group_base({{5, 6, 7, 8}, {1, 5, 6, 7}, {1, 2, 5, 6}, {1, 2, 3, 5}}, k);
  CHECK(unit_ok(g, b.actuals(), b.joint));
  auto bad = oracle::group_base({{1, 2, 3, 4}}, k);
  CHECK(refusal(g, bad).find("1/2 * 105 = 105/2 is not an integer") != std::string::npos);
}

TEST_CASE("gadgets without a construction are refused") {
  FactoredJoint j;
  uint32_t s = j.add_uniform_seed("s", 2);
  j.add_var("A", {s}, {0, 1});
  j.add_var("B", {s}, {0, 1});
  CHECK_THROWS_AS(unit_witness({"GESQRT"}, {"A", "B"}, j), WitnessRefusal);
}

TEST_CASE("colored tori from periodic tilings") {
  for (auto [ts, k] : {std::pair{TileSet{1, {{1, 1, 1, 1}}}, 9L}, std::pair{TileSet{4, {{1, 3, 2, 4}, {2, 4, 1, 3}}}, 17L}}) {
    auto til = find_periodic_tiling(ts, 4);
    REQUIRE(til);
    auto tori = tiling_to_colored_tori(ts, *til, k);
    CHECK(!check_colored_tori(ts, tori.first, tori.second, k));
    CHECK(tori.first.sign == 1);
    CHECK(tori.second.sign == -1);
    CHECK(tori.first.side % 2 == 0);
    for (int h = 0; h < tori.first.side; ++h)
      for (int v = 0; v < tori.first.side; ++v) {
        int c = tori.first.at(h, v);
        CHECK(c > 0);
        CHECK(color_group(c) == vertex_group(h, v));
        CHECK(tori.second.at(h, v) == -c);
      }
    // a flipped vertex color breaks an invariant
    auto broken = tori;
    broken.first.color[0] = -broken.first.color[0];
    CHECK(check_colored_tori(ts, broken.first, broken.second, k));
  }
}

TEST_CASE("slack laws hit the requested entropy") {
  for (double h : {0.0, 0.3, 1.0, 1.5, 2.0, 3.7, 10.25}) {
    auto p = slack_distribution(h);
    CHECK(p.size() == static_cast<size_t>(std::max(1.0, std::ceil(std::exp2(h) - 1e-12))));
    Rational tot = 0;
    double H = 0;
    for (auto& q : p) {
      tot += q;
      double x = q.get_d();
      if (x > 0) H -= x * std::log2(x);
    }
    CHECK(tot == 1);
    CHECK(std::abs(H - h) < 1e-9);
  }
  FactoredJoint j;
  add_slack_vars(j, {"S1", "S2"}, {0.0, 1.25}, 1e-9);
  CHECK(subset_entropy(j, VarSet{"S1"}) == 0);
  CHECK(std::abs(subset_entropy(j, VarSet{"S2"}) - 1.25) < 1e-9);
  CHECK_THROWS_AS(add_slack_vars(j, {"S3"}, {-0.5}, 1e-9), WitnessRefusal);
}
