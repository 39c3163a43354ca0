#include "infotile/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "infotile/entropy.hpp"
#include "infotile/reduction.hpp"
#include "infotile/verify.hpp"

namespace infotile {

int ColoredTorus::at(int h, int v) const {
  h = ((h % side) + side) % side;
  v = ((v % side) + side) % side;
  return color[static_cast<size_t>(h) * side + v];
}

int vertex_group(int h, int v) {
  bool he = h % 2 == 0, ve = v % 2 == 0;
  if (he && ve) return 4;
  if (he) return 1;
  if (ve) return 3;
  return 2;
}

int color_group(int c) { return (std::abs(c) - 1) % 4 + 1; }

namespace {

int wrap(int x, int m) { return ((x % m) + m) % m; }

// Tile held by the even face whose west corner is (i, j).
int face_tile(const PeriodicTiling& til, int l, int i, int j) {
  int u = wrap((i + j) / 2, l);
  int v = wrap((j - i) / 2, l);
  return til.at(u, v);
}

}  // namespace

std::pair<ColoredTorus, ColoredTorus> tiling_to_colored_tori(const TileSet& ts, const PeriodicTiling& til, long k) {
  validate_tileset(ts);
  if (!validate_tiling(ts, til)) throw std::invalid_argument("invalid tiling: adjacent edges do not match");
  long m = (k - 1) / 4;
  if (ts.num_colors > m) throw std::invalid_argument("tile colors exceed the k budget");
  int l = std::lcm(til.a, til.b);
  if (l < 2) l = 2;
  int side = 2 * l;
  ColoredTorus pos, neg;
  pos.side = neg.side = side;
  pos.sign = 1;
  neg.sign = -1;
  pos.color.resize(static_cast<size_t>(side) * side);
  for (int h = 0; h < side; ++h)
    for (int v = 0; v < side; ++v) {
      // even corner: west vertex of face (h, v); odd: north vertex of face (h, v-1)
      int c;
      if ((h + v) % 2 == 0) c = ts.tiles[face_tile(til, l, h, v)][W];
      else c = ts.tiles[face_tile(til, l, h, v - 1)][N];
      pos.color[static_cast<size_t>(h) * side + v] = 4 * c - 4 + vertex_group(h, v);
    }
  neg.color = pos.color;
  for (auto& c : neg.color) c = -c;
  return {pos, neg};
}

std::optional<std::string> check_colored_tori(const TileSet& ts, const ColoredTorus& pos, const ColoredTorus& neg,
                                              long k) {
  std::set<std::set<int>> c11, c22;
  for (auto& t : ts.tiles) {
    c11.insert({4 * t[0] - 3, 4 * t[1] - 2, 4 * t[2] - 1, 4 * t[3]});
    c22.insert({4 * t[0] - 1, 4 * t[1], 4 * t[2] - 3, 4 * t[3] - 2});
  }
  std::map<int, long> count;
  for (const ColoredTorus* t : {&pos, &neg}) {
    int n = t->side;
    if (n < 4 || n % 2) return "torus side must be even and >= 4";
    if (t->color.size() != static_cast<size_t>(n) * n) return "torus color grid has the wrong size";
    for (int h = 0; h < n; ++h)
      for (int v = 0; v < n; ++v) {
        int c = t->at(h, v);
        if (c == 0 || std::abs(c) > k - 1) return "vertex color out of range";
        if ((c > 0 ? 1 : -1) != t->sign) return "vertex sign differs from the torus sign";
        ++count[c];
        // vertical edges pair groups {1,4} or {2,3}; horizontal {1,2} or {3,4}
        std::set<int> ve = {color_group(c), color_group(t->at(h, v + 1))};
        std::set<int> he = {color_group(c), color_group(t->at(h + 1, v))};
        if (ve != std::set<int>{1, 4} && ve != std::set<int>{2, 3}) return "vertical edge joins the wrong groups";
        if (he != std::set<int>{1, 2} && he != std::set<int>{3, 4}) return "horizontal edge joins the wrong groups";
        if ((h + v) % 2 == 0) {
          std::set<int> face = {std::abs(c), std::abs(t->at(h + 1, v + 1)), std::abs(t->at(h, v + 1)),
                                std::abs(t->at(h + 1, v))};
          const auto& allowed = h % 2 == 0 ? c11 : c22;
          if (!allowed.count(face)) return "even face colors match no tile";
        }
      }
  }
  for (long j = 1; j <= k - 1; ++j)
    if (count[j] != count[-j]) return "colors " + std::to_string(j) + " and -" + std::to_string(j) + " are unbalanced";
  return std::nullopt;
}

namespace {

std::string where(const GadgetInstance& g) { return g.display + "@" + g.path; }

std::vector<uint32_t> iota_table(uint32_t n) {
  std::vector<uint32_t> t(n);
  std::iota(t.begin(), t.end(), 0u);
  return t;
}

// Ranks of the support of x; refuses unless x is exactly uniform.
std::vector<uint32_t> uniform_ranks(const FactoredJoint& j, VarId x, const GadgetInstance& g, uint32_t* m) {
  ExactPmf pm = exact_marginal(j, {x});
  const Rational& p0 = pm.begin()->second;
  for (auto& [key, p] : pm)
    if (p != p0)
      throw WitnessRefusal(where(g) + ": " + x.name() + " is not uniform on its support (masses " + to_string(p0) +
                           " and " + to_string(p) + ")");
  std::vector<uint32_t> rank(j.var(x).range, UINT32_MAX);
  uint32_t r = 0;
  for (auto& [key, p] : pm) rank[key[0]] = r++;
  *m = r;
  return rank;
}

void on_unif(FactoredJoint& j, const GadgetInstance& g) {
  VarId x = g.args[0], u1 = g.local("U1"), u2 = g.local("U2");
  uint32_t m;
  auto rank = uniform_ranks(j, x, g, &m);
  uint32_t s = j.add_uniform_seed(u1.name(), m);
  j.add_var(u1, {s}, iota_table(m));
  AtomWalker w(j, {x});
  std::vector<uint32_t> seeds = w.seeds();
  seeds.push_back(s);
  std::vector<uint32_t> table(w.size() * m);
  for (; w.valid(); w.next()) {
    uint32_t r = rank[w.value(0)];
    for (uint32_t u = 0; u < m; ++u) table[w.index() * m + u] = (r + u) % m;
  }
  j.add_var(u2, std::move(seeds), std::move(table));
}

void on_unif_k(FactoredJoint& j, const GadgetInstance& g) {
  uint32_t m;
  uniform_ranks(j, g.args[0], g, &m);
  if (m != static_cast<uint32_t>(g.k))
    throw WitnessRefusal(where(g) + ": " + g.args[0].name() + " is uniform on " + std::to_string(m) + " values, not " +
                         std::to_string(g.k));
}

void on_unif_eq(FactoredJoint& j, const GadgetInstance& g) {
  VarId y = g.args[0], z = g.args[1];
  uint32_t my, mz;
  auto ry = uniform_ranks(j, y, g, &my);
  auto rz = uniform_ranks(j, z, g, &mz);
  if (my != mz) throw WitnessRefusal(where(g) + ": cardinalities " + std::to_string(my) + " and " + std::to_string(mz));
  VarId u1 = g.local("U1");
  uint32_t s = j.add_uniform_seed(u1.name(), my);
  j.add_var(u1, {s}, iota_table(my));
  for (auto [x, rank, name] : {std::tuple{y, &ry, "U2"}, std::tuple{z, &rz, "U3"}}) {
    AtomWalker w(j, {x});
    std::vector<uint32_t> seeds = w.seeds();
    seeds.push_back(s);
    std::vector<uint32_t> table(w.size() * my);
    for (; w.valid(); w.next())
      for (uint32_t u = 0; u < my; ++u) table[w.index() * my + u] = ((*rank)[w.value(0)] + u) % my;
    j.add_var(g.local(name), std::move(seeds), std::move(table));
  }
}

void on_cycs(FactoredJoint& j, const GadgetInstance& g) {
  VarId x1 = g.args[0], x2 = g.args[1], u = g.local("U");
  ExactPmf pm = exact_marginal(j, {x1, x2});
  std::vector<std::array<uint32_t, 2>> edges;
  std::map<std::array<uint32_t, 2>, size_t> eid;
  std::map<uint32_t, std::vector<size_t>> left, right;
  const Rational& p0 = pm.begin()->second;
  for (auto& [key, p] : pm) {
    if (p != p0) throw WitnessRefusal(where(g) + ": (X1,X2) is not uniform on its support");
    eid[{key[0], key[1]}] = edges.size();
    left[key[0]].push_back(edges.size());
    right[key[1]].push_back(edges.size());
    edges.push_back({key[0], key[1]});
  }
  for (auto* side : {&left, &right})
    for (auto& [v, es] : *side)
      if (es.size() != 2)
        throw WitnessRefusal(where(g) + ": a vertex of the bipartite graph has degree " + std::to_string(es.size()));
  std::vector<int> color(edges.size(), -1);
  for (size_t start = 0; start < edges.size(); ++start) {
    if (color[start] >= 0) continue;
    size_t e = start;
    int c = 0;
    bool via_right = true;
    while (color[e] < 0) {
      color[e] = c;
      auto& nb = via_right ? right[edges[e][1]] : left[edges[e][0]];
      e = nb[0] == e ? nb[1] : nb[0];
      c ^= 1;
      via_right = !via_right;
    }
    if (color[e] != c) throw WitnessRefusal(where(g) + ": odd cycle in the support graph");
  }
  AtomWalker w(j, {x1, x2});
  std::vector<uint32_t> table(w.size());
  for (; w.valid(); w.next()) table[w.index()] = static_cast<uint32_t>(color[eid.at({w.value(0), w.value(1)})]);
  j.add_var(u, w.seeds(), std::move(table));
}

void on_flip(FactoredJoint& j, const GadgetInstance& g) {
  VarId f = g.args[0], g1 = g.args[1], g2 = g.args[2];
  ExactPmf pm = exact_marginal(j, {f, g1, g2});
  if (pm.size() != 4) throw WitnessRefusal(where(g) + ": (F,G1,G2) has " + std::to_string(pm.size()) + " atoms, not 4");
  std::map<std::vector<uint32_t>, uint32_t> rank;
  for (auto& [key, p] : pm) {
    if (p != Rational(1, 4)) throw WitnessRefusal(where(g) + ": (F,G1,G2) is not uniform on 4 atoms");
    uint32_t r = static_cast<uint32_t>(rank.size());
    rank[key] = r;
  }
  // Z_i: position inside the 3-atom class of G_i, or a fresh uniform value
  // when the class is a single atom.
  std::array<std::map<std::vector<uint32_t>, uint32_t>, 2> within;
  for (int i = 0; i < 2; ++i) {
    std::map<uint32_t, std::vector<std::vector<uint32_t>>> cls;
    for (auto& [key, r] : rank) cls[key[1 + i]].push_back(key);
    for (auto& [val, members] : cls) {
      if (members.size() != 3 && members.size() != 1)
        throw WitnessRefusal(where(g) + ": G" + std::to_string(i + 1) + " class of size " +
                             std::to_string(members.size()));
      for (size_t q = 0; q < members.size(); ++q)
        within[i][members[q]] = members.size() == 3 ? static_cast<uint32_t>(q) : UINT32_MAX;
    }
  }
  AtomWalker w(j, {f, g1, g2});
  std::vector<uint32_t> ut(w.size()), zt[2] = {std::vector<uint32_t>(w.size() * 3), std::vector<uint32_t>(w.size() * 3)};
  std::vector<uint32_t> key(3);
  for (; w.valid(); w.next()) {
    for (int q = 0; q < 3; ++q) key[q] = w.value(q);
    ut[w.index()] = rank.at(key);
    for (int i = 0; i < 2; ++i) {
      uint32_t z = within[i].at(key);
      for (uint32_t r = 0; r < 3; ++r) zt[i][w.index() * 3 + r] = z == UINT32_MAX ? r : z;
    }
  }
  std::vector<uint32_t> seeds = w.seeds();
  j.add_var(g.local("U"), seeds, std::move(ut));
  for (int i = 0; i < 2; ++i) {
    VarId z = g.local("Z" + std::to_string(i + 1));
    uint32_t s = j.add_uniform_seed(z.name(), 3);
    std::vector<uint32_t> zs = seeds;
    zs.push_back(s);
    j.add_var(z, std::move(zs), std::move(zt[i]));
  }
}

void on_sw(FactoredJoint& j, const GadgetInstance& g) {
  VarId f = g.args[3 * g.k], gv = g.local("G");
  uint32_t s = j.add_uniform_seed(gv.name(), 2);
  AtomWalker w(j, {f});
  std::vector<uint32_t> seeds = w.seeds();
  seeds.push_back(s);
  std::vector<uint32_t> table(w.size() * 2);
  for (; w.valid(); w.next()) {
    uint32_t fv = w.value(0);
    if (fv > 1) throw WitnessRefusal(where(g) + ": F is not binary");
    for (uint32_t b = 0; b < 2; ++b) table[w.index() * 2 + b] = fv == 0 ? b : 0;
  }
  j.add_var(gv, std::move(seeds), std::move(table));
}

std::string values_str(const std::vector<VarId>& vars, const std::vector<uint32_t>& key) {
  std::string s = "(";
  for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i].name() + "=" + std::to_string(key[i]);
  return s + ")";
}

// Lay each context's atoms on [0,1), F = 1 first; U is the 1/a-cell of a
// point spread uniformly over the atom's interval by a fresh seed of size R.
void on_sat(FactoredJoint& j, const GadgetInstance& g) {
  const size_t e = g.e_arity;
  const long k = g.k, a = g.a;
  auto arg = [&](size_t i) { return g.args[i]; };
  std::vector<VarId> ctxv(g.args.begin(), g.args.begin() + e);
  for (int i : g.S) ctxv.push_back(arg(e + k + i - 1));
  for (int i : g.Sbar) ctxv.push_back(arg(e + 2 * k + i - 1));
  VarSet ctx(ctxv);
  std::vector<VarId> list(ctx.begin(), ctx.end());
  VarId f = arg(e + 3 * k);
  list.push_back(f);
  const size_t nc = list.size() - 1;
  const std::vector<VarId> ctxv_sorted(list.begin(), list.end() - 1);

  struct Atom {
    uint64_t idx;
    Rational p;
    bool one;
  };
  std::map<std::vector<uint32_t>, std::vector<Atom>> by_ctx;
  uint64_t n_atoms;
  {
    AtomWalker w(j, list);
    n_atoms = w.size();
    std::vector<uint32_t> key(nc);
    for (; w.valid(); w.next()) {
      for (size_t q = 0; q < nc; ++q) key[q] = w.value(q);
      uint32_t fv = w.value(nc);
      if (fv > 1) throw WitnessRefusal(where(g) + ": F is not binary");
      by_ctx[key].push_back({w.index(), w.exact_prob(), fv == 1});
    }
  }
  std::vector<Rational> start(n_atoms), len(n_atoms);
  BigInt R = 1;
  for (auto& [key, atoms] : by_ctx) {
    Rational P = 0, P1 = 0;
    for (auto& at : atoms) {
      P += at.p;
      if (at.one) P1 += at.p;
    }
    Rational theta = P1 / P;
    Rational cells = theta * a;
    if (cells.get_den() != 1)
      throw WitnessRefusal(where(g) + ": in context " + values_str(ctxv_sorted, key) + " P(F=1|context) = " +
                           to_string(theta) + ", and " + to_string(theta) + " * " + std::to_string(a) +
                           " = " + to_string(cells) + " is not an integer, so F is no function of the context and a "
                           "uniform " + std::to_string(a) + "-valued U independent of it");
    std::stable_partition(atoms.begin(), atoms.end(), [](const Atom& x) { return x.one; });
    Rational s = 0;
    for (auto& at : atoms) {
      Rational l = at.p / P;
      start[at.idx] = s;
      len[at.idx] = l;
      if (l > 0) {
        // cell boundaries m/a strictly inside (s, s + l)
        BigInt m;
        mpz_fdiv_q(m.get_mpz_t(), BigInt(s * a * s.get_den()).get_mpz_t(), s.get_den().get_mpz_t());
        Rational end = s + l;
        for (m += 1; frac(m, a) < end; m += 1) {
          Rational t = (frac(m, a) - s) / l;
          mpz_lcm(R.get_mpz_t(), R.get_mpz_t(), t.get_den().get_mpz_t());
        }
      }
      s += l;
    }
  }
  if (R > 1 << 20) throw WitnessRefusal(where(g) + ": alignment seed would need " + R.get_str() + " values");
  uint32_t rs = static_cast<uint32_t>(R.get_ui());
  VarId u = g.local("U");
  uint32_t seed = j.add_uniform_seed(u.name(), rs);
  std::vector<uint32_t> seeds = AtomWalker(j, list).seeds();
  seeds.push_back(seed);
  std::vector<uint32_t> table(n_atoms * rs);
  for (uint64_t i = 0; i < n_atoms; ++i)
    for (uint32_t r = 0; r < rs; ++r) {
      Rational x = (start[i] + len[i] * frac(r, rs)) * a;
      BigInt c;
      mpz_fdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
      long cv = std::min<long>(c.get_si(), a - 1);
      table[i * rs + r] = static_cast<uint32_t>(cv);
    }
  j.add_var(u, std::move(seeds), std::move(table));
}

void on_ttori(FactoredJoint& j, const GadgetInstance& g, const std::pair<ColoredTorus, ColoredTorus>* tori) {
  if (!tori) throw std::invalid_argument("TTORI witness needs the colored tori");
  const long k = g.k;
  const int side = tori->first.side, l = side / 2;
  const uint32_t n = static_cast<uint32_t>(2 * side * side);
  uint32_t core = j.add_uniform_seed("core", n);
  uint32_t fs = j.add_uniform_seed("F", 2);
  auto decode = [&](uint32_t idx, int& s, int& h, int& v) {
    s = static_cast<int>(idx / (side * side));
    h = static_cast<int>(idx / side % side);
    v = static_cast<int>(idx % side);
  };
  auto core_var = [&](const std::string& name, auto fn) {
    std::vector<uint32_t> t(n);
    for (uint32_t i = 0; i < n; ++i) {
      int s, h, v;
      decode(i, s, h, v);
      t[i] = static_cast<uint32_t>(fn(s, h, v));
    }
    j.add_var(g.local(name), {core}, std::move(t));
  };
  core_var("X1", [&](int s, int h, int) { return s * l + h / 2; });
  core_var("X2", [&](int s, int h, int) { return s * l + ((h + 1) / 2) % l; });
  core_var("Y1", [&](int, int, int v) { return v / 2; });
  core_var("Y2", [&](int, int, int v) { return ((v + 1) / 2) % l; });
  auto w_of = [&](int s, int h, int v, long i) {
    int c = (s == 0 ? tori->first : tori->second).at(h, v);
    return c > 0 ? (i == c ? 1 : 0) : (i == -c ? 0 : 1);
  };
  for (long i = 1; i <= k; ++i) core_var("W" + std::to_string(i), [&](int s, int h, int v) { return w_of(s, h, v, i); });
  for (int bar = 0; bar < 2; ++bar)
    for (long i = 1; i <= k; ++i) {
      std::vector<uint32_t> t(2 * n);
      for (uint32_t c = 0; c < n; ++c) {
        int s, h, v;
        decode(c, s, h, v);
        int w = w_of(s, h, v, i);
        t[2 * c] = 0;
        t[2 * c + 1] = static_cast<uint32_t>(bar ? w : 1 - w);  // V = (1-W)F, Vb = W F
      }
      j.add_var(g.local((bar ? "Vb" : "V") + std::to_string(i)), {core, fs}, std::move(t));
    }
  j.add_var(g.local("F"), {fs}, {0, 1});
}

}  // namespace

void extend_witness(FactoredJoint& j, const std::vector<GadgetInstance>& log,
                    const std::pair<ColoredTorus, ColoredTorus>* tori) {
  for (auto& g : log) {
    const std::string& key = g.key;
    if (key == "UNIF") on_unif(j, g);
    else if (key == "UNIF_K") on_unif_k(j, g);
    else if (key == "CYCS") on_cycs(j, g);
    else if (key == "FLIP") on_flip(j, g);
    else if (key == "SW") on_sw(j, g);
    else if (key.rfind("SAT_", 0) == 0) on_sat(j, g);
    else if (key == "TTORI") on_ttori(j, g, tori);
    else if (key == "UNIF_EQ") on_unif_eq(j, g);
    else if (!g.locals.empty()) throw WitnessRefusal("no witness construction for " + where(g));
  }
}

FactoredJoint build_witness(const TileSet& ts, const PeriodicTiling& til) {
  validate_tileset(ts);
  if (!validate_tiling(ts, til)) throw std::invalid_argument("invalid tiling: adjacent edges do not match");
  Compiled c = compile_ttori_logged(ts);
  auto tori = tiling_to_colored_tori(ts, til, c.k);
  FactoredJoint j;
  extend_witness(j, c.instances, &tori);
  for (auto v : c.cs.all_vars())
    if (!j.has_var(v)) throw std::logic_error("witness misses variable '" + v.name() + "'");
  return j;
}

UnitWitness unit_witness(const GadgetRef& g, const std::vector<VarId>& actuals, const FactoredJoint& base) {
  UnitWitness u;
  u.cs = instantiate_gadget(g, actuals, &u.log);
  for (auto v : u.cs.free_vars)
    if (!base.has_var(v)) throw std::invalid_argument("base joint lacks '" + v.name() + "'");
  u.joint = base;
  extend_witness(u.joint, u.log);
  return u;
}

std::vector<Rational> slack_distribution(double h) {
  if (h <= 0) return {Rational(1)};
  double n_real = std::ceil(std::exp2(h) - 1e-12);
  if (n_real > (1 << 24)) throw std::invalid_argument("slack too large for an explicit law");
  uint32_t n = static_cast<uint32_t>(std::max(2.0, n_real));
  if (std::fabs(std::log2(static_cast<double>(n)) - h) < 1e-13)
    return std::vector<Rational>(n, frac(1, n));
  auto ent = [&](double q) {
    double r = (1 - q) / (n - 1);
    double v = 0;
    if (q > 0) v -= q * std::log2(q);
    if (r > 0) v -= (n - 1) * r * std::log2(r);
    return v;
  };
  double lo = 1.0 / n, hi = 1.0;  // ent decreasing on [1/n, 1]
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    if (ent(mid) > h) lo = mid;
    else hi = mid;
  }
  const double grid = std::ldexp(1.0, 52);
  BigInt qn(std::llround(lo * grid) > 0 ? std::to_string(std::llround(lo * grid)) : "1");
  Rational q(qn, BigInt(1) << 52);
  q.canonicalize();
  std::vector<Rational> out{q};
  Rational rest = (1 - q) / (n - 1);
  for (uint32_t i = 1; i < n; ++i) out.push_back(rest);
  return out;
}

void add_slack_vars(FactoredJoint& j, const std::vector<VarId>& slacks, const std::vector<double>& values,
                    double tol) {
  if (slacks.size() != values.size()) throw std::invalid_argument("one value per slack variable");
  for (size_t i = 0; i < slacks.size(); ++i) {
    double v = values[i];
    if (v < -tol) throw WitnessRefusal("row " + std::to_string(i) + " is violated by " + std::to_string(-v));
    if (v <= 1e-12) {
      j.add_var(slacks[i], {}, {0});
      continue;
    }
    auto probs = slack_distribution(v);
    uint32_t n = static_cast<uint32_t>(probs.size());
    uint32_t s = j.add_seed(slacks[i].name(), std::move(probs));
    j.add_var(slacks[i], {s}, iota_table(n));
  }
}

std::vector<VarId> realize_slacks(FactoredJoint& j, const SparseAffineSystem& sas, double tol, int jobs) {
  std::vector<VarId> slacks;
  std::vector<AffineConstraint> stripped;
  std::vector<Rational> rhs;
  for (auto& r : sas.rows) {
    std::optional<VarId> v;
    for (auto& [s, c] : r.lhs.terms())
      if (s.size() == 1 && c == -1 && !j.has_var(*s.begin())) {
        if (v) throw std::invalid_argument("row '" + r.tag + "' has two unassigned slack terms");
        v = *s.begin();
      }
    if (!v) continue;
    AffineConstraint a = r;
    a.lhs.add(VarSet{*v}, 1);
    slacks.push_back(*v);
    stripped.push_back(std::move(a));
    rhs.push_back(r.rhs);
  }
  auto vals = row_values(j, stripped, jobs);
  for (size_t i = 0; i < vals.size(); ++i) vals[i] -= to_double(rhs[i]);
  add_slack_vars(j, slacks, vals, tol);
  return slacks;
}

}  // namespace infotile
