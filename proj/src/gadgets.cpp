#include "infotile/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "infotile/constants.hpp"

namespace infotile {

void SystemSink::ci(const VarSet& a, const VarSet& b, const VarSet& c, const std::string& tag) {
  cs_.rows.push_back({ci_expr(a, b, c), Rel::EQ, Rational(0), tag});
}

void SystemSink::bound(VarId x, Rel rel, const Rational& rhs, const std::string& tag) {
  cs_.rows.push_back({InfoExpr::entropy(VarSet{x}), rel, rhs, tag});
}

void TripleSink::ci(const VarSet& a, const VarSet& b, const VarSet& c, const std::string& tag) {
  rels.push_back({a, b, c});
  if (keep_tags) tags.push_back(tag);
}

void TripleSink::bound(VarId, Rel, const Rational&, const std::string& tag) {
  throw std::invalid_argument("affine bound in a CI-only context (" + tag + ")");
}

VarId GadgetInstance::local(const std::string& name) const {
  for (auto& [n, v] : locals)
    if (n == name) return v;
  throw std::out_of_range(display + "@" + path + " has no local '" + name + "'");
}

std::vector<VarId> SwitchVars::flat() const {
  std::vector<VarId> out = W;
  out.insert(out.end(), V.begin(), V.end());
  out.insert(out.end(), Vb.begin(), Vb.end());
  out.push_back(F);
  return out;
}

long sat_uniform_size(SatKind s) {
  switch (s) {
    case SatKind::NE_1_2: return 2;
    case SatKind::LE_1_2: return 3;
    case SatKind::LE_3_4: return 105;
  }
  return 0;
}

std::string sat_key(SatKind s) {
  switch (s) {
    case SatKind::NE_1_2: return "SAT_NE_1_2";
    case SatKind::LE_1_2: return "SAT_LE_1_2";
    case SatKind::LE_3_4: return "SAT_LE_3_4";
  }
  return "";
}

Builder::Builder(RowSink& sink, std::string prefix, bool log)
    : sink_(sink), prefix_(std::move(prefix)), logging_(log) {}

std::map<std::string, long> Builder::counts() const { return counts_; }

GadgetInstance& Builder::enter(const std::string& key, const std::string& display, std::vector<VarId> args) {
  Frame f;
  f.display = display;
  if (stack_.empty()) {
    f.path = prefix_ + std::to_string(top_++);
  } else {
    Frame& p = stack_.back();
    f.path = p.path + "/" + std::to_string(p.children++);
  }
  ++counts_[display];
  GadgetInstance* g = &scratch_;
  if (logging_) {
    f.inst = log_.size();
    log_.emplace_back();
    g = &log_.back();
  } else {
    f.inst = SIZE_MAX;
    scratch_ = GadgetInstance{};
  }
  g->key = key;
  g->display = display;
  g->path = f.path;
  g->args = std::move(args);
  stack_.push_back(std::move(f));
  return *g;
}

void Builder::leave() { stack_.pop_back(); }

GadgetInstance* Builder::cur() {
  size_t i = stack_.back().inst;
  return i == SIZE_MAX ? nullptr : &log_[i];
}

VarId Builder::local(const std::string& name) {
  const Frame& f = stack_.back();
  VarId v(f.display + "." + f.path + "." + name);
  sink_.declare(v);
  if (auto* g = cur()) g->locals.emplace_back(name, v);
  return v;
}

std::string Builder::tag() const { return stack_.back().display + "@" + stack_.back().path; }

void Builder::ci(const VarSet& a, const VarSet& b, const VarSet& c) { sink_.ci(a, b, c, tag()); }

namespace {

VarSet pick(const std::vector<VarId>& v, const std::vector<int>& idx) {
  std::vector<VarId> out;
  for (int i : idx) out.push_back(v[i - 1]);
  return VarSet(std::move(out));
}

std::vector<int> complement(long k, const std::vector<int>& j) {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i)
    if (std::find(j.begin(), j.end(), i) == j.end()) out.push_back(i);
  return out;
}

int mod4(int j) { return (j - 1) % 4 + 1; }

}  // namespace

void Builder::triple(VarId y1, VarId y2, VarId y3) {
  enter("TRIPLE", "TRIPLE", {y1, y2, y3});
  ci({y1}, {y1}, {y2, y3});
  ci({y2}, {y2}, {y1, y3});
  ci({y3}, {y3}, {y1, y2});
  ind({y1}, {y2});
  ind({y1}, {y3});
  ind({y2}, {y3});
  leave();
}

void Builder::unif(VarId x) {
  enter("UNIF", "UNIF", {x});
  VarId u1 = local("U1"), u2 = local("U2");
  triple(x, u1, u2);
  leave();
}

void Builder::unif_k(VarId x, long k) {
  if (k < 2) throw std::invalid_argument("UNIF_k needs k >= 2");
  auto& g = enter("UNIF_K", "UNIF_" + std::to_string(k), {x});
  g.k = k;
  unif(x);
  sink_.bound(x, Rel::GE, pick_alpha(k), tag());
  sink_.bound(x, Rel::LE, pick_alpha(k + 1), tag());
  leave();
}

void Builder::cycs(VarId x1, VarId x2) {
  enter("CYCS", "CYCS", {x1, x2});
  VarId u = local("U");
  unif(x1);
  unif(x2);
  unif_k(u, 2);
  ind({x1}, {u});
  ind({x2}, {u});
  fn({x1}, {x2, u});
  fn({x2}, {x1, u});
  fn({u}, {x1, x2});
  leave();
}

void Builder::tori(VarId x1, VarId x2, VarId y1, VarId y2) {
  enter("TORI", "TORI", {x1, x2, y1, y2});
  cycs(x1, x2);
  cycs(y1, y2);
  ind({x1, x2}, {y1, y2});
  leave();
}

void Builder::flip(VarId f, VarId g1, VarId g2) {
  enter("FLIP", "FLIP", {f, g1, g2});
  VarId u = local("U"), z1 = local("Z1"), z2 = local("Z2");
  unif_k(u, 4);
  unif_k(f, 2);
  fn({f, g1, g2}, {u});
  ci({g1}, {g2}, {f});
  unif_k(z1, 3);
  ind({z1}, {g1});
  fn({u}, {g1, z1});
  unif_k(z2, 3);
  ind({z2}, {g2});
  fn({u}, {g2, z2});
  leave();
}

static void check_switch(const SwitchVars& s, long min_k) {
  long k = s.k();
  if (static_cast<long>(s.V.size()) != k || static_cast<long>(s.Vb.size()) != k)
    throw std::invalid_argument("switch bundle needs |W| = |V| = |Vb|");
  if (k < min_k) throw std::invalid_argument("switch needs k >= " + std::to_string(min_k));
}

void Builder::sw(const SwitchVars& s) {
  check_switch(s, 4);
  auto& g = enter("SW", "SW", s.flat());
  g.k = s.k();
  VarId gv = local("G");
  ind(VarSet(s.W), {s.F, gv});
  for (long i = 0; i < s.k(); ++i) {
    unif_k(s.W[i], 2);
    fn({s.V[i], s.Vb[i]}, {s.W[i], s.F});
    ci({s.V[i]}, {s.Vb[i]}, {s.W[i]});
    flip(s.F, gv, s.V[i]);
    flip(s.F, gv, s.Vb[i]);
  }
  leave();
}

bool in_Tk(unsigned long w, long k) {
  unsigned long full = (1UL << k) - 1;
  for (long j = 1; j <= k - 1; ++j) {
    unsigned long e = 1UL << (j - 1);
    if (w == e || w == (full ^ e)) return true;
  }
  return false;
}

long col_row_count(long k) { return (1L << k) - 2 * (k - 1); }

void Builder::col(const SwitchVars& s) {
  check_switch(s, 4);
  if (s.k() > kMaxSwitches)
    throw std::invalid_argument("COL with k = " + std::to_string(s.k()) + " exceeds the cap k <= 13");
  auto& g = enter("COL", "COL", s.flat());
  g.k = s.k();
  sw(s);
  long k = s.k();
  VarSet wall(s.W);
  for (unsigned long w = 0; w < (1UL << k); ++w) {
    if (in_Tk(w, k)) continue;
    std::vector<VarId> cond(s.W.begin(), s.W.end());
    for (long i = 0; i < k; ++i) cond.push_back((w >> i) & 1 ? s.V[i] : s.Vb[i]);
    fn({s.F}, VarSet(std::move(cond)));
  }
  leave();
}

void Builder::cold(const std::vector<VarId>& x, const SwitchVars& s) {
  std::vector<VarId> args = x;
  auto sf = s.flat();
  args.insert(args.end(), sf.begin(), sf.end());
  auto& g = enter("COLD", "COLD", std::move(args));
  g.k = s.k();
  g.e_arity = x.size();
  col(s);
  VarSet X(x);
  fn(VarSet(s.W), X);
  std::vector<VarId> vvf = s.V;
  vvf.insert(vvf.end(), s.Vb.begin(), s.Vb.end());
  vvf.push_back(s.F);
  ci(VarSet(std::move(vvf)), X, VarSet(s.W));
  leave();
}

void Builder::sat(SatKind kind, const std::vector<int>& S, const std::vector<int>& Sbar, const std::vector<VarId>& e,
                  const SwitchVars& s) {
  check_switch(s, 1);
  for (int i : S)
    if (i < 1 || i > s.k()) throw std::invalid_argument("SAT index out of range");
  for (int i : Sbar) {
    if (i < 1 || i > s.k()) throw std::invalid_argument("SAT index out of range");
    if (std::find(S.begin(), S.end(), i) != S.end()) throw std::invalid_argument("SAT needs S and S-bar disjoint");
  }
  std::vector<VarId> args = e;
  auto sf = s.flat();
  args.insert(args.end(), sf.begin(), sf.end());
  std::string key = sat_key(kind);
  auto& g = enter(key, key, std::move(args));
  g.k = s.k();
  g.a = sat_uniform_size(kind);
  g.e_arity = e.size();
  g.S = S;
  g.Sbar = Sbar;
  VarId u = local("U");
  unif_k(u, sat_uniform_size(kind));
  VarSet ctx = VarSet(e) | pick(s.V, S) | pick(s.Vb, Sbar);
  ind({u}, ctx);
  fn({s.F}, ctx | VarSet{u});
  leave();
}

void Builder::ctori(const std::array<VarId, 4>& xy, const SwitchVars& s) {
  std::vector<VarId> args(xy.begin(), xy.end());
  auto sf = s.flat();
  args.insert(args.end(), sf.begin(), sf.end());
  auto& g = enter("CTORI", "CTORI", std::move(args));
  g.k = s.k();
  tori(xy[0], xy[1], xy[2], xy[3]);
  cold({xy[0], xy[1], xy[2], xy[3]}, s);
  leave();
}

void Builder::otori(const std::array<VarId, 4>& xy, const SwitchVars& s) {
  long k = s.k();
  if (k < 9 || (k - 1) % 4 != 0) throw std::invalid_argument("OTORI needs k - 1 >= 8 and a multiple of 4");
  std::vector<VarId> args(xy.begin(), xy.end());
  auto sf = s.flat();
  args.insert(args.end(), sf.begin(), sf.end());
  auto& g = enter("OTORI", "OTORI", std::move(args));
  g.k = k;
  auto [x1, x2, y1, y2] = xy;
  ctori(xy, s);
  const std::vector<std::vector<VarId>> edges = {{x1, x2, y1}, {x1, x2, y2}, {x1, y1, y2}, {x2, y1, y2}};
  for (auto& e : edges) sat(SatKind::NE_1_2, {static_cast<int>(k)}, {}, e, s);
  // vertical edges pair groups {1,4} or {2,3}; horizontal ones {1,2} or {3,4}
  auto block = [&](int ok_a, int ok_b, int ok_c, int ok_d, const std::vector<VarId>& e1,
                   const std::vector<VarId>& e2) {
    for (int j1 = 1; j1 <= k - 1; ++j1)
      for (int j2 = j1; j2 <= k - 1; ++j2) {
        std::set<int> r = {mod4(j1), mod4(j2)};
        if (r == std::set<int>{ok_a, ok_b} || r == std::set<int>{ok_c, ok_d}) continue;
        std::vector<int> rest = complement(k, j1 == j2 ? std::vector<int>{j1} : std::vector<int>{j1, j2});
        sat(SatKind::LE_1_2, {}, rest, e1, s);
        sat(SatKind::LE_1_2, {}, rest, e2, s);
        sat(SatKind::LE_1_2, rest, {}, e1, s);
        sat(SatKind::LE_1_2, rest, {}, e2, s);
      }
  };
  block(1, 4, 2, 3, edges[0], edges[1]);
  block(1, 2, 3, 4, edges[2], edges[3]);
  leave();
}

long ttori_k(const TileSet& ts) { return 4L * std::max(ts.num_colors, 2) + 1; }

long Builder::ttori(const TileSet& ts) {
  validate_tileset(ts);
  long k = ttori_k(ts);
  if (k > kMaxSwitches)
    throw std::invalid_argument("instance too large: " + std::to_string(ts.num_colors) +
                                " tile colors need k = " + std::to_string(k) + " > 13");
  auto& g = enter("TTORI", "TTORI", {});
  g.k = k;
  std::array<VarId, 4> xy = {local("X1"), local("X2"), local("Y1"), local("Y2")};
  SwitchVars s;
  for (long i = 1; i <= k; ++i) s.W.push_back(local("W" + std::to_string(i)));
  for (long i = 1; i <= k; ++i) s.V.push_back(local("V" + std::to_string(i)));
  for (long i = 1; i <= k; ++i) s.Vb.push_back(local("Vb" + std::to_string(i)));
  s.F = local("F");
  otori(xy, s);

  std::set<Tile> tiles(ts.tiles.begin(), ts.tiles.end());
  int m = static_cast<int>((k - 1) / 4);
  // J = {4d1-3, 4d2-2, 4d3-1, 4d4}: one color per group. Type-11 faces read
  // the tile as (d1,d2,d3,d4); type-22 faces as (d3,d4,d1,d2).
  for (int face = 0; face < 2; ++face) {
    std::vector<VarId> e = face == 0 ? std::vector<VarId>{xy[0], xy[2]} : std::vector<VarId>{xy[1], xy[3]};
    for (int d1 = 1; d1 <= m; ++d1)
      for (int d2 = 1; d2 <= m; ++d2)
        for (int d3 = 1; d3 <= m; ++d3)
          for (int d4 = 1; d4 <= m; ++d4) {
            Tile t = face == 0 ? Tile{d1, d2, d3, d4} : Tile{d3, d4, d1, d2};
            if (tiles.count(t)) continue;
            std::vector<int> rest = complement(k, {4 * d1 - 3, 4 * d2 - 2, 4 * d3 - 1, 4 * d4});
            sat(SatKind::LE_3_4, {}, rest, e, s);
            sat(SatKind::LE_3_4, rest, {}, e, s);
          }
  }
  leave();
  return k;
}

void Builder::unif_eq(VarId y, VarId z) {
  enter("UNIF_EQ", "UNIF_EQ", {y, z});
  VarId u1 = local("U1"), u2 = local("U2"), u3 = local("U3");
  triple(y, u1, u2);
  triple(z, u1, u3);
  leave();
}

void Builder::prod(const std::vector<VarId>& ys, VarId g) {
  if (ys.empty()) throw std::invalid_argument("PROD needs at least one factor");
  std::vector<VarId> args = ys;
  args.push_back(g);
  auto& inst = enter("PROD", "PROD", std::move(args));
  inst.k = static_cast<long>(ys.size());
  std::vector<VarId> z;
  for (size_t i = 0; i < ys.size(); ++i) z.push_back(local("Z" + std::to_string(i + 1)));
  VarId u = local("U");
  for (size_t i = 0; i < ys.size(); ++i) {
    unif_eq(ys[i], z[i]);
    if (i > 0) ind({z[i]}, VarSet(std::vector<VarId>(z.begin(), z.begin() + i)));
  }
  unif_eq(g, u);
  VarSet zl(z);
  fn({u}, zl);
  fn(zl, {u});
  leave();
}

void Builder::pow(VarId y, long k, VarId g) {
  if (k < 1) throw std::invalid_argument("POW needs k >= 1");
  auto& inst = enter("POW", "POW_" + std::to_string(k), {y, g});
  inst.k = k;
  prod(std::vector<VarId>(k, y), g);
  leave();
}

void Builder::gesqrt(VarId y, VarId g) {
  enter("GESQRT", "GESQRT", {y, g});
  VarId z = local("Z"), w = local("W"), u = local("U"), v = local("V");
  unif_eq(y, z);
  unif(w);
  ind({w}, {z});
  unif_eq(g, u);
  fn({u}, {z, w});
  fn({z, w}, {u});
  unif_eq(z, v);
  fn({u}, {z, v});
  leave();
}

void Builder::le(VarId y, VarId z) {
  enter("LE", "LE", {y, z});
  VarId u = local("U");
  prod({y, z}, u);
  gesqrt(z, u);
  leave();
}

void Builder::unif_k_ci(VarId y, long k, VarId anchor) {
  if (k < 2) throw std::invalid_argument("UNIF_k needs k >= 2");
  auto& inst = enter("UNIF_K_CI", "UNIF_" + std::to_string(k) + "_CI", {y, anchor});
  inst.k = k;
  VarId u = local("U"), v1 = local("V1"), v2 = local("V2"), w1 = local("W1"), w2 = local("W2");
  LogBound lo = pick_log_bounds(k), hi = pick_log_bounds(k + 1);
  unif_eq(u, anchor);
  unif(y);
  pow(u, lo.p, v1);
  pow(y, lo.q, w1);
  le(v1, w1);
  pow(u, hi.p, v2);
  pow(y, hi.q, w2);
  le(w2, v2);
  leave();
}

void Builder::unif_le2_le3(VarId y) {
  enter("UNIF_LE2_LE3", "UNIF_LE2_LE3", {y});
  VarId u = local("U"), v1 = local("V1"), v2 = local("V2"), w1 = local("W1"), w2 = local("W2");
  const auto& c = kCardGap;
  unif(y);
  unif(u);
  pow(y, c.p3, v1);
  pow(u, c.q3, w1);
  le(v1, w1);
  pow(y, c.p4, v2);
  pow(u, c.q4, w2);
  le(w2, v2);
  leave();
}

void Builder::res3(VarId y1, VarId y2, VarId y3) {
  enter("RES3", "RES3", {y1, y2, y3});
  ci({y1}, {y2}, {y3});
  ci({y2}, {y3}, {y1});
  ci({y3}, {y1}, {y2});
  leave();
}

void Builder::eq(VarId f, VarId g) {
  enter("EQ", "EQ", {f, g});
  fn({f}, {g});
  fn({g}, {f});
  leave();
}

void Builder::eqres(VarId y1, VarId z1, VarId y2, VarId z2) {
  enter("EQRES", "EQRES", {y1, z1, y2, z2});
  VarId u1 = local("U1"), u2 = local("U2");
  res3(y1, z1, u1);
  res3(z1, u1, u2);
  res3(u1, u2, y2);
  res3(u2, y2, z2);
  leave();
}

std::vector<std::string> catalog_keys() {
  return {"TRIPLE", "UNIF",       "UNIF_K",     "CYCS",  "TORI",    "FLIP",   "SW",        "COL",
          "COLD",   "SAT_NE_1_2", "SAT_LE_1_2", "SAT_LE_3_4", "CTORI", "OTORI", "TTORI",  "UNIF_EQ",
          "PROD",   "POW",        "GESQRT",     "LE",    "UNIF_K_CI", "UNIF_LE2_LE3", "RES3", "EQ",
          "EQRES"};
}

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_k_switch(const GadgetRef& g, long lo) {
  need(g.k >= lo, g.name + " needs k >= " + std::to_string(lo));
  need(g.k <= kMaxSwitches, g.name + " with k = " + std::to_string(g.k) + " exceeds the cap k <= 13");
}

SwitchVars switch_from(const std::vector<VarId>& a, size_t off, long k) {
  SwitchVars s;
  s.W.assign(a.begin() + off, a.begin() + off + k);
  s.V.assign(a.begin() + off + k, a.begin() + off + 2 * k);
  s.Vb.assign(a.begin() + off + 2 * k, a.begin() + off + 3 * k);
  s.F = a[off + 3 * k];
  return s;
}

}  // namespace

size_t gadget_arity(const GadgetRef& g) {
  const std::string& n = g.name;
  if (n == "TRIPLE" || n == "FLIP" || n == "RES3") return 3;
  if (n == "UNIF" || n == "UNIF_LE2_LE3") return 1;
  if (n == "UNIF_K") {
    need(g.k >= 2, "UNIF_K needs k >= 2");
    return 1;
  }
  if (n == "CYCS" || n == "UNIF_EQ" || n == "GESQRT" || n == "LE" || n == "EQ") return 2;
  if (n == "TORI" || n == "EQRES") return 4;
  if (n == "SW" || n == "COL") {
    check_k_switch(g, 4);
    return 3 * g.k + 1;
  }
  if (n == "COLD") {
    check_k_switch(g, 4);
    need(g.e >= 1, "COLD needs a vertex variable");
    return g.e + 3 * g.k + 1;
  }
  if (n == "SAT_NE_1_2" || n == "SAT_LE_1_2" || n == "SAT_LE_3_4") {
    need(g.k >= 1 && g.k <= kMaxSwitches, n + " needs 1 <= k <= 13");
    std::set<int> s(g.S.begin(), g.S.end());
    for (int i : g.S) need(i >= 1 && i <= g.k, n + " index out of range");
    for (int i : g.Sbar) {
      need(i >= 1 && i <= g.k, n + " index out of range");
      need(!s.count(i), n + " needs S and S-bar disjoint");
    }
    return g.e + 3 * g.k + 1;
  }
  if (n == "CTORI" || n == "OTORI") {
    check_k_switch(g, 4);
    if (n == "OTORI") need(g.k >= 9 && (g.k - 1) % 4 == 0, "OTORI needs k - 1 >= 8 and a multiple of 4");
    return 4 + 3 * g.k + 1;
  }
  if (n == "TTORI") {
    need(g.tiles.has_value(), "TTORI needs a tile set");
    return 0;
  }
  if (n == "PROD") {
    need(g.l >= 1, "PROD needs l >= 1");
    return g.l + 1;
  }
  if (n == "POW") {
    need(g.k >= 1, "POW needs k >= 1");
    return 2;
  }
  if (n == "UNIF_K_CI") {
    need(g.k >= 2, "UNIF_K_CI needs k >= 2");
    return 2;
  }
  throw std::invalid_argument("unknown gadget '" + n + "'");
}

ConstraintSystem instantiate_gadget(const GadgetRef& g, const std::vector<VarId>& a, std::vector<GadgetInstance>* log) {
  size_t ar = gadget_arity(g);
  if (a.size() != ar)
    throw std::invalid_argument(g.name + " takes " + std::to_string(ar) + " arguments, got " + std::to_string(a.size()));
  ConstraintSystem cs;
  for (auto v : a)
    if (std::find(cs.free_vars.begin(), cs.free_vars.end(), v) == cs.free_vars.end()) cs.free_vars.push_back(v);
  SystemSink sink(cs);
  Builder b(sink, "", log != nullptr);
  const std::string& n = g.name;
  if (n == "TRIPLE") b.triple(a[0], a[1], a[2]);
  else if (n == "UNIF") b.unif(a[0]);
  else if (n == "UNIF_K") b.unif_k(a[0], g.k);
  else if (n == "CYCS") b.cycs(a[0], a[1]);
  else if (n == "TORI") b.tori(a[0], a[1], a[2], a[3]);
  else if (n == "FLIP") b.flip(a[0], a[1], a[2]);
  else if (n == "SW") b.sw(switch_from(a, 0, g.k));
  else if (n == "COL") b.col(switch_from(a, 0, g.k));
  else if (n == "COLD") b.cold({a.begin(), a.begin() + g.e}, switch_from(a, g.e, g.k));
  else if (n == "SAT_NE_1_2") b.sat(SatKind::NE_1_2, g.S, g.Sbar, {a.begin(), a.begin() + g.e}, switch_from(a, g.e, g.k));
  else if (n == "SAT_LE_1_2") b.sat(SatKind::LE_1_2, g.S, g.Sbar, {a.begin(), a.begin() + g.e}, switch_from(a, g.e, g.k));
  else if (n == "SAT_LE_3_4") b.sat(SatKind::LE_3_4, g.S, g.Sbar, {a.begin(), a.begin() + g.e}, switch_from(a, g.e, g.k));
  else if (n == "CTORI") b.ctori({a[0], a[1], a[2], a[3]}, switch_from(a, 4, g.k));
  else if (n == "OTORI") b.otori({a[0], a[1], a[2], a[3]}, switch_from(a, 4, g.k));
  else if (n == "TTORI") b.ttori(*g.tiles);
  else if (n == "UNIF_EQ") b.unif_eq(a[0], a[1]);
  else if (n == "PROD") b.prod({a.begin(), a.end() - 1}, a.back());
  else if (n == "POW") b.pow(a[0], g.k, a[1]);
  else if (n == "GESQRT") b.gesqrt(a[0], a[1]);
  else if (n == "LE") b.le(a[0], a[1]);
  else if (n == "UNIF_K_CI") b.unif_k_ci(a[0], g.k, a[1]);
  else if (n == "UNIF_LE2_LE3") b.unif_le2_le3(a[0]);
  else if (n == "RES3") b.res3(a[0], a[1], a[2]);
  else if (n == "EQ") b.eq(a[0], a[1]);
  else if (n == "EQRES") b.eqres(a[0], a[1], a[2], a[3]);
  if (log) *log = b.instances();
  validate_system(cs);
  return cs;
}

}  // namespace infotile
