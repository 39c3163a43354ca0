#include "infotile/ci_rewriter.hpp"

#include <stdexcept>
#include <unordered_set>

#include "infotile/entropy.hpp"
#include "infotile/gadgets.hpp"

namespace infotile {

size_t CISystem::size() const {
  size_t s = vars.size();
  for (auto& r : relations) s += r.a.size() + r.b.size() + r.c.size();
  if (target) s += target->a.size() + target->b.size() + target->c.size();
  return s;
}

std::vector<AffineConstraint> ci_rows(const CISystem& ci) {
  std::vector<AffineConstraint> rows;
  for (size_t i = 0; i < ci.relations.size(); ++i) {
    auto& t = ci.relations[i];
    rows.push_back({ci_expr(t.a, t.b, t.c), Rel::EQ, 0, "rel:" + std::to_string(i)});
  }
  return rows;
}

bool is_disjoint(const CITriple& t) { return t.a.disjoint(t.b) && t.a.disjoint(t.c) && t.b.disjoint(t.c); }

bool all_disjoint(const CISystem& ci) {
  for (auto& r : ci.relations)
    if (!is_disjoint(r)) return false;
  return !ci.target || is_disjoint(*ci.target);
}

void validate_ci(const CISystem& ci) {
  std::unordered_set<VarId> vs;
  for (auto v : ci.vars)
    if (!vs.insert(v).second) throw std::invalid_argument("duplicate variable '" + v.name() + "'");
  auto check = [&](const CITriple& t) {
    for (const VarSet* s : {&t.a, &t.b, &t.c})
      for (auto v : *s)
        if (!vs.count(v)) throw std::invalid_argument("relation uses undeclared variable '" + v.name() + "'");
  };
  for (auto& r : ci.relations) check(r);
  if (ci.target) check(*ci.target);
  if (ci.binary_var && !vs.count(*ci.binary_var)) throw std::invalid_argument("binary_var not declared");
}

namespace {

VarId fresh(const std::string& base, const std::unordered_set<VarId>& taken) {
  VarId v(base);
  for (int i = 1; taken.count(v); ++i) v = VarId(base + "~" + std::to_string(i));
  return v;
}

void append_sink(CISystem& out, TripleSink& sink) {
  out.vars.insert(out.vars.end(), sink.vars.begin(), sink.vars.end());
  out.relations.insert(out.relations.end(), sink.rels.begin(), sink.rels.end());
  sink.vars.clear();
  sink.rels.clear();
}

void check_unique(const CISystem& ci) {
  std::unordered_set<VarId> vs;
  for (auto v : ci.vars)
    if (!vs.insert(v).second) throw std::invalid_argument("name collision on '" + v.name() + "'");
}

}  // namespace

CISystem to_ci_only(const ConstraintSystem& cs) {
  validate_system(cs);
  auto issues = lint(cs);
  if (!issues.empty())
    throw std::invalid_argument("row " + std::to_string(issues[0].row) + " (" + issues[0].tag +
                                "): " + issues[0].reason);
  std::unordered_set<VarId> taken;
  for (auto v : cs.all_vars()) taken.insert(v);
  VarId anchor = fresh("X1", taken);

  CISystem out;
  out.vars.push_back(anchor);
  for (auto v : cs.all_vars()) out.vars.push_back(v);
  out.binary_var = anchor;

  TripleSink sink;
  Builder b(sink, "r", false);
  // UNIF(X1) as CI relations, so the Bern(1/2) extra reduces to H(X1) = 1.
  b.unif(anchor);
  append_sink(out, sink);
  std::map<VarId, long> open;  // lower bound seen, upper pending
  for (auto& row : cs.rows) {
    RowClass rc = classify_row(row);
    switch (rc.shape) {
      case RowShape::CI: out.relations.push_back(*rc.ci); break;
      case RowShape::LOWER_BOUND:
        if (rc.k == 2) b.unif_eq(rc.var, anchor);
        else b.unif_k_ci(rc.var, rc.k, anchor);
        append_sink(out, sink);
        open[rc.var] = rc.k;
        break;
      case RowShape::UPPER_BOUND: {
        auto it = open.find(rc.var);
        if (it == open.end() || it->second != rc.k)
          throw std::invalid_argument("upper cardinality bound without its lower bound (" + row.tag + ")");
        open.erase(it);
        break;
      }
      case RowShape::OTHER: throw std::invalid_argument("non-CI row (" + row.tag + ")");
    }
  }
  if (!open.empty()) throw std::invalid_argument("lower cardinality bound without its upper bound on '" +
                                                 open.begin()->first.name() + "'");
  check_unique(out);
  return out;
}

CISystem to_cardinality_implication(const CISystem& ci, long r) {
  if (r < 2) throw std::invalid_argument("card bound r must be >= 2");
  if (!ci.binary_var || ci.card_bound) throw std::invalid_argument("input needs a Bern(1/2) designated variable");
  validate_ci(ci);
  VarId x1 = *ci.binary_var;
  long L = floor_log2(BigInt(r));
  std::unordered_set<VarId> taken(ci.vars.begin(), ci.vars.end());
  VarId y = fresh("Y", taken);

  CISystem out;
  out.vars.push_back(y);
  out.vars.insert(out.vars.end(), ci.vars.begin(), ci.vars.end());
  out.relations = ci.relations;
  TripleSink sink;
  Builder b(sink, "c", false);
  b.pow(x1, L, y);
  b.unif_le2_le3(x1);
  append_sink(out, sink);
  out.binary_var = y;
  out.card_bound = r;
  out.target = CITriple{VarSet{y}, VarSet{y}, VarSet{}};
  check_unique(out);

  // card(X1)^L = card(Y) <= r forces card(X1) < 4 iff r < 4^L.
  BigInt four_L;
  mpz_ui_pow_ui(four_L.get_mpz_t(), 4, static_cast<unsigned long>(L));
  bool root_ok = BigInt(r) < four_L;
  if (!root_ok) throw std::logic_error("r^(1/floor(log r)) >= 4");
  out.audit = json::array({
      {{"step", "a"}, {"note", "non-existence of X with X1 ~ Bern(1/2) recast as the implication => H(X1) = 0"}},
      {{"step", "b"},
       {"note", "added POW_" + std::to_string(L) + "(" + x1.name() + ";" + y.name() + "), card(" + y.name() +
                    ") <= " + std::to_string(r) + ", UNIF_LE2_LE3(" + x1.name() + "); consequent H(" + y.name() +
                    ") = 0"}},
      {{"step", "c"}, {"note", "dropped X1 ~ Bern(1/2)"}},
      {{"check", "r^(1/floor(log r)) < 4"}, {"r", r}, {"floor_log_r", L}, {"holds", root_ok}},
  });
  return out;
}

CISystem disjointify(const CISystem& ci) {
  if (!ci.target) throw std::invalid_argument("disjointify needs a target relation");
  if (ci.n() < 2) throw std::invalid_argument("disjointify needs at least 2 variables");
  validate_ci(ci);
  const size_t n = ci.n();
  std::unordered_map<VarId, size_t> idx;
  for (size_t i = 0; i < n; ++i) idx[ci.vars[i]] = i;

  CISystem out;
  std::vector<VarId> Y, Z;
  for (size_t i = 1; i <= 3 * n; ++i) Y.emplace_back("Y" + std::to_string(i));
  for (size_t i = 1; i <= 3 * n; ++i) Z.emplace_back("Z" + std::to_string(i));
  out.vars = Y;
  out.vars.insert(out.vars.end(), Z.begin(), Z.end());

  TripleSink sink;
  Builder b(sink, "", false);
  for (size_t i = 0; i < 2 * n; ++i) {
    b.set_next_index(static_cast<int>(i + 1));
    b.eqres(Y[i], Z[i], Y[i + n], Z[i + n]);
  }
  append_sink(out, sink);

  for (size_t i = 0; i < 3 * n; ++i) {
    std::vector<VarId> rest;
    rest.reserve(6 * n - 2);
    for (size_t j = 0; j < 3 * n; ++j)
      if (j != i) {
        rest.push_back(Y[j]);
        rest.push_back(Z[j]);
      }
    VarSet R(std::move(rest));
    out.relations.push_back({VarSet{Y[i]}, R, VarSet{Z[i]}});
    out.relations.push_back({VarSet{Z[i]}, R, VarSet{Y[i]}});
  }

  auto shift = [&](const VarSet& s, size_t off) {
    std::vector<VarId> v;
    for (auto x : s) v.push_back(Y[idx.at(x) + off]);
    return VarSet(std::move(v));
  };
  auto map_rel = [&](const CITriple& t) { return CITriple{shift(t.a, 0), shift(t.b, n), shift(t.c, 2 * n)}; };
  for (auto& r : ci.relations) out.relations.push_back(map_rel(r));
  out.target = map_rel(*ci.target);
  if (ci.binary_var) out.binary_var = Y[idx.at(*ci.binary_var)];
  out.card_bound = ci.card_bound;

  check_unique(out);
  if (!all_disjoint(out)) throw std::logic_error("disjointify produced an overlapping triple");
  double in = static_cast<double>(ci.size());
  if (static_cast<double>(out.size()) > kDisjointifySizeFactor * in * in)
    throw std::logic_error("disjointify output exceeds the quadratic size bound");
  return out;
}

CISystem binary_implication_instance(const CISystem& ci, long r) {
  if (!ci.card_bound || !ci.binary_var || !ci.target)
    throw std::invalid_argument("input must come from the cardinality-implication rewrite");
  if (*ci.card_bound != r)
    throw std::invalid_argument("card bound mismatch: input has " + std::to_string(*ci.card_bound) + ", asked for " +
                                std::to_string(r));
  if (ci.vars.empty() || ci.vars[0] != *ci.binary_var)
    throw std::invalid_argument("designated variable must come first");
  double n = static_cast<double>(ci.n());
  if (36.0 * n * n > kBinaryImplicationMaxEntries)
    throw std::invalid_argument("instance too large: " + std::to_string(ci.n()) +
                                " variables give ~36n^2 saturation entries");
  CISystem out = disjointify(ci);
  // H(X1) = 0 becomes I(Y1;Z1) = 0; card(X1) <= r carries over to Y1.
  out.target = CITriple{VarSet{out.vars[0]}, VarSet{VarId("Z1")}, VarSet{}};
  out.binary_var = out.vars[0];
  out.card_bound = r;
  out.audit = json::array({{{"step", "consequent"}, {"from", "H(" + ci.vars[0].name() + ") = 0"},
                            {"to", "I(Y1;Z1) = 0"}},
                           {{"step", "cardinality"}, {"from", "card(" + ci.vars[0].name() + ") <= " + std::to_string(r)},
                            {"to", "card(Y1) <= " + std::to_string(r)}}});
  return out;
}

FactoredJoint canonical_disjoint_extension(const FactoredJoint& j, const CISystem& in, const CISystem& out) {
  const size_t n = in.n();
  FactoredJoint ext;
  for (auto& s : j.seeds()) ext.add_seed(s.name, s.probs);
  for (auto& v : j.vars()) ext.add_var(v.name, v.seeds, v.table);
  auto copy = [&](VarId dst, VarId src) {
    const JointVar& s = j.var(src);
    ext.add_var(dst, s.seeds, s.table);
  };
  for (size_t i = 0; i < 3 * n; ++i) {
    VarId x = in.vars[i % n];
    copy(VarId("Y" + std::to_string(i + 1)), x);
    copy(VarId("Z" + std::to_string(i + 1)), x);
  }
  for (size_t i = 1; i <= 2 * n; ++i) {
    VarId x = in.vars[(i - 1) % n];
    for (const char* u : {"U1", "U2"}) {
      VarId name("EQRES." + std::to_string(i) + "." + u);
      if (std::find(out.vars.begin(), out.vars.end(), name) == out.vars.end())
        throw std::invalid_argument("output lacks " + name.name());
      copy(name, x);
    }
  }
  return ext;
}

double eval_relation(const FactoredJoint& j, const CITriple& t) { return eval_expression(j, ci_expr(t.a, t.b, t.c)); }

json ci_triple_json(const CITriple& t) { return {{"A", t.a.names()}, {"B", t.b.names()}, {"C", t.c.names()}}; }

CITriple ci_triple_from_json(const json& j) {
  return {varset_from_json(j.at("A")), varset_from_json(j.at("B")), varset_from_json(j.at("C"))};
}

json ci_system_json(const CISystem& ci) {
  std::vector<std::string> names;
  names.reserve(ci.vars.size());
  for (auto v : ci.vars) names.push_back(v.name());
  json rels = json::array();
  for (auto& r : ci.relations) rels.push_back(ci_triple_json(r));
  json out = {{"n", ci.n()}, {"vars", names}, {"relations", std::move(rels)}};
  json extras = json::object();
  if (ci.binary_var) extras["binary_var"] = ci.binary_var->name();
  if (ci.card_bound) extras["card_bound"] = *ci.card_bound;
  out["extras"] = extras;
  if (ci.target) out["target"] = ci_triple_json(*ci.target);
  if (!ci.audit.is_null()) out["audit"] = ci.audit;
  return out;
}

CISystem ci_system_from_json(const json& j) {
  CISystem ci;
  try {
    for (auto& n : j.at("vars")) ci.vars.emplace_back(n.get<std::string>());
    if (j.at("n").get<size_t>() != ci.vars.size()) throw std::invalid_argument("'n' does not match 'vars'");
    for (auto& r : j.at("relations")) ci.relations.push_back(ci_triple_from_json(r));
    if (j.contains("extras")) {
      auto& e = j["extras"];
      if (e.contains("binary_var")) ci.binary_var = VarId(e["binary_var"].get<std::string>());
      if (e.contains("card_bound")) ci.card_bound = e["card_bound"].get<long>();
    }
    if (j.contains("target")) ci.target = ci_triple_from_json(j["target"]);
    if (j.contains("audit")) ci.audit = j["audit"];
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed CI system: ") + e.what());
  }
  validate_ci(ci);
  return ci;
}

}  // namespace infotile
