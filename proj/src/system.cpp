#include "infotile/system.hpp"

#include <set>
#include <stdexcept>

#include "infotile/constants.hpp"

namespace infotile {

std::vector<VarId> ConstraintSystem::all_vars() const {
  std::vector<VarId> v = free_vars;
  v.insert(v.end(), exists.begin(), exists.end());
  return v;
}

void validate_system(const ConstraintSystem& cs) {
  std::set<VarId> fr(cs.free_vars.begin(), cs.free_vars.end());
  std::set<VarId> ex(cs.exists.begin(), cs.exists.end());
  if (fr.size() != cs.free_vars.size()) throw std::invalid_argument("duplicate free variable");
  if (ex.size() != cs.exists.size()) throw std::invalid_argument("duplicate existential variable");
  for (auto v : ex)
    if (fr.count(v)) throw std::invalid_argument("variable '" + v.name() + "' is both free and existential");
  for (size_t i = 0; i < cs.rows.size(); ++i)
    for (auto& [s, c] : cs.rows[i].lhs.terms())
      for (auto v : s)
        if (!fr.count(v) && !ex.count(v))
          throw std::invalid_argument("row " + std::to_string(i) + " uses undeclared variable '" + v.name() + "'");
}

ConstraintSystem rename_vars(const ConstraintSystem& cs, const std::map<VarId, VarId>& m) {
  auto map1 = [&](VarId v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  ConstraintSystem out;
  for (auto v : cs.free_vars) out.free_vars.push_back(map1(v));
  for (auto v : cs.exists) out.exists.push_back(map1(v));
  for (auto& r : cs.rows) {
    AffineConstraint nr{InfoExpr{}, r.rel, r.rhs, r.tag};
    for (auto& [s, c] : r.lhs.terms()) {
      std::vector<VarId> vs;
      for (auto v : s) vs.push_back(map1(v));
      nr.lhs.add(VarSet(std::move(vs)), c);
    }
    out.rows.push_back(std::move(nr));
  }
  out.manifest = cs.manifest;
  return out;
}

namespace {

VarId fresh_name(VarId v, const std::set<VarId>& taken) {
  for (int i = 1;; ++i) {
    VarId cand(v.name() + "~" + std::to_string(i));
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

ConstraintSystem conjoin(const ConstraintSystem& p, const ConstraintSystem& q) {
  validate_system(p);
  validate_system(q);
  std::set<VarId> taken;
  for (auto v : p.all_vars()) taken.insert(v);
  for (auto v : q.all_vars()) taken.insert(v);
  std::set<VarId> q_free(q.free_vars.begin(), q.free_vars.end());
  std::set<VarId> p_free(p.free_vars.begin(), p.free_vars.end());
  // P's witnesses must not capture Q's free variables and vice versa.
  std::map<VarId, VarId> pm, qm;
  for (auto v : p.exists)
    if (q_free.count(v)) taken.insert(pm[v] = fresh_name(v, taken));
  std::set<VarId> p_names;
  for (auto v : p.all_vars()) p_names.insert(pm.count(v) ? pm[v] : v);
  for (auto v : q.exists)
    if (p_names.count(v) || p_free.count(v)) taken.insert(qm[v] = fresh_name(v, taken));
  ConstraintSystem a = rename_vars(p, pm), b = rename_vars(q, qm);
  ConstraintSystem out;
  out.free_vars = a.free_vars;
  for (auto v : b.free_vars)
    if (!p_free.count(v)) out.free_vars.push_back(v);
  out.exists = a.exists;
  out.exists.insert(out.exists.end(), b.exists.begin(), b.exists.end());
  out.rows = a.rows;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  return out;
}

ConstraintSystem exists_extend(const ConstraintSystem& p, const std::vector<VarId>& new_vars,
                               const std::vector<AffineConstraint>& extra) {
  validate_system(p);
  std::set<VarId> ex(p.exists.begin(), p.exists.end());
  std::set<VarId> nv;
  for (auto v : new_vars) {
    if (ex.count(v)) throw std::invalid_argument("existential variable '" + v.name() + "' already bound");
    if (!nv.insert(v).second) throw std::invalid_argument("variable '" + v.name() + "' listed twice");
  }
  ConstraintSystem out;
  for (auto v : p.free_vars)
    if (!nv.count(v)) out.free_vars.push_back(v);
  out.exists = p.exists;
  out.exists.insert(out.exists.end(), new_vars.begin(), new_vars.end());
  out.rows = p.rows;
  out.rows.insert(out.rows.end(), extra.begin(), extra.end());
  out.manifest = p.manifest;
  validate_system(out);
  return out;
}

RowClass classify_row(const AffineConstraint& row) {
  RowClass rc;
  if (auto ci = recognize_ci(row)) {
    rc.shape = RowShape::CI;
    rc.ci = ci;
    return rc;
  }
  const auto& t = row.lhs.terms();
  if (t.size() != 1 || t.begin()->second != 1 || t.begin()->first.size() != 1) return rc;
  VarId x = *t.begin()->first.begin();
  auto idx = alpha_index(row.rhs);
  if (!idx) return rc;
  if (row.rel == Rel::GE) {
    rc.shape = RowShape::LOWER_BOUND;
    rc.k = *idx;
  } else if (row.rel == Rel::LE && *idx >= 3) {
    rc.shape = RowShape::UPPER_BOUND;
    rc.k = *idx - 1;
  } else {
    return rc;
  }
  rc.var = x;
  return rc;
}

std::vector<LintIssue> lint(const ConstraintSystem& cs) {
  std::vector<LintIssue> out;
  std::map<VarId, std::pair<long, long>> window;  // var -> (lower k, upper k)
  for (size_t i = 0; i < cs.rows.size(); ++i) {
    RowClass rc = classify_row(cs.rows[i]);
    switch (rc.shape) {
      case RowShape::CI: break;
      case RowShape::LOWER_BOUND: window[rc.var].first = rc.k; break;
      case RowShape::UPPER_BOUND: window[rc.var].second = rc.k; break;
      case RowShape::OTHER:
        out.push_back({i, cs.rows[i].tag, "neither a CI equality nor a cardinality bound"});
    }
  }
  for (auto& [v, w] : window)
    if (w.first != w.second)
      out.push_back({cs.rows.size(), "", "cardinality bounds on '" + v.name() + "' do not form a window"});
  return out;
}

json manifest_json(const Manifest& m) {
  json inst = json::object();
  for (auto& [k, v] : m.instances) inst[k] = v;
  return {{"k", m.k}, {"instances", inst}};
}

json system_json(const ConstraintSystem& cs) {
  json rows = json::array();
  for (auto& r : cs.rows)
    rows.push_back({{"lhs", expr_json(r.lhs)}, {"rel", rel_str(r.rel)}, {"rhs", rational_json(r.rhs)}, {"tag", r.tag}});
  std::vector<std::string> fr, ex;
  for (auto v : cs.free_vars) fr.push_back(v.name());
  for (auto v : cs.exists) ex.push_back(v.name());
  json out = {{"free", fr}, {"exists", ex}, {"rows", rows}};
  if (cs.manifest) out["manifest"] = manifest_json(*cs.manifest);
  return out;
}

ConstraintSystem system_from_json(const json& j) {
  ConstraintSystem cs;
  try {
    for (auto& n : j.at("free")) cs.free_vars.emplace_back(n.get<std::string>());
    for (auto& n : j.at("exists")) cs.exists.emplace_back(n.get<std::string>());
    for (auto& r : j.at("rows")) {
      AffineConstraint c;
      c.lhs = expr_from_json(r.at("lhs"));
      c.rel = parse_rel(r.at("rel").get<std::string>());
      c.rhs = rational_from_json(r.at("rhs"));
      c.tag = r.value("tag", "");
      cs.rows.push_back(std::move(c));
    }
    if (j.contains("manifest")) {
      Manifest m;
      m.k = j["manifest"].value("k", 0L);
      for (auto& [k, v] : j["manifest"].at("instances").items()) m.instances[k] = v.get<long>();
      cs.manifest = m;
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed constraint system: ") + e.what());
  }
  validate_system(cs);
  return cs;
}

}  // namespace infotile
