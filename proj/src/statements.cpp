#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "infotile/reduction.hpp"

namespace infotile {

StatementForm parse_form(const std::string& s) {
  if (s == "cond-affine") return StatementForm::COND_AFFINE;
  if (s == "affine-subspace") return StatementForm::AFFINE_SUBSPACE;
  if (s == "boolean") return StatementForm::BOOLEAN;
  throw std::invalid_argument("unknown form '" + s + "' (cond-affine, affine-subspace, boolean)");
}

std::string form_str(StatementForm f) {
  switch (f) {
    case StatementForm::COND_AFFINE: return "cond-affine";
    case StatementForm::AFFINE_SUBSPACE: return "affine-subspace";
    case StatementForm::BOOLEAN: return "boolean";
  }
  return "";
}

std::vector<SourceRow> source_rows(const CISystem& ci) {
  std::vector<SourceRow> rows;
  rows.reserve(ci.relations.size() + 1);
  for (size_t i = 0; i < ci.relations.size(); ++i) {
    auto& r = ci.relations[i];
    rows.push_back({"rel:" + std::to_string(i), ci_expr(r.a, r.b, r.c), Rel::EQ, Rational(0)});
  }
  if (ci.binary_var && !ci.card_bound)
    rows.push_back({"role", InfoExpr::entropy(VarSet{*ci.binary_var}), Rel::EQ, Rational(1)});
  return rows;
}

std::vector<SourceRow> source_rows(const SparseAffineSystem& sas) {
  std::vector<SourceRow> rows;
  rows.reserve(sas.rows.size());
  for (size_t i = 0; i < sas.rows.size(); ++i)
    rows.push_back({"row:" + std::to_string(i), sas.rows[i].lhs, sas.rows[i].rel, sas.rows[i].rhs});
  return rows;
}

namespace {

bool is_role_row(const SourceRow& r, VarId role) {
  const auto& t = r.expr.terms();
  return t.size() == 1 && t.begin()->first == VarSet{role};
}

// Multiplier turning the row into "I(A;B|C) <= 0" for a CI expression I,
// or nullopt when the row is not a CI constraint.
std::optional<Rational> ci_multiplier(const SourceRow& r) {
  if (r.rhs != 0) return std::nullopt;
  auto as_ci = [](const InfoExpr& e) { return recognize_ci({e, Rel::EQ, Rational(0), ""}); };
  if (r.rel != Rel::GE && as_ci(r.expr)) return Rational(1);
  if (r.rel != Rel::LE) {
    InfoExpr neg = r.expr;
    neg *= -1;
    if (as_ci(neg)) return Rational(-1);
  }
  return std::nullopt;
}

}  // namespace

Statement emit_statement(const std::vector<SourceRow>& rows, const std::vector<VarId>& vars, std::optional<VarId> role,
                         StatementForm form) {
  Statement st;
  st.form = form;
  st.vars = vars;
  if (form == StatementForm::BOOLEAN) {
    if (role) st.role = *role;
    for (auto& r : rows) {
      // a^T v <= b negates to a^T v > b; >= rows flip sign first.
      if (r.rel != Rel::GE) st.disjuncts.push_back({r.expr, r.rhs, r.id, Rational(1)});
      if (r.rel != Rel::LE) {
        InfoExpr neg = r.expr;
        neg *= -1;
        st.disjuncts.push_back({std::move(neg), -r.rhs, r.id, Rational(-1)});
      }
    }
    return st;
  }
  if (!role) throw std::invalid_argument("statement form needs the designated role variable");
  st.role = *role;
  if (st.vars.empty() || st.vars[0] != *role) {
    std::vector<VarId> v{*role};
    for (auto x : vars)
      if (x != *role) v.push_back(x);
    st.vars = std::move(v);
  }
  for (auto& r : rows) {
    if (is_role_row(r, *role)) continue;
    auto m = ci_multiplier(r);
    if (!m) throw std::invalid_argument("source row " + r.id + " is not a CI constraint");
    for (auto& [s, c] : r.expr.terms()) {
      Rational contrib = *m * c;
      st.a.add(s, contrib);
      st.audit[s].emplace_back(r.id, contrib);
    }
  }
  return st;
}

Statement emit_form(const CISystem& ci, StatementForm form) {
  if (!ci.binary_var || ci.card_bound) throw std::invalid_argument("missing Bern(1/2) designated variable");
  return emit_statement(source_rows(ci), ci.vars, ci.binary_var, form);
}

Statement emit_form(const SparseAffineSystem& sas, StatementForm form, std::optional<VarId> role) {
  if (role && std::find(sas.vars.begin(), sas.vars.end(), *role) == sas.vars.end())
    throw std::invalid_argument("role variable '" + role->name() + "' not in the system");
  return emit_statement(source_rows(sas), sas.vars, role, form);
}

std::optional<std::string> check_audit(const Statement& st, const std::vector<SourceRow>& rows) {
  std::unordered_map<std::string, const SourceRow*> by_id;
  for (auto& r : rows) by_id[r.id] = &r;
  if (st.form == StatementForm::BOOLEAN) {
    size_t expected = 0;
    for (auto& r : rows) expected += r.rel == Rel::EQ ? 2 : 1;
    if (expected != st.disjuncts.size()) return "disjunct count does not match the source rows";
    for (auto& d : st.disjuncts) {
      auto it = by_id.find(d.source);
      if (it == by_id.end()) return "disjunct traces to unknown row " + d.source;
      InfoExpr e = it->second->expr;
      e *= d.sign;
      if (!(e == d.a) || d.b != d.sign * it->second->rhs) return "disjunct does not match row " + d.source;
    }
    return std::nullopt;
  }
  // every coefficient is the sum of its traces
  for (auto& [s, c] : st.a.terms())
    if (!st.audit.count(s)) return "coefficient of " + s.str() + " has no trace";
  std::unordered_map<std::string, Rational> mult;
  for (auto& [s, srcs] : st.audit) {
    Rational sum = 0;
    for (auto& [id, c] : srcs) {
      auto it = by_id.find(id);
      if (it == by_id.end()) return "trace to unknown row " + id;
      Rational rc = it->second->expr.coef(s);
      if (rc == 0) return "row " + id + " has no term " + s.str();
      Rational m = c / rc;
      auto [mi, fresh] = mult.emplace(id, m);
      if (!fresh && mi->second != m) return "row " + id + " used with two multipliers";
      sum += c;
    }
    if (sum != st.a.coef(s)) return "coefficient of " + s.str() + " is not the sum of its traces";
  }
  // each used row contributes all of its terms
  std::unordered_map<std::string, size_t> seen;
  for (auto& [s, srcs] : st.audit)
    for (auto& [id, c] : srcs) ++seen[id];
  for (auto& [id, n] : seen)
    if (n != by_id[id]->expr.size()) return "row " + id + " is only partly traced";
  for (auto& r : rows) {
    if (seen.count(r.id) || is_role_row(r, st.role)) continue;
    return "row " + r.id + " is not used";
  }
  return std::nullopt;
}

json statement_json(const Statement& st) {
  std::vector<std::string> names;
  for (auto v : st.vars) names.push_back(v.name());
  json out = {{"form", form_str(st.form)}, {"vars", names}};
  if (st.form == StatementForm::BOOLEAN) {
    json ds = json::array();
    for (auto& d : st.disjuncts)
      ds.push_back({{"a", expr_json(d.a)}, {"b", rational_json(d.b)}, {"source", d.source}, {"sign", rational_json(d.sign)}});
    out["disjuncts"] = std::move(ds);
    return out;
  }
  out["role"] = st.role.name();
  out["a"] = expr_json(st.a);
  json audit = json::array();
  for (auto& [s, srcs] : st.audit) {
    json src = json::array();
    for (auto& [id, c] : srcs) src.push_back({id, rational_json(c)});
    audit.push_back({{"set", varset_json(s)}, {"sources", std::move(src)}});
  }
  out["audit"] = std::move(audit);
  return out;
}

Statement statement_from_json(const json& j) {
  Statement st;
  st.form = parse_form(j.at("form").get<std::string>());
  for (auto& v : j.at("vars")) st.vars.emplace_back(v.get<std::string>());
  if (st.form == StatementForm::BOOLEAN) {
    if (!st.vars.empty()) st.role = st.vars[0];
    for (auto& d : j.at("disjuncts"))
      st.disjuncts.push_back({expr_from_json(d.at("a")), rational_from_json(d.at("b")), d.at("source").get<std::string>(),
                              rational_from_json(d.at("sign"))});
    return st;
  }
  st.role = VarId(j.at("role").get<std::string>());
  st.a = expr_from_json(j.at("a"));
  for (auto& e : j.at("audit")) {
    auto& srcs = st.audit[varset_from_json(e.at("set"))];
    for (auto& src : e.at("sources")) srcs.emplace_back(src.at(0).get<std::string>(), rational_from_json(src.at(1)));
  }
  return st;
}

// Same bytes as write_json_doc(statement_json(st)) without building the DOM.
void write_statement(std::ostream& os, const Statement& st) {
  std::vector<std::string> names;
  for (auto v : st.vars) names.push_back(v.name());
  auto array = [&](const char* key, size_t n, auto&& item) {
    os << json(key).dump() << ":";
    if (n == 0) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (size_t i = 0; i < n; ++i) os << item(i).dump() << (i + 1 < n ? ",\n" : "\n");
    os << "]";
  };
  os << "{\n";
  if (st.form == StatementForm::BOOLEAN) {
    array("disjuncts", st.disjuncts.size(), [&](size_t i) {
      auto& d = st.disjuncts[i];
      return json{{"a", expr_json(d.a)}, {"b", rational_json(d.b)}, {"source", d.source}, {"sign", rational_json(d.sign)}};
    });
    os << ",\n" << json("form").dump() << ":" << json(form_str(st.form)).dump() << ",\n";
  } else {
    json a = expr_json(st.a);
    array("a", a.size(), [&](size_t i) { return a[i]; });
    os << ",\n";
    std::vector<const std::pair<const VarSet, std::vector<std::pair<std::string, Rational>>>*> entries;
    for (auto& e : st.audit) entries.push_back(&e);
    array("audit", entries.size(), [&](size_t i) {
      json src = json::array();
      for (auto& [id, c] : entries[i]->second) src.push_back({id, rational_json(c)});
      return json{{"set", varset_json(entries[i]->first)}, {"sources", std::move(src)}};
    });
    os << ",\n" << json("form").dump() << ":" << json(form_str(st.form)).dump() << ",\n";
    os << json("role").dump() << ":" << json(st.role.name()).dump() << ",\n";
  }
  array("vars", names.size(), [&](size_t i) { return json(names[i]); });
  os << "\n}\n";
}

std::string statement_text(const Statement& st) {
  std::ostringstream os;
  std::string v1 = "H(" + st.role.name() + ")";
  switch (st.form) {
    case StatementForm::COND_AFFINE:
      os << "for all v in the entropic region over " << st.vars.size() << " variables:\n"
         << "  a.v <= 0 and " << v1 << " <= 1  implies  " << v1 << " = 0\n"
         << "where a.v = " << st.a.str() << "\n";
      break;
    case StatementForm::AFFINE_SUBSPACE:
      os << "exists v in the entropic region over " << st.vars.size() << " variables:\n"
         << "  a.v = 0 and " << v1 << " = 1\n"
         << "where a.v = " << st.a.str() << "\n";
      break;
    case StatementForm::BOOLEAN:
      os << "for all v in the entropic region over " << st.vars.size() << " variables, at least one of:\n";
      for (auto& d : st.disjuncts) os << "  " << d.a.str() << " > " << to_string(d.b) << "   [" << d.source << "]\n";
      break;
  }
  return os.str();
}

}  // namespace infotile
