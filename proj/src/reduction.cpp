#include "infotile/reduction.hpp"

#include <set>
#include <stdexcept>

namespace infotile {

Compiled compile_ttori_logged(const TileSet& ts) {
  Compiled out;
  SystemSink sink(out.cs);
  Builder b(sink);
  out.k = b.ttori(ts);
  out.instances = b.instances();
  out.cs.manifest = Manifest{out.k, b.counts()};
  validate_system(out.cs);
  return out;
}

ConstraintSystem compile_ttori(const TileSet& ts) {
  ConstraintSystem cs;
  SystemSink sink(cs);
  Builder b(sink, "", false);
  long k = b.ttori(ts);
  cs.manifest = Manifest{k, b.counts()};
  return cs;
}

SparseAffineSystem flatten(const ConstraintSystem& cs) {
  validate_system(cs);
  SparseAffineSystem out;
  out.vars = cs.all_vars();
  for (auto& r : cs.rows)
    for (auto& g : to_ge_form(r)) out.rows.push_back(std::move(g));
  return out;
}

SparseAffineSystem slackify(const SparseAffineSystem& sas, std::vector<VarId>* slacks) {
  validate_sparse(sas);
  std::set<VarId> taken(sas.vars.begin(), sas.vars.end());
  SparseAffineSystem out;
  out.vars = sas.vars;
  if (slacks) slacks->clear();
  for (size_t j = 0; j < sas.rows.size(); ++j) {
    const auto& r = sas.rows[j];
    if (r.rel != Rel::GE) throw std::invalid_argument("slackify needs >= rows; flatten first");
    VarId v("V" + std::to_string(j + 1));
    for (int i = 1; taken.count(v); ++i) v = VarId("V" + std::to_string(j + 1) + "~" + std::to_string(i));
    taken.insert(v);
    out.vars.push_back(v);
    if (slacks) slacks->push_back(v);
    AffineConstraint e = r;
    e.rel = Rel::EQ;
    e.lhs.add(VarSet{v}, -1);
    out.rows.push_back(std::move(e));
  }
  return out;
}

void validate_sparse(const SparseAffineSystem& sas) {
  std::set<VarId> vs;
  for (auto v : sas.vars)
    if (!vs.insert(v).second) throw std::invalid_argument("duplicate variable '" + v.name() + "'");
  for (size_t i = 0; i < sas.rows.size(); ++i)
    for (auto& [s, c] : sas.rows[i].lhs.terms())
      for (auto v : s)
        if (!vs.count(v)) throw std::invalid_argument("row " + std::to_string(i) + " uses undeclared '" + v.name() + "'");
}

json sparse_json(const SparseAffineSystem& sas) {
  std::vector<std::string> names;
  for (auto v : sas.vars) names.push_back(v.name());
  json rows = json::array();
  for (auto& r : sas.rows)
    rows.push_back({{"entries", expr_json(r.lhs)}, {"rel", rel_str(r.rel)}, {"rhs", rational_json(r.rhs)}, {"tag", r.tag}});
  return {{"vars", names}, {"rows", rows}};
}

SparseAffineSystem sparse_from_json(const json& j) {
  SparseAffineSystem s;
  try {
    for (auto& n : j.at("vars")) s.vars.emplace_back(n.get<std::string>());
    for (auto& r : j.at("rows"))
      s.rows.push_back({expr_from_json(r.at("entries")), parse_rel(r.at("rel").get<std::string>()),
                        rational_from_json(r.at("rhs")), r.value("tag", "")});
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed sparse system: ") + e.what());
  }
  validate_sparse(s);
  return s;
}

}  // namespace infotile
