#include "infotile/shannon.hpp"

#include <map>
#include <stdexcept>

namespace infotile {

namespace {

VarSet set_of(const std::vector<VarId>& vars, uint32_t mask) {
  std::vector<VarId> s;
  for (size_t i = 0; i < vars.size(); ++i)
    if (mask >> i & 1) s.push_back(vars[i]);
  return VarSet(std::move(s));
}

void check_cap(size_t n) {
  if (n < 1 || n > kMaxShannonVars)
    throw std::length_error("Shannon bound needs 1 to " + std::to_string(kMaxShannonVars) + " variables, got " +
                            std::to_string(n));
}

}  // namespace

std::string Elemental::str() const {
  if (kind == COND_ENTROPY) return "H(" + std::to_string(i + 1) + "|rest)";
  std::string s = "I(" + std::to_string(i + 1) + ";" + std::to_string(j + 1) + "|";
  for (size_t q = 0; q < K.size(); ++q) s += (q ? "," : "") + std::to_string(K[q] + 1);
  return s + ")";
}

std::vector<Elemental> elemental_inequalities(const std::vector<VarId>& vars) {
  const size_t n = vars.size();
  check_cap(n);
  const uint32_t all = (1u << n) - 1;
  std::vector<Elemental> out;
  for (size_t i = 0; i < n; ++i) {
    Elemental e;
    e.kind = Elemental::COND_ENTROPY;
    e.i = static_cast<int>(i);
    e.expr = InfoExpr::entropy(set_of(vars, all)) - InfoExpr::entropy(set_of(vars, all & ~(1u << i)));
    out.push_back(std::move(e));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      uint32_t rest = all & ~(1u << i) & ~(1u << j);
      // submasks of rest in increasing order
      for (uint32_t k = 0;; k = (k - rest) & rest) {
        Elemental e;
        e.kind = Elemental::COND_MI;
        e.i = static_cast<int>(i);
        e.j = static_cast<int>(j);
        for (size_t q = 0; q < n; ++q)
          if (k >> q & 1) e.K.push_back(static_cast<int>(q));
        e.expr = ci_expr(VarSet{vars[i]}, VarSet{vars[j]}, set_of(vars, k));
        out.push_back(std::move(e));
        if (k == rest) break;
      }
    }
  return out;
}

std::vector<Elemental> elemental_inequalities(int n) {
  check_cap(n < 0 ? 0 : static_cast<size_t>(n));
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.emplace_back("X" + std::to_string(i));
  return elemental_inequalities(vars);
}

size_t elemental_count(int n) { return n + (n >= 2 ? static_cast<size_t>(n) * (n - 1) / 2 * (1u << (n - 2)) : 0); }

namespace {

struct GeRow {
  std::string id;
  std::map<uint32_t, Rational> a;  // coordinate (mask - 1) -> coefficient
  Rational b;                      // a.h >= b
};

// Coordinates of e over vars, or nullopt when e mentions another variable.
std::optional<std::map<uint32_t, Rational>> coords(const InfoExpr& e, const std::map<VarId, int>& pos) {
  std::map<uint32_t, Rational> out;
  for (auto& [s, c] : e.terms()) {
    uint32_t m = 0;
    for (auto v : s) {
      auto it = pos.find(v);
      if (it == pos.end()) return std::nullopt;
      m |= 1u << it->second;
    }
    out[m - 1] += c;
  }
  std::erase_if(out, [](auto& kv) { return kv.second == 0; });
  return out;
}

struct Assembled {
  std::vector<VarId> vars;
  std::vector<GeRow> rows;
  size_t dropped = 0;
};

Assembled assemble(const SparseAffineSystem& sas, const std::optional<std::vector<VarId>>& restrict) {
  Assembled as;
  if (restrict) {
    as.vars = *restrict;
  } else {
    as.vars = sas.vars;
    if (as.vars.empty()) {
      VarSet all;
      for (auto& r : sas.rows) all = all | r.lhs.support();
      as.vars = all.items();
    }
  }
  check_cap(as.vars.size());
  std::map<VarId, int> pos;
  for (size_t i = 0; i < as.vars.size(); ++i)
    if (!pos.emplace(as.vars[i], static_cast<int>(i)).second)
      throw std::invalid_argument("variable '" + as.vars[i].name() + "' listed twice");
  for (size_t i = 0; i < sas.rows.size(); ++i) {
    const auto& r = sas.rows[i];
    auto a = coords(r.lhs, pos);
    if (!a) {
      ++as.dropped;
      continue;
    }
    std::string base = "sys:" + std::to_string(i);
    if (r.rel != Rel::LE) as.rows.push_back({base + ":ge", *a, r.rhs});
    if (r.rel != Rel::GE) {
      GeRow neg{base + ":le", *a, -r.rhs};
      for (auto& [k, c] : neg.a) c = -c;
      as.rows.push_back(std::move(neg));
    }
  }
  auto el = elemental_inequalities(as.vars);
  for (size_t i = 0; i < el.size(); ++i) as.rows.push_back({"elem:" + std::to_string(i), *coords(el[i].expr, pos), 0});
  return as;
}

// Phase I of the dual: y >= 0, sum_r y_r a_r = 0, sum_r y_r b_r = 1.
// Dense tableau, exact, Bland's rule. Returns y when feasible.
std::optional<std::vector<Rational>> farkas(const std::vector<GeRow>& rows, size_t ncoord) {
  const size_t m = ncoord + 1, ny = rows.size(), ncol = ny + m, rhs = ncol;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(ncol + 1));
  for (size_t r = 0; r < ny; ++r) {
    for (auto& [k, c] : rows[r].a) T[k][r] = c;
    T[ncoord][r] = rows[r].b;
  }
  T[ncoord][rhs] = 1;
  for (size_t i = 0; i < m; ++i) T[i][ny + i] = 1;  // artificials; all rhs >= 0 already
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = ny + i;
  std::vector<Rational> d(ncol + 1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t c = 0; c < ny; ++c)
      if (T[i][c] != 0) d[c] -= T[i][c];
    d[rhs] -= T[i][rhs];
  }
  for (;;) {
    size_t enter = ncol;
    for (size_t c = 0; c < ncol; ++c)
      if (d[c] < 0) {
        enter = c;
        break;
      }
    if (enter == ncol) break;
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase I objective unbounded");
    auto& prow = T[leave];
    Rational piv = prow[enter];
    std::vector<size_t> nz;
    for (size_t c = 0; c <= ncol; ++c)
      if (prow[c] != 0) {
        prow[c] /= piv;
        nz.push_back(c);
      }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[enter] == 0) return;
      Rational f = row[enter];
      for (size_t c : nz) row[c] -= f * prow[c];
    };
    for (size_t i = 0; i < m; ++i)
      if (i != leave) eliminate(T[i]);
    eliminate(d);
    basis[leave] = enter;
  }
  if (d[rhs] != 0) return std::nullopt;
  std::vector<Rational> y(ny);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < ny) y[basis[i]] = T[i][rhs];
  return y;
}

}  // namespace

LPOutcome refute(const SparseAffineSystem& sas, const std::optional<std::vector<VarId>>& vars) {
  Assembled as = assemble(sas, vars);
  LPOutcome out;
  out.vars = as.vars;
  out.rows_dropped = as.dropped;
  size_t ncoord = (size_t{1} << as.vars.size()) - 1;
  auto y = farkas(as.rows, ncoord);
  if (!y) return out;
  out.status = LPOutcome::REFUTED;
  for (size_t r = 0; r < y->size(); ++r)
    if ((*y)[r] != 0) out.multipliers.emplace_back(as.rows[r].id, (*y)[r]);
  return out;
}

std::optional<std::string> replay(const SparseAffineSystem& sas, const LPOutcome& out) {
  if (out.status != LPOutcome::REFUTED) return "outcome is not a refutation";
  Assembled as = assemble(sas, out.vars);
  std::map<std::string, const GeRow*> by_id;
  for (auto& r : as.rows) by_id[r.id] = &r;
  std::map<uint32_t, Rational> sum;
  Rational b = 0;
  for (auto& [id, y] : out.multipliers) {
    auto it = by_id.find(id);
    if (it == by_id.end()) return "unknown row id '" + id + "'";
    if (y <= 0) return "multiplier of '" + id + "' is not positive";
    for (auto& [k, c] : it->second->a) sum[k] += y * c;
    b += y * it->second->b;
  }
  for (auto& [k, c] : sum)
    if (c != 0) return "combined coefficient of coordinate " + set_of(out.vars, k + 1).str() + " is " + to_string(c);
  if (b <= 0) return "combined right-hand side " + to_string(b) + " is not positive";
  return std::nullopt;
}

std::string status_str(LPOutcome::Status s) { return s == LPOutcome::REFUTED ? "REFUTED" : "UNKNOWN"; }

json outcome_json(const LPOutcome& out) {
  json j;
  j["status"] = status_str(out.status);
  json vs = json::array();
  for (auto v : out.vars) vs.push_back(v.name());
  j["vars"] = vs;
  j["rows_dropped"] = out.rows_dropped;
  if (out.status == LPOutcome::REFUTED) {
    json m = json::array();
    for (auto& [id, y] : out.multipliers) m.push_back({id, to_string(y)});
    j["certificate"] = {{"multipliers", m}};
  }
  return j;
}

LPOutcome outcome_from_json(const json& j) {
  LPOutcome out;
  std::string s = j.at("status").get<std::string>();
  if (s == "REFUTED") out.status = LPOutcome::REFUTED;
  else if (s != "UNKNOWN") throw std::invalid_argument("unknown status '" + s + "'");
  for (auto& v : j.at("vars")) out.vars.emplace_back(v.get<std::string>());
  out.rows_dropped = j.value("rows_dropped", size_t{0});
  if (j.contains("certificate"))
    for (auto& m : j.at("certificate").at("multipliers"))
      out.multipliers.emplace_back(m.at(0).get<std::string>(), parse_rational(m.at(1).get<std::string>()));
  return out;
}

}  // namespace infotile
