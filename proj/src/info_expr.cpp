#include "infotile/info_expr.hpp"

#include <stdexcept>
#include <vector>

namespace infotile {

InfoExpr InfoExpr::entropy(const VarSet& s, const Rational& c) {
  InfoExpr e;
  e.add(s, c);
  return e;
}

void InfoExpr::add(const VarSet& s, const Rational& c) {
  if (s.empty() || c == 0) return;
  auto [it, fresh] = t_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

InfoExpr& InfoExpr::operator+=(const InfoExpr& o) {
  if (&o == this) return *this *= 2;
  for (auto& [s, c] : o.t_) add(s, c);
  return *this;
}

InfoExpr& InfoExpr::operator-=(const InfoExpr& o) {
  if (&o == this) {
    t_.clear();
    return *this;
  }
  for (auto& [s, c] : o.t_) add(s, -c);
  return *this;
}

InfoExpr& InfoExpr::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [s, v] : t_) v *= c;
  return *this;
}

Rational InfoExpr::coef(const VarSet& s) const {
  auto it = t_.find(s);
  return it == t_.end() ? Rational(0) : it->second;
}

VarSet InfoExpr::support() const {
  std::vector<VarId> all;
  for (auto& [s, c] : t_) all.insert(all.end(), s.begin(), s.end());
  return VarSet(std::move(all));
}

std::string InfoExpr::str() const {
  std::string out;
  for (auto& [s, c] : t_) {
    std::string cs = to_string(c);
    if (out.empty()) {
      out += (c == 1 ? "" : c == -1 ? "-" : cs + "*");
    } else if (c > 0) {
      out += " + " + (c == 1 ? std::string() : cs + "*");
    } else {
      Rational m = -c;
      out += " - " + (m == 1 ? std::string() : to_string(m) + "*");
    }
    out += "H" + s.str();
  }
  return out.empty() ? "0" : out;
}

InfoExpr ci_expr(const VarSet& a, const VarSet& b, const VarSet& c) {
  InfoExpr e;
  e.add(a | c, 1);
  e.add(b | c, 1);
  e.add(a | b | c, -1);
  e.add(c, -1);
  return e;
}

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::GE: return ">=";
    case Rel::EQ: return "=";
    case Rel::LE: return "<=";
  }
  return "?";
}

Rel parse_rel(const std::string& s) {
  if (s == ">=") return Rel::GE;
  if (s == "=" || s == "==") return Rel::EQ;
  if (s == "<=") return Rel::LE;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

bool AffineConstraint::holds(double value, double tol) const {
  double r = residual(value);
  switch (rel) {
    case Rel::GE: return r >= -tol;
    case Rel::LE: return r <= tol;
    case Rel::EQ: return r <= tol && r >= -tol;
  }
  return false;
}

std::vector<AffineConstraint> to_ge_form(const AffineConstraint& c) {
  std::vector<AffineConstraint> out;
  if (c.rel != Rel::LE) out.push_back({c.lhs, Rel::GE, c.rhs, c.tag});
  if (c.rel != Rel::GE) {
    InfoExpr neg = c.lhs;
    neg *= -1;
    out.push_back({std::move(neg), Rel::GE, -c.rhs, c.tag});
  }
  return out;
}

std::optional<CITriple> recognize_ci(const AffineConstraint& row) {
  if (row.rel != Rel::EQ || row.rhs != 0 || row.lhs.empty()) return std::nullopt;
  const auto& t = row.lhs.terms();
  std::vector<VarSet> pos, neg;
  for (auto& [s, c] : t) (c > 0 ? pos : neg).push_back(s);
  // I(A;B|C) with A,B,C in any overlap pattern: candidate C is empty or one of
  // the negative sets, A and B come from the positive ones.
  std::vector<VarSet> cands{VarSet{}};
  cands.insert(cands.end(), neg.begin(), neg.end());
  std::vector<VarSet> ab = pos;
  if (ab.size() == 1) ab.push_back(ab[0]);
  for (auto& c : cands) {
    for (size_t i = 0; i < ab.size(); ++i) {
      for (size_t j = i; j < ab.size(); ++j) {
        if (i == j && pos.size() != 1) continue;
        if (!c.subset_of(ab[i]) || !c.subset_of(ab[j])) continue;
        InfoExpr e = ci_expr(ab[i], ab[j], c);
        if (e.empty()) continue;
        // positive multiple?
        const auto& et = e.terms();
        if (et.size() != t.size()) continue;
        Rational ratio = t.begin()->second / et.begin()->second;
        if (ratio <= 0) continue;
        InfoExpr scaled = e;
        scaled *= ratio;
        if (scaled == row.lhs) return CITriple{ab[i].minus(c), ab[j].minus(c), c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace infotile
