#pragma once

#include <map>
#include <optional>
#include <string>

#include "infotile/rational.hpp"
#include "infotile/varset.hpp"

namespace infotile {

// Linear combination of joint entropies. H(empty) = 0, so empty sets are
// dropped on insertion.
class InfoExpr {
 public:
  using Terms = std::map<VarSet, Rational>;

  InfoExpr() = default;
  static InfoExpr entropy(const VarSet& s, const Rational& c = 1);

  void add(const VarSet& s, const Rational& c);
  InfoExpr& operator+=(const InfoExpr& o);
  InfoExpr& operator-=(const InfoExpr& o);
  InfoExpr& operator*=(const Rational& c);
  friend InfoExpr operator+(InfoExpr a, const InfoExpr& b) { return a += b; }
  friend InfoExpr operator-(InfoExpr a, const InfoExpr& b) { return a -= b; }
  friend InfoExpr operator*(const Rational& c, InfoExpr a) { return a *= c; }

  const Terms& terms() const { return t_; }
  bool empty() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rational coef(const VarSet& s) const;
  VarSet support() const;  // union of all sets
  std::string str() const;

  friend bool operator==(const InfoExpr&, const InfoExpr&) = default;

 private:
  Terms t_;
};

// I(A;B|C) = H(AC) + H(BC) - H(ABC) - H(C)
InfoExpr ci_expr(const VarSet& a, const VarSet& b, const VarSet& c);

enum class Rel { GE, EQ, LE };
std::string rel_str(Rel r);
Rel parse_rel(const std::string& s);

struct CITriple {
  VarSet a, b, c;
  friend bool operator==(const CITriple&, const CITriple&) = default;
};

struct AffineConstraint {
  InfoExpr lhs;
  Rel rel = Rel::EQ;
  Rational rhs;
  std::string tag;

  bool holds(double value, double tol) const;
  double residual(double value) const { return value - to_double(rhs); }
};

// Split into >= rows (EQ gives two rows).
std::vector<AffineConstraint> to_ge_form(const AffineConstraint& c);

// Try to read a row back as I(A;B|C) = 0 up to positive scaling.
std::optional<CITriple> recognize_ci(const AffineConstraint& c);

}  // namespace infotile
