#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infotile/joint.hpp"
#include "infotile/system.hpp"

namespace infotile {

// Pure conditional-independence system: every relation means I(A;B|C) = 0.
struct CISystem {
  std::vector<VarId> vars;  // designated variable first
  std::vector<CITriple> relations;
  std::optional<VarId> binary_var;  // Bern(1/2), or card <= card_bound when set
  std::optional<long> card_bound;
  std::optional<CITriple> target;
  json audit;  // null unless a rewrite recorded steps

  size_t n() const { return vars.size(); }
  size_t size() const;  // n + total set entries over relations and target
};

bool is_disjoint(const CITriple& t);
bool all_disjoint(const CISystem& ci);
void validate_ci(const CISystem& ci);  // throws on undeclared variables
// I(a;b|c) = 0 rows, tagged rel:{i}
std::vector<AffineConstraint> ci_rows(const CISystem& ci);

CISystem to_ci_only(const ConstraintSystem& cs);
CISystem to_cardinality_implication(const CISystem& ci, long r);

// Growth bound asserted on every disjointify call: size(out) <= c * size(in)^2.
constexpr long kDisjointifySizeFactor = 144;
CISystem disjointify(const CISystem& ci);
// Refuses instances whose saturation rows alone would exceed this many set entries.
constexpr double kBinaryImplicationMaxEntries = 5e8;
CISystem binary_implication_instance(const CISystem& ci, long r);

// Y_i = Z_i = X_i on all three copies and U1 = U2 = X_i for each EQRES.
FactoredJoint canonical_disjoint_extension(const FactoredJoint& j, const CISystem& in, const CISystem& out);

double eval_relation(const FactoredJoint& j, const CITriple& t);

json ci_triple_json(const CITriple& t);
CITriple ci_triple_from_json(const json& j);
json ci_system_json(const CISystem& ci);
CISystem ci_system_from_json(const json& j);

}  // namespace infotile
