#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infotile/json_io.hpp"

namespace infotile {

struct Manifest {
  long k = 0;
  std::map<std::string, long> instances;
};

struct ConstraintSystem {
  std::vector<VarId> free_vars;
  std::vector<VarId> exists;
  std::vector<AffineConstraint> rows;
  std::optional<Manifest> manifest;

  std::vector<VarId> all_vars() const;  // free then existential
};

void validate_system(const ConstraintSystem& cs);  // throws std::invalid_argument

ConstraintSystem conjoin(const ConstraintSystem& p, const ConstraintSystem& q);
ConstraintSystem exists_extend(const ConstraintSystem& p, const std::vector<VarId>& new_vars,
                               const std::vector<AffineConstraint>& extra);
ConstraintSystem rename_vars(const ConstraintSystem& cs, const std::map<VarId, VarId>& m);

// Shape of a row as seen by the lint: a CI equality, or one side of the
// cardinality window alpha_k <= H(X) <= alpha_{k+1}.
enum class RowShape { CI, LOWER_BOUND, UPPER_BOUND, OTHER };
struct RowClass {
  RowShape shape = RowShape::OTHER;
  std::optional<CITriple> ci;
  VarId var;
  long k = 0;  // cardinality the bound belongs to
};
RowClass classify_row(const AffineConstraint& row);

struct LintIssue {
  size_t row;
  std::string tag;
  std::string reason;
};
std::vector<LintIssue> lint(const ConstraintSystem& cs);

json system_json(const ConstraintSystem& cs);
ConstraintSystem system_from_json(const json& j);
json manifest_json(const Manifest& m);

}  // namespace infotile
