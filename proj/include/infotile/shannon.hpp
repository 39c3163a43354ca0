#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infotile/reduction.hpp"

namespace infotile {

constexpr size_t kMaxShannonVars = 10;

struct Elemental {
  enum Kind { COND_ENTROPY, COND_MI } kind = COND_ENTROPY;
  int i = 0, j = -1;     // positions in the variable list
  std::vector<int> K;    // conditioning positions (COND_MI only)
  InfoExpr expr;         // expr >= 0
  std::string str() const;
};

// H(X_i | rest) >= 0 for each i, then I(X_i;X_j|X_K) >= 0 for i < j and K
// ranging over subsets of the rest in increasing bitmask order.
std::vector<Elemental> elemental_inequalities(const std::vector<VarId>& vars);
std::vector<Elemental> elemental_inequalities(int n);  // over X1..Xn
size_t elemental_count(int n);

struct LPOutcome {
  enum Status { REFUTED, UNKNOWN } status = UNKNOWN;
  std::vector<VarId> vars;  // variables the LP ran over
  size_t rows_dropped = 0;
  // row id -> positive multiplier; ids are "sys:{i}:ge", "sys:{i}:le", "elem:{i}"
  std::vector<std::pair<std::string, Rational>> multipliers;
};

// Restriction keeps rows whose variables all lie in `vars`.
LPOutcome refute(const SparseAffineSystem& sas, const std::optional<std::vector<VarId>>& vars = std::nullopt);

// Recomputes the combination exactly. Returns a description of the first
// mismatch, or nullopt when it collapses to 0 >= c with c > 0.
std::optional<std::string> replay(const SparseAffineSystem& sas, const LPOutcome& out);

std::string status_str(LPOutcome::Status s);
json outcome_json(const LPOutcome& out);
LPOutcome outcome_from_json(const json& j);

}  // namespace infotile
