#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infotile/ci_rewriter.hpp"
#include "infotile/gadgets.hpp"

namespace infotile {

struct Compiled {
  ConstraintSystem cs;
  std::vector<GadgetInstance> instances;  // pre-order
  long k = 0;
};

Compiled compile_ttori_logged(const TileSet& ts);
ConstraintSystem compile_ttori(const TileSet& ts);

// Flattened (A, b). Rows keep their relation; flatten only ever emits >=.
struct SparseAffineSystem {
  std::vector<VarId> vars;
  std::vector<AffineConstraint> rows;
};

SparseAffineSystem flatten(const ConstraintSystem& cs);
// Row j: lhs - H(V_j) = rhs. Returns the slack names in row order via `slacks`.
SparseAffineSystem slackify(const SparseAffineSystem& sas, std::vector<VarId>* slacks = nullptr);

void validate_sparse(const SparseAffineSystem& sas);
json sparse_json(const SparseAffineSystem& sas);
SparseAffineSystem sparse_from_json(const json& j);

// ---- statement forms ----

enum class StatementForm { COND_AFFINE, AFFINE_SUBSPACE, BOOLEAN };
StatementForm parse_form(const std::string& s);
std::string form_str(StatementForm f);

// One source row of the statement: expr rel rhs, with a stable id.
struct SourceRow {
  std::string id;
  InfoExpr expr;
  Rel rel;
  Rational rhs;
};

struct Statement {
  StatementForm form;
  std::vector<VarId> vars;  // role variable first
  VarId role;
  // COND_AFFINE / AFFINE_SUBSPACE: the aggregated vector a.
  InfoExpr a;
  // BOOLEAN: disjuncts a_i^T v > b_i.
  struct Disjunct {
    InfoExpr a;
    Rational b;
    std::string source;
    Rational sign;  // disjunct = sign * source expr
  };
  std::vector<Disjunct> disjuncts;
  // set -> contributing (source id, coefficient)
  std::map<VarSet, std::vector<std::pair<std::string, Rational>>> audit;
};

std::vector<SourceRow> source_rows(const CISystem& ci);
std::vector<SourceRow> source_rows(const SparseAffineSystem& sas);

Statement emit_statement(const std::vector<SourceRow>& rows, const std::vector<VarId>& vars, std::optional<VarId> role,
                         StatementForm form);
Statement emit_form(const CISystem& ci, StatementForm form);
Statement emit_form(const SparseAffineSystem& sas, StatementForm form, std::optional<VarId> role);

// Every emitted coefficient equals the sum of its traced contributions, and
// every contribution matches the named source row. Returns the first problem.
std::optional<std::string> check_audit(const Statement& st, const std::vector<SourceRow>& rows);

json statement_json(const Statement& st);
Statement statement_from_json(const json& j);
void write_statement(std::ostream& os, const Statement& st);
std::string statement_text(const Statement& st);

}  // namespace infotile
