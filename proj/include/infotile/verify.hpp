#pragma once

#include <string>
#include <vector>

#include "infotile/entropy.hpp"
#include "infotile/system.hpp"

namespace infotile {

constexpr double kUnitTolerance = 1e-9;
constexpr double kEndToEndTolerance = 1e-6;

struct RowResult {
  std::string tag;
  double lhs = 0;
  Rel rel = Rel::EQ;
  Rational rhs;
  double residual = 0;  // lhs - rhs
  bool pass = true;
  uint64_t atoms = 0;   // atoms enumerated for this row
};

struct VerificationReport {
  std::vector<RowResult> rows;
  double max_violation = 0;
  size_t failures = 0;
  uint64_t max_row_atoms = 0;
  uint64_t total_atoms = 0;
  bool ok() const { return failures == 0; }
};

VerificationReport verify_rows(const FactoredJoint& j, const std::vector<AffineConstraint>& rows, double tol,
                               int jobs = 1);
VerificationReport verify(const FactoredJoint& j, const ConstraintSystem& cs, double tol, int jobs = 1);

// Entropy of each distinct set, evaluated once; parallel over sets.
std::vector<double> row_values(const FactoredJoint& j, const std::vector<AffineConstraint>& rows, int jobs,
                               std::vector<uint64_t>* atoms = nullptr);

json report_json(const VerificationReport& r);

}  // namespace infotile
