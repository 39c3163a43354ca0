#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "infotile/info_expr.hpp"
#include "infotile/joint.hpp"

namespace infotile {

struct EvalStats {
  uint64_t atoms = 0;      // atoms enumerated in total
  uint64_t max_atoms = 0;  // largest single marginalization
  void record(uint64_t n) {
    atoms += n;
    if (n > max_atoms) max_atoms = n;
  }
};

// Odometer over the product of the seeds referenced by a list of variables.
// Only those seeds are enumerated (lazy marginalization).
class AtomWalker {
 public:
  AtomWalker(const FactoredJoint& j, const std::vector<VarId>& vars);

  uint64_t size() const { return size_; }
  const std::vector<uint32_t>& seeds() const { return seeds_; }
  void reset();
  bool valid() const { return valid_; }
  void next();

  uint32_t value(size_t var_pos) const { return tables_[var_pos][offset_[var_pos]]; }
  uint32_t digit(size_t seed_pos) const { return digit_[seed_pos]; }
  double prob() const { return prefix_.empty() ? 1.0 : prefix_.back(); }
  Rational exact_prob() const;
  uint64_t index() const { return index_; }  // mixed radix over seeds(), last fastest

 private:
  const FactoredJoint& j_;
  std::vector<uint32_t> seeds_;
  std::vector<uint32_t> radix_;
  std::vector<const uint32_t*> tables_;
  std::vector<std::vector<uint64_t>> stride_;  // [seed_pos][var_pos]
  std::vector<uint64_t> offset_;
  std::vector<uint32_t> digit_;
  std::vector<double> prefix_;
  uint64_t size_ = 1, index_ = 0;
  bool valid_ = false;
  void refresh_prefix(size_t from);
};

double subset_entropy(const FactoredJoint& j, const VarSet& vars, EvalStats* stats = nullptr);
double eval_expression(const FactoredJoint& j, const InfoExpr& e, EvalStats* stats = nullptr);

struct EntropyVector {
  std::vector<VarId> vars;
  std::vector<double> h;  // h[mask - 1], bit i <-> vars[i]
  double at(uint32_t mask) const { return mask ? h[mask - 1] : 0.0; }
};

EntropyVector entropic_vector(const FactoredJoint& j, const std::vector<VarId>& vars, size_t limit = 16);

double binary_entropy(double p);

using ExactPmf = std::map<std::vector<uint32_t>, Rational>;
// Exact marginal of the listed variables (value tuples in list order).
ExactPmf exact_marginal(const FactoredJoint& j, const std::vector<VarId>& vars);

}  // namespace infotile
