#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "infotile/rational.hpp"
#include "infotile/varset.hpp"

namespace infotile {

struct Seed {
  std::string name;
  std::vector<Rational> probs;
  std::vector<double> pd;  // cached doubles
  bool uniform = false;
};

// Deterministic map from the product of referenced seeds to a value.
// Table is mixed radix over `seeds` (in the listed order), last seed fastest.
struct JointVar {
  VarId name;
  std::vector<uint32_t> seeds;
  std::vector<uint32_t> table;
  uint32_t range = 1;  // max value + 1
};

class FactoredJoint {
 public:
  uint32_t add_seed(const std::string& name, std::vector<Rational> probs);
  uint32_t add_uniform_seed(const std::string& name, uint32_t size);
  // Adds (or replaces nothing: throws on duplicate) a variable.
  void add_var(VarId name, std::vector<uint32_t> seeds, std::vector<uint32_t> table);

  const std::vector<Seed>& seeds() const { return seeds_; }
  const std::vector<JointVar>& vars() const { return vars_; }
  bool has_var(VarId v) const { return index_.count(v) != 0; }
  const JointVar& var(VarId v) const;  // throws on unknown
  std::optional<uint32_t> find_seed(const std::string& name) const;
  uint64_t product_size(const std::vector<uint32_t>& seeds) const;

  // Expand a var's table index into per-seed digits and back.
  std::vector<uint32_t> digits(const JointVar& v, uint64_t index) const;

 private:
  std::vector<Seed> seeds_;
  std::vector<JointVar> vars_;
  std::unordered_map<VarId, size_t> index_;
  std::unordered_map<std::string, uint32_t> seed_index_;
};

void write_joint(std::ostream& os, const FactoredJoint& j);
FactoredJoint read_joint(std::istream& is);
FactoredJoint read_joint_file(const std::string& path);
void write_joint_file(const std::string& path, const FactoredJoint& j);

}  // namespace infotile
