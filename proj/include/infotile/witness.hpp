#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "infotile/gadgets.hpp"
#include "infotile/joint.hpp"
#include "infotile/reduction.hpp"
#include "infotile/tiling.hpp"

namespace infotile {

// Raised when a gadget cannot be witnessed on the given joint; the message
// carries the exact reason (e.g. a conditional law no uniform helper realizes).
class WitnessRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColoredTorus {
  int side = 0;  // 2l
  int sign = 1;
  std::vector<int> color;  // [h * side + v], signed vertex colors
  int at(int h, int v) const;
};

// Vertex group from the parity of (h, v): (e,e)=4, (e,o)=1, (o,e)=3, (o,o)=2.
int vertex_group(int h, int v);
int color_group(int c);  // |c| mod 4 in [4]

std::pair<ColoredTorus, ColoredTorus> tiling_to_colored_tori(const TileSet& ts, const PeriodicTiling& til, long k);
// Returns the first violated invariant, if any.
std::optional<std::string> check_colored_tori(const TileSet& ts, const ColoredTorus& pos, const ColoredTorus& neg,
                                              long k);

// Replays the instance log in order and defines every local of every
// instance. The TTORI root needs the colored tori.
void extend_witness(FactoredJoint& j, const std::vector<GadgetInstance>& log,
                    const std::pair<ColoredTorus, ColoredTorus>* tori = nullptr);

FactoredJoint build_witness(const TileSet& ts, const PeriodicTiling& til);

struct UnitWitness {
  ConstraintSystem cs;
  std::vector<GadgetInstance> log;
  FactoredJoint joint;
};
// Instantiate g on actuals already defined in `base`, then witness its locals.
UnitWitness unit_witness(const GadgetRef& g, const std::vector<VarId>& actuals, const FactoredJoint& base);

// Adds V_j with H(V_j) = values[j]: constant, uniform, or a two-level law.
void add_slack_vars(FactoredJoint& j, const std::vector<VarId>& slacks, const std::vector<double>& values,
                    double tol);
// Rows of the form lhs - H(V) = rhs whose V is missing from j get V with
// H(V) = value(lhs + H(V)) - rhs.
std::vector<VarId> realize_slacks(FactoredJoint& j, const SparseAffineSystem& sas, double tol, int jobs = 1);

// Law with n = ceil(2^h) atoms: first mass q, the rest equal.
std::vector<Rational> slack_distribution(double h);

}  // namespace infotile
