#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infotile/system.hpp"
#include "infotile/tiling.hpp"

namespace infotile {

// Where rows go. CI rows stay as triples until a sink decides otherwise.
class RowSink {
 public:
  virtual ~RowSink() = default;
  virtual void declare(VarId v) = 0;
  virtual void ci(const VarSet& a, const VarSet& b, const VarSet& c, const std::string& tag) = 0;
  virtual void bound(VarId x, Rel rel, const Rational& rhs, const std::string& tag) = 0;
};

class SystemSink : public RowSink {
 public:
  explicit SystemSink(ConstraintSystem& cs) : cs_(cs) {}
  void declare(VarId v) override { cs_.exists.push_back(v); }
  void ci(const VarSet& a, const VarSet& b, const VarSet& c, const std::string& tag) override;
  void bound(VarId x, Rel rel, const Rational& rhs, const std::string& tag) override;

 private:
  ConstraintSystem& cs_;
};

// Only CI rows allowed; used when rewriting into pure CI systems.
class TripleSink : public RowSink {
 public:
  std::vector<VarId> vars;
  std::vector<CITriple> rels;
  std::vector<std::string> tags;
  bool keep_tags = false;
  void declare(VarId v) override { vars.push_back(v); }
  void ci(const VarSet& a, const VarSet& b, const VarSet& c, const std::string& tag) override;
  void bound(VarId, Rel, const Rational&, const std::string& tag) override;
};

struct GadgetInstance {
  std::string key;      // catalog key, e.g. SAT_LE_1_2
  std::string display;  // e.g. UNIF_4
  std::string path;
  std::vector<VarId> args;
  std::vector<std::pair<std::string, VarId>> locals;
  long k = 0;           // UNIF_K cardinality; SW family switch count; POW exponent
  long a = 0;           // SAT: size of the uniform helper
  size_t e_arity = 0;   // SAT/COLD: leading group variables
  std::vector<int> S, Sbar;  // SAT index sets, 1-based

  VarId local(const std::string& name) const;  // throws when absent
};

// Switch-family argument bundle.
struct SwitchVars {
  std::vector<VarId> W, V, Vb;
  VarId F;
  long k() const { return static_cast<long>(W.size()); }
  std::vector<VarId> flat() const;
};

enum class SatKind { NE_1_2, LE_1_2, LE_3_4 };
long sat_uniform_size(SatKind s);
std::string sat_key(SatKind s);

class Builder {
 public:
  // Top-level instance paths are prefix + running index.
  explicit Builder(RowSink& sink, std::string prefix = "", bool log = true);

  const std::vector<GadgetInstance>& instances() const { return log_; }
  std::map<std::string, long> counts() const;  // by display name

  void triple(VarId y1, VarId y2, VarId y3);
  void unif(VarId x);
  void unif_k(VarId x, long k);
  void cycs(VarId x1, VarId x2);
  void tori(VarId x1, VarId x2, VarId y1, VarId y2);
  void flip(VarId f, VarId g1, VarId g2);
  void sw(const SwitchVars& s);
  void col(const SwitchVars& s);
  void cold(const std::vector<VarId>& x, const SwitchVars& s);
  void sat(SatKind kind, const std::vector<int>& S, const std::vector<int>& Sbar, const std::vector<VarId>& e,
           const SwitchVars& s);
  void ctori(const std::array<VarId, 4>& xy, const SwitchVars& s);
  void otori(const std::array<VarId, 4>& xy, const SwitchVars& s);
  // Everything existential; returns k.
  long ttori(const TileSet& ts);

  void unif_eq(VarId y, VarId z);
  void prod(const std::vector<VarId>& ys, VarId g);
  void pow(VarId y, long k, VarId g);
  void gesqrt(VarId y, VarId g);
  void le(VarId y, VarId z);
  void unif_k_ci(VarId y, long k, VarId anchor);
  void unif_le2_le3(VarId y);
  void res3(VarId y1, VarId y2, VarId y3);
  void eq(VarId f, VarId g);
  void eqres(VarId y1, VarId z1, VarId y2, VarId z2);

  void set_next_index(int i) { top_ = i; }

 private:
  struct Frame {
    size_t inst;  // index into log_, or npos when not logging
    std::string display, path;
    int children = 0;
  };
  RowSink& sink_;
  std::string prefix_;
  bool logging_;
  int top_ = 0;
  std::vector<Frame> stack_;
  std::vector<GadgetInstance> log_;
  std::map<std::string, long> counts_;

  GadgetInstance& enter(const std::string& key, const std::string& display, std::vector<VarId> args);
  void leave();
  GadgetInstance* cur();
  VarId local(const std::string& name);
  std::string tag() const;
  void ci(const VarSet& a, const VarSet& b, const VarSet& c);
  void fn(const VarSet& x, const VarSet& given) { ci(x, x, given); }  // H(x|given) = 0
  void ind(const VarSet& a, const VarSet& b) { ci(a, b, {}); }
  GadgetInstance scratch_;
};

// Set of switch indices: colors of T_k encoded as w vectors (bit i-1 = w_i).
bool in_Tk(unsigned long w, long k);
// Number of w outside T_k that COL constrains.
long col_row_count(long k);
constexpr long kMaxSwitches = 13;

// k = 4 * max(t, 2) + 1
long ttori_k(const TileSet& ts);

struct GadgetRef {
  std::string name;
  long k = 0;                // UNIF_K, SW family, POW exponent, UNIF_K_CI
  long l = 0;                // PROD factor count
  size_t e = 0;              // SAT/COLD group arity
  std::vector<int> S, Sbar;  // SAT
  std::optional<TileSet> tiles;  // TTORI
};

std::vector<std::string> catalog_keys();
// Arity for the given parameters; throws std::invalid_argument on bad parameters.
size_t gadget_arity(const GadgetRef& g);
ConstraintSystem instantiate_gadget(const GadgetRef& g, const std::vector<VarId>& actuals,
                                   std::vector<GadgetInstance>* log = nullptr);

}  // namespace infotile
