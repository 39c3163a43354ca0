#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace infotile {

// Interned variable name. Equality is by handle, ordering is by name, so
// sorted containers come out in the same order regardless of interning order.
class VarId {
 public:
  VarId() = default;
  explicit VarId(std::string_view name);
  VarId(const char* name) : VarId(std::string_view(name)) {}
  VarId(const std::string& name) : VarId(std::string_view(name)) {}

  const std::string& name() const;
  uint32_t handle() const { return id_; }

  friend bool operator==(VarId a, VarId b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(VarId a, VarId b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    int c = a.name().compare(b.name());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  uint32_t id_ = 0;  // 0 is the empty name
};

class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarId> vs);
  explicit VarSet(std::vector<VarId> vs);
  static VarSet of_names(const std::vector<std::string>& names);

  bool empty() const { return v_.empty(); }
  size_t size() const { return v_.size(); }
  const std::vector<VarId>& items() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(VarId x) const;
  bool subset_of(const VarSet& o) const;
  bool disjoint(const VarSet& o) const;
  VarSet unite(const VarSet& o) const;
  VarSet intersect(const VarSet& o) const;
  VarSet minus(const VarSet& o) const;

  std::vector<std::string> names() const;
  std::string str() const;  // {A,B}

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
  }

 private:
  std::vector<VarId> v_;  // sorted by name, unique
};

VarSet operator|(const VarSet& a, const VarSet& b);

struct VarSetHash {
  size_t operator()(const VarSet& s) const noexcept;
};

}  // namespace infotile

template <>
struct std::hash<infotile::VarId> {
  size_t operator()(infotile::VarId v) const noexcept { return std::hash<uint32_t>()(v.handle()); }
};
