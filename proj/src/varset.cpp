#include "infotile/varset.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace infotile {

namespace {

// Append-only name pool. Blocks never move, so readers need no lock.
class NamePool {
 public:
  static constexpr uint32_t kBlockBits = 14;
  static constexpr uint32_t kBlockSize = 1u << kBlockBits;
  static constexpr uint32_t kMaxBlocks = 1u << 16;

  NamePool() : blocks_(new std::atomic<Block*>[kMaxBlocks]) {
    for (uint32_t i = 0; i < kMaxBlocks; ++i) blocks_[i].store(nullptr);
    intern("");
  }

  uint32_t intern(std::string_view s) {
    {
      std::shared_lock lk(mu_);
      auto it = index_.find(s);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lk(mu_);
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    uint32_t id = count_;
    uint32_t b = id >> kBlockBits;
    if (b >= kMaxBlocks) throw std::length_error("variable name pool exhausted");
    Block* blk = blocks_[b].load(std::memory_order_relaxed);
    if (!blk) {
      blk = new Block;
      blocks_[b].store(blk, std::memory_order_release);
    }
    std::string& slot = (*blk)[id & (kBlockSize - 1)];
    slot.assign(s);
    index_.emplace(std::string_view(slot), id);
    ++count_;
    return id;
  }

  const std::string& name(uint32_t id) const {
    Block* blk = blocks_[id >> kBlockBits].load(std::memory_order_acquire);
    return (*blk)[id & (kBlockSize - 1)];
  }

 private:
  using Block = std::array<std::string, kBlockSize>;
  std::unique_ptr<std::atomic<Block*>[]> blocks_;
  std::unordered_map<std::string_view, uint32_t> index_;
  uint32_t count_ = 0;
  mutable std::shared_mutex mu_;
};

NamePool& pool() {
  static NamePool* p = new NamePool;  // leaked on purpose: names outlive statics
  return *p;
}

void normalize(std::vector<VarId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

VarId::VarId(std::string_view name) : id_(pool().intern(name)) {}

const std::string& VarId::name() const { return pool().name(id_); }

VarSet::VarSet(std::initializer_list<VarId> vs) : v_(vs) { normalize(v_); }

VarSet::VarSet(std::vector<VarId> vs) : v_(std::move(vs)) { normalize(v_); }

VarSet VarSet::of_names(const std::vector<std::string>& names) {
  std::vector<VarId> v;
  v.reserve(names.size());
  for (auto& n : names) v.emplace_back(n);
  return VarSet(std::move(v));
}

bool VarSet::contains(VarId x) const { return std::binary_search(v_.begin(), v_.end(), x); }

bool VarSet::subset_of(const VarSet& o) const {
  return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
}

bool VarSet::disjoint(const VarSet& o) const {
  auto a = v_.begin(), b = o.v_.begin();
  while (a != v_.end() && b != o.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

VarSet VarSet::unite(const VarSet& o) const {
  VarSet r;
  r.v_.reserve(v_.size() + o.v_.size());
  std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
  return r;
}

VarSet VarSet::intersect(const VarSet& o) const {
  VarSet r;
  std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
  return r;
}

VarSet VarSet::minus(const VarSet& o) const {
  VarSet r;
  std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
  return r;
}

std::vector<std::string> VarSet::names() const {
  std::vector<std::string> out;
  out.reserve(v_.size());
  for (auto v : v_) out.push_back(v.name());
  return out;
}

std::string VarSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ',';
    s += v_[i].name();
  }
  return s + "}";
}

VarSet operator|(const VarSet& a, const VarSet& b) { return a.unite(b); }

size_t VarSetHash::operator()(const VarSet& s) const noexcept {
  uint64_t h = 1469598103934665603ULL;
  for (auto v : s) {
    h ^= v.handle();
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

}  // namespace infotile
