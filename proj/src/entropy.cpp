#include "infotile/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infotile {

AtomWalker::AtomWalker(const FactoredJoint& j, const std::vector<VarId>& vars) : j_(j) {
  std::vector<const JointVar*> vs;
  for (auto v : vars) vs.push_back(&j.var(v));
  for (auto* v : vs) seeds_.insert(seeds_.end(), v->seeds.begin(), v->seeds.end());
  std::sort(seeds_.begin(), seeds_.end());
  seeds_.erase(std::unique(seeds_.begin(), seeds_.end()), seeds_.end());
  for (auto s : seeds_) {
    radix_.push_back(static_cast<uint32_t>(j.seeds()[s].probs.size()));
    size_ *= radix_.back();
  }
  stride_.assign(seeds_.size(), std::vector<uint64_t>(vs.size(), 0));
  for (size_t k = 0; k < vs.size(); ++k) {
    tables_.push_back(vs[k]->table.data());
    uint64_t st = 1;
    for (size_t i = vs[k]->seeds.size(); i-- > 0;) {
      size_t pos = std::lower_bound(seeds_.begin(), seeds_.end(), vs[k]->seeds[i]) - seeds_.begin();
      stride_[pos][k] = st;
      st *= j.seeds()[vs[k]->seeds[i]].probs.size();
    }
  }
  offset_.assign(vs.size(), 0);
  reset();
}

void AtomWalker::reset() {
  digit_.assign(seeds_.size(), 0);
  std::fill(offset_.begin(), offset_.end(), 0);
  prefix_.assign(seeds_.size(), 1.0);
  refresh_prefix(0);
  index_ = 0;
  valid_ = true;
}

void AtomWalker::refresh_prefix(size_t from) {
  for (size_t p = from; p < seeds_.size(); ++p) {
    double prev = p ? prefix_[p - 1] : 1.0;
    prefix_[p] = prev * j_.seeds()[seeds_[p]].pd[digit_[p]];
  }
}

void AtomWalker::next() {
  ++index_;
  for (size_t p = seeds_.size(); p-- > 0;) {
    const auto& st = stride_[p];
    if (++digit_[p] < radix_[p]) {
      for (size_t k = 0; k < offset_.size(); ++k) offset_[k] += st[k];
      refresh_prefix(p);
      return;
    }
    uint64_t back = radix_[p] - 1;
    for (size_t k = 0; k < offset_.size(); ++k) offset_[k] -= st[k] * back;
    digit_[p] = 0;
  }
  valid_ = false;
}

Rational AtomWalker::exact_prob() const {
  Rational p = 1;
  for (size_t i = 0; i < seeds_.size(); ++i) p *= j_.seeds()[seeds_[i]].probs[digit_[i]];
  return p;
}

namespace {

double entropy_of(std::vector<double>& probs) {
  double h = 0;
  for (double p : probs)
    if (p > 0) h -= p * std::log2(p);
  return h;
}

}  // namespace

double subset_entropy(const FactoredJoint& j, const VarSet& vars, EvalStats* stats) {
  if (vars.empty()) return 0.0;
  std::vector<VarId> list(vars.begin(), vars.end());
  AtomWalker w(j, list);
  if (stats) stats->record(w.size());
  const size_t nv = list.size();
  std::vector<uint64_t> mult(nv);
  uint64_t total = 1;
  bool overflow = false;
  for (size_t k = 0; k < nv; ++k) {
    mult[k] = total;
    uint64_t r = j.var(list[k]).range;
    if (total > UINT64_MAX / r) overflow = true;
    else total *= r;
  }
  if (overflow) {
    std::map<std::vector<uint32_t>, double> acc;
    std::vector<uint32_t> key(nv);
    for (; w.valid(); w.next()) {
      for (size_t k = 0; k < nv; ++k) key[k] = w.value(k);
      acc[key] += w.prob();
    }
    std::vector<double> ps;
    for (auto& [k, p] : acc) ps.push_back(p);
    return entropy_of(ps);
  }
  if (total <= (1u << 22) && total <= 8 * w.size() + 1024) {
    std::vector<double> acc(total, 0.0);
    for (; w.valid(); w.next()) {
      uint64_t key = 0;
      for (size_t k = 0; k < nv; ++k) key += w.value(k) * mult[k];
      acc[key] += w.prob();
    }
    return entropy_of(acc);
  }
  std::vector<std::pair<uint64_t, double>> cells;
  cells.reserve(w.size());
  for (; w.valid(); w.next()) {
    uint64_t key = 0;
    for (size_t k = 0; k < nv; ++k) key += w.value(k) * mult[k];
    cells.emplace_back(key, w.prob());
  }
  std::sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<double> ps;
  for (size_t i = 0; i < cells.size();) {
    double p = 0;
    size_t k = i;
    for (; k < cells.size() && cells[k].first == cells[i].first; ++k) p += cells[k].second;
    ps.push_back(p);
    i = k;
  }
  return entropy_of(ps);
}

double eval_expression(const FactoredJoint& j, const InfoExpr& e, EvalStats* stats) {
  double v = 0;
  for (auto& [s, c] : e.terms()) v += to_double(c) * subset_entropy(j, s, stats);
  return v;
}

EntropyVector entropic_vector(const FactoredJoint& j, const std::vector<VarId>& vars, size_t limit) {
  if (vars.size() > limit)
    throw std::length_error("entropic vector over " + std::to_string(vars.size()) + " variables exceeds limit " +
                            std::to_string(limit));
  EntropyVector ev;
  ev.vars = vars;
  uint32_t n = static_cast<uint32_t>(vars.size());
  ev.h.resize((1u << n) - 1);
  for (uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<VarId> s;
    for (uint32_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(vars[i]);
    ev.h[m - 1] = subset_entropy(j, VarSet(s));
  }
  return ev;
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

ExactPmf exact_marginal(const FactoredJoint& j, const std::vector<VarId>& vars) {
  AtomWalker w(j, vars);
  bool uniform = true;
  for (auto s : w.seeds()) uniform = uniform && j.seeds()[s].uniform;
  ExactPmf out;
  std::vector<uint32_t> key(vars.size());
  if (uniform) {
    std::map<std::vector<uint32_t>, uint64_t> counts;
    for (; w.valid(); w.next()) {
      for (size_t k = 0; k < vars.size(); ++k) key[k] = w.value(k);
      ++counts[key];
    }
    BigInt total(std::to_string(w.size()));
    for (auto& [k, c] : counts) {
      Rational q(BigInt(std::to_string(c)), total);
      q.canonicalize();
      out.emplace(k, q);
    }
    return out;
  }
  for (; w.valid(); w.next()) {
    for (size_t k = 0; k < vars.size(); ++k) key[k] = w.value(k);
    out[key] += w.exact_prob();
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace infotile
