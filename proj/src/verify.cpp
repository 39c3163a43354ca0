#include "infotile/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace infotile {

namespace {

template <class F>
void parallel_for(size_t n, int jobs, F&& body) {
  int t = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (t <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      try {
        for (size_t i; !failed && (i = next++) < n;) body(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<double> row_values(const FactoredJoint& j, const std::vector<AffineConstraint>& rows, int jobs,
                               std::vector<uint64_t>* atoms) {
  std::unordered_map<VarSet, size_t, VarSetHash> index;
  std::vector<const VarSet*> sets;
  for (auto& r : rows)
    for (auto& [s, c] : r.lhs.terms()) {
      for (auto v : s)
        if (!j.has_var(v)) throw std::out_of_range("unassigned variable '" + v.name() + "'");
      if (index.emplace(s, sets.size()).second) sets.push_back(&s);
    }
  std::vector<double> h(sets.size());
  std::vector<uint64_t> n(sets.size());
  parallel_for(sets.size(), jobs, [&](size_t i) {
    EvalStats st;
    h[i] = subset_entropy(j, *sets[i], &st);
    n[i] = st.atoms;
  });
  std::vector<double> out;
  out.reserve(rows.size());
  if (atoms) atoms->assign(rows.size(), 0);
  for (size_t r = 0; r < rows.size(); ++r) {
    double v = 0;
    for (auto& [s, c] : rows[r].lhs.terms()) {
      size_t i = index.at(s);
      v += to_double(c) * h[i];
      if (atoms) (*atoms)[r] += n[i];
    }
    out.push_back(v);
  }
  return out;
}

VerificationReport verify_rows(const FactoredJoint& j, const std::vector<AffineConstraint>& rows, double tol,
                               int jobs) {
  VerificationReport rep;
  std::vector<uint64_t> atoms;
  auto vals = row_values(j, rows, jobs, &atoms);
  rep.rows.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    RowResult r;
    r.tag = row.tag;
    r.lhs = vals[i];
    r.rel = row.rel;
    r.rhs = row.rhs;
    r.residual = row.residual(vals[i]);
    r.pass = row.holds(vals[i], tol);
    r.atoms = atoms[i];
    double viol = 0;
    switch (row.rel) {
      case Rel::EQ: viol = std::fabs(r.residual); break;
      case Rel::GE: viol = std::max(0.0, -r.residual); break;
      case Rel::LE: viol = std::max(0.0, r.residual); break;
    }
    rep.max_violation = std::max(rep.max_violation, viol);
    if (!r.pass) ++rep.failures;
    rep.max_row_atoms = std::max(rep.max_row_atoms, r.atoms);
    rep.total_atoms += r.atoms;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

VerificationReport verify(const FactoredJoint& j, const ConstraintSystem& cs, double tol, int jobs) {
  for (auto v : cs.all_vars())
    if (!j.has_var(v)) throw std::out_of_range("unassigned variable '" + v.name() + "'");
  return verify_rows(j, cs.rows, tol, jobs);
}

json report_json(const VerificationReport& r) {
  json rows = json::array();
  for (auto& x : r.rows)
    rows.push_back({{"tag", x.tag},
                    {"lhs", x.lhs},
                    {"rel", rel_str(x.rel)},
                    {"rhs", rational_json(x.rhs)},
                    {"residual", x.residual},
                    {"pass", x.pass},
                    {"atoms", x.atoms}});
  json summary = {{"rows", r.rows.size()},
                  {"failures", r.failures},
                  {"max_residual", r.max_violation},
                  {"max_row_atoms", r.max_row_atoms},
                  {"total_atoms", r.total_atoms}};
  return {{"summary", summary}, {"rows", rows}};
}

}  // namespace infotile
