#include "infotile/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace infotile {

namespace {

BigInt ipow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

BigInt pow2(long e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

long bitlen(const BigInt& x) { return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

void check_k(long k) {
  if (k < 2) throw std::invalid_argument("log bound requires k >= 2, got " + std::to_string(k));
}

}  // namespace

bool log_bound_holds(long k, long p, long q) {
  if (k < 2 || p < 0 || q < 1) return false;
  BigInt two_p = pow2(p);
  return ipow(k - 1, q) < two_p && two_p < ipow(k, q);
}

Rational pick_alpha(long k) {
  check_k(k);
  BigInt lo = 1, hi = 1;
  for (long q = 1;; ++q) {
    lo *= (k - 1);
    hi *= k;
    long p = bitlen(lo);  // least p with 2^p > lo
    if (pow2(p) < hi) {
      Rational a(p, q);
      a.canonicalize();
      return a;
    }
  }
}

LogBound pick_log_bounds(long k) {
  check_k(k);
  BigInt lo = k - 1, hi = k;
  for (long q = 1;; q *= 2) {
    long p = bitlen(lo);
    if (pow2(p) < hi) return {p, q};
    lo *= lo;
    hi *= hi;
  }
}

std::optional<long> alpha_index(const Rational& a) {
  static std::mutex mu;
  static std::map<Rational, long> table;
  static long filled = 1;
  std::lock_guard lk(mu);
  auto it = table.find(a);
  if (it != table.end()) return it->second;
  // alpha_k > log(k-1), so alpha bounds k from above.
  double bound = std::min(4096.0, std::exp2(a.get_d()) + 2);
  while (filled < static_cast<long>(bound)) {
    ++filled;
    table.emplace(pick_alpha(filled), filled);
  }
  it = table.find(a);
  if (it != table.end()) return it->second;
  return std::nullopt;
}

bool card_gap_holds(const CardGapConstants& c) {
  if (!(pow2(c.p3) < ipow(3, c.q3))) return false;
  if (!(ipow(3, c.q4) < pow2(c.p4))) return false;
  BigInt top = ipow(3, c.p4), bottom = ipow(3, c.p3);
  for (long u = 1;; ++u) {
    if (ipow(u, c.q4) > top) break;  // u^q4 grows, nothing further can qualify
    if (ipow(u, c.q3) >= bottom) return false;
  }
  return true;
}

CardGapConstants search_card_gap_constants() {
  for (long total = 2;; ++total) {
    for (long q3 = 1; q3 < total; ++q3) {
      long q4 = total - q3;
      long p3 = bitlen(ipow(3, q3)) - 1;  // largest p with 2^p < 3^q3
      long p4 = bitlen(ipow(3, q4));  // least p with 2^p > 3^q4
      CardGapConstants c{p3, q3, p4, q4};
      if (card_gap_holds(c)) return c;
    }
  }
}

}  // namespace infotile
