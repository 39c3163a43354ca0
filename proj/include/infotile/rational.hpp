#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace infotile {

// mpq_class(n, d) does not reduce; build non-literal fractions with frac().
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational frac(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk or q == 0.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// floor(log2 x) for x >= 1.
long floor_log2(const BigInt& x);

}  // namespace infotile
