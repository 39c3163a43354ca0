#pragma once

#include <optional>

#include "infotile/rational.hpp"

namespace infotile {

struct LogBound {
  long p = 0, q = 0;
  Rational value() const { return frac(p, q); }
};

// (k-1)^q < 2^p < k^q, exact.
bool log_bound_holds(long k, long p, long q);

// Smallest denominator q, then smallest p.
Rational pick_alpha(long k);
// Smallest power-of-two denominator.
LogBound pick_log_bounds(long k);
// Inverse of pick_alpha for the values the compiler emits (k <= 4096).
std::optional<long> alpha_index(const Rational& a);

// Constants (p3, q3, p4, q4) with p3/q3 < log 3 < p4/q4 and no integer u with
// 3^p3 <= u^q3 and u^q4 <= 3^p4.
struct CardGapConstants {
  long p3, q3, p4, q4;
};
constexpr CardGapConstants kCardGap{3, 2, 8, 5};
CardGapConstants search_card_gap_constants();
bool card_gap_holds(const CardGapConstants& c);

}  // namespace infotile
