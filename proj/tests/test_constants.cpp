#include <cmath>

#include "doctest.h"
#include "infotile/constants.hpp"

using namespace infotile;

namespace {

// (k-1)^q < 2^p < k^q with plain gmp powers.
bool window(long k, const Rational& r) {
  unsigned long p = r.get_num().get_ui(), q = r.get_den().get_ui();
  BigInt lo, mid, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), k - 1, q);
  mpz_ui_pow_ui(mid.get_mpz_t(), 2, p);
  mpz_ui_pow_ui(hi.get_mpz_t(), k, q);
  return lo < mid && mid < hi;
}

}  // namespace

TEST_CASE("pick_alpha lies strictly between log(k-1) and log k") {
  for (long k = 2; k <= 1000; ++k) {
    Rational a = pick_alpha(k);
    REQUIRE(window(k, a));
    // no smaller denominator works
    long q = a.get_den().get_si();
    for (long qq = 1; qq < q; ++qq) {
      long p0 = static_cast<long>(std::floor(qq * std::log2(static_cast<double>(k))));
      for (long p = std::max(0L, p0 - 1); p <= p0 + 1; ++p) REQUIRE_FALSE(window(k, Rational(p, qq)));
    }
  }
  CHECK(pick_alpha(2) == Rational(1, 2));
  CHECK(pick_alpha(3) == Rational(3, 2));
  CHECK(pick_alpha(4) == Rational(5, 3));
  CHECK(pick_alpha(5) == Rational(9, 4));
}

TEST_CASE("pick_log_bounds uses power-of-two denominators") {
  for (long k = 2; k <= 1000; ++k) {
    LogBound b = pick_log_bounds(k);
    REQUIRE((b.q & (b.q - 1)) == 0);
    REQUIRE(window(k, Rational(b.p, b.q)));
    REQUIRE(log_bound_holds(k, b.p, b.q));
  }
}

TEST_CASE("alpha index inverts pick_alpha") {
  for (long k = 2; k <= 300; ++k) CHECK(alpha_index(pick_alpha(k)) == k);
  CHECK(!alpha_index(Rational(100, 1)));
}

TEST_CASE("cardinality gap constants") {
  CHECK(card_gap_holds(kCardGap));
  auto c = search_card_gap_constants();
  CHECK(card_gap_holds(c));
  CHECK_FALSE(card_gap_holds({1, 1, 2, 1}));
}
