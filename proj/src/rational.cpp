#include "infotile/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace infotile {

namespace {

bool is_int_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!is_int_literal(s)) throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_int(s));
  } else {
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

long floor_log2(const BigInt& x) {
  if (x < 1) throw std::domain_error("floor_log2 of value < 1");
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
}

}  // namespace infotile
