#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace foulkes {

// Exact scalars. GMP keeps mpq_class values canonical (reduced, positive
// denominator) as long as every value is built through canonical inputs,
// which the helpers below enforce.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q))
    throw std::domain_error("expected integral value, got " + q.get_str());
  return q.get_num();
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(std::string_view s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (q.get_den() == 0)
    throw std::invalid_argument("rational literal with zero denominator: " +
                                std::string(s));
  q.canonicalize();
  return q;
}

}  // namespace foulkes
