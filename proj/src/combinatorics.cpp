#include "foulkes/combinatorics.hpp"

#include <stdexcept>

namespace foulkes {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binom_int(const Integer& m, int k) {
  if (k < 0) throw std::invalid_argument("binom_int with negative k");
  Integer num = 1;
  for (int i = 0; i < k; ++i) num *= m - i;
  Integer den = factorial(k);
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("binom_int: product not divisible by k!");
  return q;
}

Integer int_pow(const Integer& base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational rat_pow(const Rational& base, long e) {
  if (e >= 0) {
    Rational out(int_pow(base.get_num(), static_cast<unsigned>(e)),
                 int_pow(base.get_den(), static_cast<unsigned>(e)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
  Rational out(int_pow(base.get_den(), static_cast<unsigned>(-e)),
               int_pow(base.get_num(), static_cast<unsigned>(-e)));
  out.canonicalize();
  return out;
}

std::vector<Integer> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_row of negative n");
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(std::max<size_t>(1, m), 0);
    for (int k = 0; k < static_cast<int>(next.size()); ++k) {
      Integer v = 0;
      if (k < static_cast<int>(row.size())) v += (k + 1) * row[k];
      if (k - 1 >= 0 && k - 1 < static_cast<int>(row.size()))
        v += (m - k) * row[k - 1];
      next[k] = v;
    }
    row = std::move(next);
  }
  return row;
}

std::vector<Integer> stirling_cycle_row(int n) {
  if (n < 0) throw std::invalid_argument("stirling_cycle_row of negative n");
  std::vector<Integer> row{1};  // n = 0: one empty permutation, zero cycles
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (int l = 1; l <= m; ++l) {
      Integer v = row[l - 1];
      if (l <= m - 1) v += Integer(m - 1) * row[l];
      next[l] = v;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace foulkes
