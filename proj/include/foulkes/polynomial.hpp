#pragma once

#include <vector>

#include "foulkes/combinatorics.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

// Dense univariate polynomial with rational coefficients, kept canonical:
// no trailing zero coefficient, and the zero polynomial is the empty
// coefficient list (degree() returns -1 as the "minus infinity" sentinel).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.size() == 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational eval(const Rational& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  // Exact division; throws if the remainder is nonzero.
  Polynomial divide_exact(const Polynomial& divisor) const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// The degree-n polynomial C((X-1)/r + a, n) expanded in X.  With r = 1 this
// is C(X - 1 + a, n).
Polynomial binom_shift_poly(int a, int n, int r);

}  // namespace foulkes
