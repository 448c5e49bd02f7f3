#include "foulkes/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace foulkes {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial of negative degree");
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  int qd = static_cast<int>(rem.size()) - 1 - dd;
  if (qd < 0) {
    if (is_zero()) return Polynomial();
    throw std::domain_error("polynomial division leaves a remainder");
  }
  std::vector<Rational> quot(qd + 1, Rational(0));
  const Rational& lead = divisor.coeffs_[dd];
  for (int k = qd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q != 0)
      for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  for (const Rational& c : rem)
    if (c != 0) throw std::domain_error("polynomial division leaves a remainder");
  return Polynomial(std::move(quot));
}

Polynomial binom_shift_poly(int a, int n, int r) {
  if (n < 0) throw std::invalid_argument("binom_shift_poly with negative n");
  if (r < 1) throw std::invalid_argument("binom_shift_poly with r < 1");
  // C(y, n) with y = (X-1)/r + a, i.e. the product of the linear factors
  // (X/r + a - i - 1/r) for i = 0..n-1, divided by n!.
  Polynomial acc = Polynomial::constant(1);
  Rational inv_r(1, r);
  for (int i = 0; i < n; ++i) {
    Polynomial factor(std::vector<Rational>{Rational(a - i) - inv_r, inv_r});
    acc = acc * factor;
  }
  return acc * Rational(Integer(1), factorial(n));
}

}  // namespace foulkes
