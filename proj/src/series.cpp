#include "foulkes/series.hpp"

#include <stdexcept>

namespace foulkes {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("series with negative order");
  coeffs_.resize(order_ + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries({}, order);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p,
                                                 int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 0; k <= std::min(order, p.degree()); ++k)
    c[k] = p.coefficient(k);
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::geometric(int r, int order) {
  if (r < 1) throw std::invalid_argument("geometric series with r < 1");
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 0; k <= order; k += r) c[k] = 1;
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::inv_one_minus_x_pow(int m, int order) {
  if (m < 0) throw std::invalid_argument("inv_one_minus_x_pow with m < 0");
  std::vector<Rational> c(order + 1, Rational(0));
  if (m == 0) {
    c[0] = 1;
  } else {
    for (int k = 0; k <= order; ++k)
      c[k] = Rational(binom_int(Integer(k + m - 1), m - 1));
  }
  return TruncatedSeries(std::move(c), order);
}

Rational TruncatedSeries::coefficient(int k) const {
  if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
  return coeffs_[k];
}

static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_orders(*this, o);
  std::vector<Rational> c(order_ + 1);
  for (int k = 0; k <= order_; ++k) c[k] = coeffs_[k] + o.coeffs_[k];
  return TruncatedSeries(std::move(c), order_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_orders(*this, o);
  std::vector<Rational> c(order_ + 1);
  for (int k = 0; k <= order_; ++k) c[k] = coeffs_[k] - o.coeffs_[k];
  return TruncatedSeries(std::move(c), order_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_orders(*this, o);
  std::vector<Rational> c(order_ + 1, Rational(0));
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j)
      if (o.coeffs_[j] != 0) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return TruncatedSeries(std::move(c), order_);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  std::vector<Rational> c(order_ + 1);
  for (int k = 0; k <= order_; ++k) c[k] = coeffs_[k] * s;
  return TruncatedSeries(std::move(c), order_);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

TruncatedSeries TruncatedSeries::apply_euler_operator(int j) const {
  if (j < 0) throw std::invalid_argument("euler operator with j < 0");
  std::vector<Rational> c(order_ + 1);
  for (int k = 0; k <= order_; ++k)
    c[k] = coeffs_[k] * rat_pow(Rational(k + 1), j);
  return TruncatedSeries(std::move(c), order_);
}

}  // namespace foulkes
