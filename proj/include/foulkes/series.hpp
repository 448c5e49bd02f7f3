#pragma once

#include <vector>

#include "foulkes/polynomial.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

// Formal power series cut at a fixed order T: coefficients of X^0..X^T are
// stored, everything beyond is discarded.  Arithmetic between two series
// requires equal orders and stays at that order.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<Rational> coeffs, int order);
  static TruncatedSeries zero(int order);
  static TruncatedSeries from_polynomial(const Polynomial& p, int order);
  // 1/(1 - X^r) up to the order: coefficient 1 at every multiple of r.
  static TruncatedSeries geometric(int r, int order);
  // 1/(1 - X)^m, whose coefficient at X^k is C(k + m - 1, m - 1).
  static TruncatedSeries inv_one_minus_x_pow(int m, int order);

  int order() const { return order_; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;
  bool operator==(const TruncatedSeries& o) const;

  // (1 + X d/dX) applied j times: coefficient at X^k is scaled by (k+1)^j.
  TruncatedSeries apply_euler_operator(int j) const;

 private:
  std::vector<Rational> coeffs_;  // size order_+1
  int order_;
};

}  // namespace foulkes
