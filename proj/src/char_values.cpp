#include "foulkes/char_values.hpp"

#include <stdexcept>

namespace foulkes {

Polynomial char_poly_of_class(const Partition& K) {
  Polynomial acc = Polynomial::constant(1);
  for (int part : K) {
    std::vector<Rational> f(part + 1, Rational(0));
    f[0] = 1;
    f[part] = -1;
    acc = acc * Polynomial(std::move(f));
  }
  return acc;
}

std::vector<Integer> hook_eps_values_sn(const Partition& K) {
  int n = partition_weight(K);
  if (n < 1) throw std::invalid_argument("hook_eps_values_sn needs n >= 1");
  Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
  Polynomial q = char_poly_of_class(K).divide_exact(one_minus_x);
  std::vector<Integer> eps(n);
  for (int k = 0; k < n; ++k) {
    Rational v = q.coefficient(k);
    if (k % 2 == 1) v = -v;
    eps[k] = to_integer(v);
  }
  return eps;
}

static Partition hook_partition(int n, int k) {
  Partition p;
  p.push_back(n - k);
  for (int i = 0; i < k; ++i) p.push_back(1);
  return p;
}

WreathType eps_shape(int r, int n, int k) {
  WreathType t;
  if (r == 1) {
    if (k < 0 || k > n - 1) throw std::out_of_range("eps_k index for S_n");
    t.components = {hook_partition(n, k)};
    return t;
  }
  if (k < 0 || k > n) throw std::out_of_range("eps_k index for G(r,1,n)");
  t.components.assign(r, Partition{});
  if (n - k > 0) t.components[0] = Partition{n - k};
  t.components[1] = Partition(k, 1);
  return t;
}

WreathType eta_shape(int r, int n, int s, int k) {
  if (s < 0 || s > r - 1) throw std::out_of_range("eta component index");
  if (k < 0 || k > n - 1) throw std::out_of_range("eta hook index");
  WreathType t;
  t.components.assign(r, Partition{});
  t.components[s] = hook_partition(n, k);
  return t;
}

Polynomial hook_content_moment(int r, const WreathType& lambda) {
  Polynomial acc = Polynomial::constant(1);
  Rational inv_r(1, r);
  for (const BoxData& b : wreath_type_boxes(lambda)) {
    int shift = b.content + (b.in_component0 ? 1 : 0);
    Polynomial factor(
        std::vector<Rational>{Rational(shift) - inv_r, inv_r});
    acc = acc * (factor * Rational(1, b.hook));
  }
  return acc;
}

Polynomial hook_content_moment_normalized(int r, const WreathType& lambda) {
  int n = lambda.weight();
  Polynomial acc = Polynomial::constant(1);
  Rational inv_r(1, r);
  for (const BoxData& b : wreath_type_boxes(lambda)) {
    int shift = b.content + (b.in_component0 ? 1 : 0);
    acc = acc * Polynomial(
                    std::vector<Rational>{Rational(shift) - inv_r, inv_r});
  }
  return acc * Rational(Integer(1), factorial(n));
}

Matrix<Rational> eps_coeff_matrix(int r, int n) {
  int m = (r == 1) ? n - 1 : n;
  Matrix<Rational> out(m + 1, std::vector<Rational>(m + 1));
  for (int k = 0; k <= m; ++k) {
    Polynomial p = binom_shift_poly(n - k, n, r);
    for (int j = 0; j <= m; ++j) out[k][j] = p.coefficient(n - j);
  }
  return out;
}

}  // namespace foulkes
