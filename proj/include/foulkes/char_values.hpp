#pragma once

#include <vector>

#include "foulkes/matrix.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/polynomial.hpp"

namespace foulkes {

// Characteristic polynomial of the permutation matrix of an element of
// cycle type K: the product of (1 - X^part) over the parts.
Polynomial char_poly_of_class(const Partition& K);

// Values of the hook characters eps_k on the class K of S_n, read off from
// the exact division of char_poly_of_class(K) by (1 - X):
//   eps_k(K) = (-1)^k [X^k] p(K, X)/(1 - X),  k = 0..n-1.
std::vector<Integer> hook_eps_values_sn(const Partition& K);

// Shape of eps_k: for r = 1 the hook (n-k, 1^k); for r >= 2 the pair with
// row (n-k) in component 0 and column (1^k) in component 1.
WreathType eps_shape(int r, int n, int k);

// Shape of eta_{s,k}: the hook (n-k, 1^k) placed in component s.
WreathType eta_shape(int r, int n, int s, int k);

// <X^ell, chi_lambda> as a polynomial in X:
//   prod over boxes of ((X-1)/r + c(b) + delta0(b)) / h(b).
// (With r = 1 every box has delta0 = 1 and the factor is X + c(b).)
Polynomial hook_content_moment(int r, const WreathType& lambda);

// <X^ell, chi_lambda / chi_lambda(1)>: same numerator divided by n!.
Polynomial hook_content_moment_normalized(int r, const WreathType& lambda);

// The matrix Lambda with entry (k, j) the coefficient of X^{n-j} in
// C((X-1)/r + n - k, n); rows/columns run over 0..n-1 for r = 1 and 0..n
// otherwise.  Equals Phi^{-t}.
Matrix<Rational> eps_coeff_matrix(int r, int n);

}  // namespace foulkes
