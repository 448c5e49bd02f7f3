#pragma once

#include <vector>

#include "foulkes/group.hpp"
#include "foulkes/matrix.hpp"
#include "foulkes/polynomial.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

// The character table Phi = (phi_i(C_{n-j})), rows i = 0..m and columns
// j = 0..m with m = n-1 for S_n and m = n for G(r,1,n) with r >= 2.
// Column j holds the values on the length class C_{n-j}, so column 0 is the
// identity class (the degrees) and ell decreases left to right.
struct FoulkesTable {
  int r = 1;
  int n = 0;
  Matrix<Integer> entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int ell_min() const { return r == 1 ? 1 : 0; }
  int column_of_ell(int l) const { return n - l; }
  const Integer& value(int i, int l) const {
    return entries[i][column_of_ell(l)];
  }
  bool operator==(const FoulkesTable&) const = default;
};

// A class function that depends only on ell, stored by ell ascending from
// ell_min (1 for S_n, 0 otherwise).
struct LengthClassFunction {
  int r = 1;
  int n = 0;
  std::vector<Rational> values;

  int ell_min() const { return r == 1 ? 1 : 0; }
  int size() const { return static_cast<int>(values.size()); }
  const Rational& at_ell(int l) const { return values.at(l - ell_min()); }
  Rational& at_ell(int l) { return values.at(l - ell_min()); }
  bool operator==(const LengthClassFunction&) const = default;
};

// Closed form: phi_i(C_l) = sum_u (-1)^{i-u} C(n+1, i-u) (ru+1)^l.
FoulkesTable phi_table(int r, int n);

// Independent route: build the table for size n from size n-1 column by
// column via phi_i = phi_i' - phi_{i-1}', filling the identity column with
// the descent histogram obtained by enumeration.  hist_cap bounds the
// group sizes that the histogram may enumerate.
FoulkesTable phi_table_recursive(int r, int n, long hist_cap = kDefaultGroupCap);

// Descent histogram of G(r,1,n): entry i counts elements with i descents.
std::vector<Integer> descent_histogram(int r, int n, long cap = kDefaultGroupCap);

// Delsarte's F(i,k,m) values at q = 1 seeded by Eulerian numbers, one
// matrix per level m = 0..n-1; F[m][u][i] with 0 <= u,i <= m.
std::vector<Matrix<Integer>> delsarte_f_tables(int n);

// The matrix (F(j,i,n-1)); its transpose must equal phi_table(1,n) and a
// ConsistencyError is thrown if it does not.
FoulkesTable delsarte_table(int n);

LengthClassFunction phi_row(const FoulkesTable& t, int i);
// base^ell as a length class function.
LengthClassFunction power_length_function(int r, int n, const Rational& base);

// Foulkes coefficients (<theta, eps_i>/eps_i(1))_i of a length class
// function, computed through eps_coeff_matrix.
std::vector<Rational> decompose_length_function(const LengthClassFunction& theta);

// Reconstruction sum_i coeff_i phi_i, for checking decompositions.
LengthClassFunction combine_phi(const FoulkesTable& t,
                                const std::vector<Rational>& coeffs);

// Row generating polynomial sum_i phi_i(C_j) X^i for the class C_j, checked
// against the operator route
//   [(1-Y^r)^{n+1} (1 + Y d/dY)^j 1/(1-Y^r)]_{Y^r = X}.
// Throws ConsistencyError if the two routes disagree.
Polynomial df_generating_row(int r, int n, int j);

// Inversion between the two expansions
//   sum_i a_i X^i = sum_k b_k C((X-1)/r + n-k+..., n)   and
//   sum_i a_i phi(C_i) = sum_k b_k X^{k-1 or k},
// with the S_n indexing a_1..a_n, b_1..b_n and the G(r,1,n) indexing
// a_0..a_n, b_0..b_n.
std::vector<Rational> inversion_a_to_b(const std::vector<Rational>& a, int r,
                                       int n);
std::vector<Rational> inversion_b_to_a(const std::vector<Rational>& b, int r,
                                       int n);

}  // namespace foulkes
