#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foulkes/foulkes_table.hpp"
#include "foulkes/group.hpp"
#include "foulkes/matrix.hpp"

namespace foulkes {

// A sequence of conjugacy classes (K_1, ..., K_m) of G(r,1,n).
struct ClassSequence {
  int r = 1;
  int n = 0;
  std::vector<WreathType> classes;
};

// mu(C_i, C_j) = E|k_1...k_m C_i cap C_j| for k_t uniform in K_t, stored by
// ell - ell_min in both coordinates.
struct ExpectationKernel {
  int r = 1;
  int n = 0;
  Matrix<Rational> mu;
  std::string provenance;

  int ell_min() const { return r == 1 ? 1 : 0; }
  const Rational& at(int li, int lj) const {
    return mu.at(li - ell_min()).at(lj - ell_min());
  }
};

// Exact expectation kernel: the class distribution of the random product is
// obtained by convolving one class at a time through counts on class
// representatives, then combined with the factorization counts
// f_K(i,j) = #{a in C_i : x a in C_j} for one representative x per class.
ExpectationKernel kernel_for_sequence(const ClassSequence& seq,
                                      const GroupTable& G);

// The weighted sequences whose kernels mix into the canonical inner
// product: the n-cycle pair for S_n, and the five sequences a_1..a_5 with
// weights 1/r, (r-2)/2r, 1/4, 1/2r, (r-2)/4r for G(r,1,n), n >= 2
// (2/r and (r-2)/r on a_1, a_2 when n = 1).
std::vector<std::pair<Rational, ClassSequence>> canonical_mixture(int r, int n);

// The mixture kernel; cached per (r, n).
const ExpectationKernel& canonical_kernel(int r, int n,
                                          long cap = kDefaultGroupCap);

Rational bracket(const LengthClassFunction& theta,
                 const LengthClassFunction& psi,
                 const ExpectationKernel& kernel);

// [theta, psi] as the dot product of Foulkes coefficient vectors; agrees
// exactly with bracket() under the canonical kernel.
Rational bracket_spectral(const LengthClassFunction& theta,
                          const LengthClassFunction& psi);

// [phi_i, phi_i]_seq for a sequence whose first class K_1 has some
// component equal to (n).  Checks that all off-diagonal brackets vanish.
Rational xi_value(const ClassSequence& seq, int i,
                  long cap = kDefaultGroupCap);

// (1/|G|) sum_{u,v} phi_i(C_u) phi_j(C_v) |sigma C_u cap C_v| for sigma in
// the given class; equals diag((-1)^i C(n,i)) when lambda^s = (n), s > 0.
Matrix<Rational> single_class_orthogonality(int r, int n,
                                            const WreathType& sigma_class,
                                            long cap = kDefaultGroupCap);

struct GramSchmidtResult {
  FoulkesTable table;
  Matrix<Rational> change_of_basis;  // L with Phi = L V
};

// Gram-Schmidt on the rows of V = ((ru+1)^{ell(C_{n-j})}) under the
// spectral bracket.  The result must reproduce phi_table(r, n); a
// ConsistencyError is thrown otherwise.
GramSchmidtResult gram_schmidt_foulkes(int r, int n);

}  // namespace foulkes
