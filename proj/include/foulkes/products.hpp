#pragma once

#include <vector>

#include "foulkes/group.hpp"
#include "foulkes/matrix.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

// Coefficients c_ijk of phi_i phi_j = sum_k c_ijk phi_k.  Dimensions n for
// S_n (indices 0..n-1) and n+1 for G(r,1,n).
struct ProductTensor {
  int r = 1;
  int n = 0;
  int dim = 0;
  std::vector<Integer> c;

  const Integer& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Integer& at(int i, int j, int k) {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  bool operator==(const ProductTensor&) const = default;
};

// Pointwise multiply rows of Phi, then decompose.
ProductTensor c_spectral(int r, int n);

// sum_{u<=i, v<=j} (-1)^{i-u}(-1)^{j-v} C(n+1,i-u) C(n+1,j-v)
//                  C(ruv+u+v+n-k, n).
Integer c_closed_form(int r, int n, int i, int j, int k);
ProductTensor c_closed_form_tensor(int r, int n);

// #{(x,y) : des x = i, des y = j, xy = z} for one fixed z with des z = k.
// The canonical z is the first element in enumeration order with k
// descents; the count is independent of that choice.
Integer c_combinatorial(const GroupTable& G, int i, int j, int k);
// All (i,j) counts at once for a fixed z (by element index).
Matrix<Integer> c_combinatorial_slice(const GroupTable& G, long z_index);

// Delsarte's recursion at q = 1 (S_n only), seeded level by level with the
// boundary slices c_{0jk} = delta_jk, c_{i0k} = delta_ik and the k = 0
// slice c_{ij0} = <phi_i, phi_j> computed from Stirling cycle counts.
ProductTensor c_delsarte(int n);

}  // namespace foulkes
