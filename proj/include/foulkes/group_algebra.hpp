#pragma once

#include <string>
#include <vector>

#include "foulkes/group.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

// An element of Q[G] as a dense coefficient vector over the enumeration
// order of a GroupTable.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const GroupTable& G)
      : G_(&G), coeffs_(G.order(), Rational(0)) {}

  static GroupAlgebraElement unit(const GroupTable& G);

  const GroupTable& group() const { return *G_; }
  const Rational& operator[](long i) const { return coeffs_[i]; }
  Rational& operator[](long i) { return coeffs_[i]; }
  long size() const { return static_cast<long>(coeffs_.size()); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  GroupAlgebraElement operator*(const Rational& c) const;
  bool operator==(const GroupAlgebraElement& o) const {
    return coeffs_ == o.coeffs_;
  }

  Rational coefficient_sum() const;
  bool is_zero() const;

 private:
  const GroupTable* G_;
  std::vector<Rational> coeffs_;
};

// D_i = sum of the elements with exactly i descents; the list runs over
// i = 0..n-1 for S_n and i = 0..n otherwise.
std::vector<GroupAlgebraElement> descent_sums(const GroupTable& G);

// Eulerian idempotents: the coefficients of the binomial polynomials
// C((X-1)/r + n - i, n) against the descent sums, collected per power of X.
std::vector<GroupAlgebraElement> eulerian_idempotents(const GroupTable& G);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TransitionReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// Checks the transition identities: D_i expands over the E's through
// Phi^t, the E's are orthogonal idempotents summing to the unit, and
// eps_coeff_matrix inverts Phi^t.
TransitionReport verify_transition(const GroupTable& G);

}  // namespace foulkes
