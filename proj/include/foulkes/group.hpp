#pragma once

#include <vector>

#include "foulkes/errors.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

inline constexpr long kDefaultGroupCap = 100000;

struct Permutation {
  std::vector<int> img;  // 0-based images: img[i] is where i goes

  static Permutation identity(int n);
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  Permutation compose(const Permutation& o) const;  // (p.compose(q))(i) = p(q(i))
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
};

// A colored permutation x = D.A_pi: the monomial matrix with entry
// zeta^{colors[i]} in row i, column pi^{-1}(i).
struct WreathElement {
  Permutation perm;
  std::vector<int> colors;  // each in 0..r-1

  static WreathElement identity(int n);
  int size() const { return perm.size(); }
  bool operator==(const WreathElement&) const = default;
};

WreathElement wreath_mult(const WreathElement& a, const WreathElement& b,
                          int r);
WreathElement wreath_inverse(const WreathElement& a, int r);

// Number of cycles whose color product is zeta^0.  For r = 1 this is the
// plain cycle count; in general it equals dim ker(x - 1).
int ell(const WreathElement& x, int r);

WreathType wreath_type_of(const WreathElement& x, int r);

// Descents.  For r = 1, positions i with pi(i) > pi(i+1).  For r >= 2,
// Steingrimsson-style descents of the window 0, x_1, ..., x_n in the
// colored-letter order where all nonzero-colored letters sit below the
// sentinel 0 and all 0-colored letters above it:
//   zeta^a j < zeta^b k  iff a > b, or a = b != 0 and j > k,
//                            or a = b = 0 and j < k.
// For r = 2 this is the natural order -n < ... < -1 < 0 < 1 < ... < n.
int descent_count(const WreathElement& x, int r);

Integer group_order(int r, int n);

// All r^n n! elements, permutations in lexicographic order, color vectors
// in odometer order within each permutation.  Throws CapExceeded if the
// group is larger than cap.
std::vector<WreathElement> enumerate_group(int r, int n,
                                           long cap = kDefaultGroupCap);

// Fully indexed copy of a small group: elements in enumeration order with
// cached statistics, conjugacy classes keyed by wreath type, and O(n^2)
// rank-based index lookup (no hashing).
class GroupTable {
 public:
  GroupTable(int r, int n, long cap = kDefaultGroupCap);

  int r() const { return r_; }
  int n() const { return n_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<WreathElement>& elements() const { return elements_; }
  const WreathElement& element(long i) const { return elements_[i]; }
  int ell_of(long i) const { return ell_[i]; }
  int des_of(long i) const { return des_[i]; }
  int class_of(long i) const { return class_[i]; }

  int class_count() const { return static_cast<int>(class_types_.size()); }
  const WreathType& class_type(int c) const { return class_types_[c]; }
  long class_size(int c) const { return class_sizes_[c]; }
  long class_representative(int c) const { return class_rep_[c]; }
  int class_id(const WreathType& t) const;

  long index_of(const WreathElement& x) const;
  long product_index(long a, long b) const;
  long inverse_index(long a) const;

  // Shared per-(r, n) instance.
  static const GroupTable& cached(int r, int n, long cap = kDefaultGroupCap);

 private:
  int r_, n_;
  std::vector<WreathElement> elements_;
  std::vector<int> ell_, des_, class_;
  std::vector<WreathType> class_types_;
  std::vector<long> class_sizes_;
  std::vector<long> class_rep_;
  std::vector<long> perm_rank_factorials_;
  long color_span_;  // r^n
};

}  // namespace foulkes
