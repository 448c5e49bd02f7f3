#pragma once

#include <string>
#include <vector>

#include "foulkes/rational.hpp"

namespace foulkes {

// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);

// All partitions of n, largest-first parts, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

// One box of a Young diagram together with the data the hook content
// formulas consume.
struct BoxData {
  int content;         // column - row, 0-based
  int hook;            // arm + leg + 1
  bool in_component0;  // whether the box lies in the 0-th component
};

std::vector<BoxData> partition_boxes(const Partition& p, bool in_component0);

// Conjugacy type of an element of G(r,1,n): one partition per color class,
// total weight n.
struct WreathType {
  std::vector<Partition> components;

  int weight() const;
  auto operator<=>(const WreathType&) const = default;
};

// All types of weight n for G(r,1,n), in a fixed deterministic order.
std::vector<WreathType> wreath_types(int r, int n);

std::vector<BoxData> wreath_type_boxes(const WreathType& t);

// |K_lambda| = |G| / z_lambda with z_lambda the standard centralizer order
// prod_j prod_k (k r)^{m_k(lambda^j)} m_k(lambda^j)!.
Integer wreath_class_size(const WreathType& t, int r);

std::string to_string(const WreathType& t);

}  // namespace foulkes
