#include "foulkes/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "foulkes/combinatorics.hpp"

namespace foulkes {

int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

static void partitions_rec(int n, int max_part, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of negative n");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  if (n == 0) out = {Partition{}};
  return out;
}

std::vector<BoxData> partition_boxes(const Partition& p, bool in_component0) {
  std::vector<BoxData> boxes;
  for (size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (size_t k = i + 1; k < p.size(); ++k)
        if (p[k] > j) ++leg;
      BoxData b;
      b.content = j - static_cast<int>(i);
      b.hook = p[i] - j + leg;
      b.in_component0 = in_component0;
      boxes.push_back(b);
    }
  }
  return boxes;
}

int WreathType::weight() const {
  int w = 0;
  for (const Partition& p : components) w += partition_weight(p);
  return w;
}

static void types_rec(int comp, int remaining, int r,
                      std::vector<Partition>& cur,
                      std::vector<WreathType>& out) {
  if (comp == r - 1) {
    for (const Partition& p : partitions_of(remaining)) {
      cur.push_back(p);
      out.push_back(WreathType{cur});
      cur.pop_back();
    }
    return;
  }
  for (int w = 0; w <= remaining; ++w)
    for (const Partition& p : partitions_of(w)) {
      cur.push_back(p);
      types_rec(comp + 1, remaining - w, r, cur, out);
      cur.pop_back();
    }
}

std::vector<WreathType> wreath_types(int r, int n) {
  if (r < 1) throw std::invalid_argument("wreath_types with r < 1");
  std::vector<WreathType> out;
  std::vector<Partition> cur;
  types_rec(0, n, r, cur, out);
  return out;
}

std::vector<BoxData> wreath_type_boxes(const WreathType& t) {
  std::vector<BoxData> boxes;
  for (size_t j = 0; j < t.components.size(); ++j) {
    auto part = partition_boxes(t.components[j], j == 0);
    boxes.insert(boxes.end(), part.begin(), part.end());
  }
  return boxes;
}

Integer wreath_class_size(const WreathType& t, int r) {
  int n = t.weight();
  Integer z = 1;
  for (const Partition& p : t.components) {
    std::map<int, int> mult;
    for (int part : p) ++mult[part];
    for (auto [part, m] : mult)
      z *= int_pow(Integer(part) * r, m) * factorial(m);
  }
  Integer order = int_pow(Integer(r), n) * factorial(n);
  Integer size, rem;
  mpz_tdiv_qr(size.get_mpz_t(), rem.get_mpz_t(), order.get_mpz_t(),
              z.get_mpz_t());
  if (rem != 0) throw std::logic_error("centralizer order does not divide |G|");
  return size;
}

std::string to_string(const WreathType& t) {
  std::string s;
  for (size_t j = 0; j < t.components.size(); ++j) {
    if (j) s += ";";
    if (t.components[j].empty()) s += "-";
    for (size_t i = 0; i < t.components[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.components[j][i]);
    }
  }
  return "(" + s + ")";
}

}  // namespace foulkes
