#include "foulkes/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "foulkes/combinatorics.hpp"

namespace foulkes {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& o) const {
  Permutation out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[i] = img[o.img[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[img[i]] = static_cast<int>(i);
  return out;
}

WreathElement WreathElement::identity(int n) {
  return WreathElement{Permutation::identity(n), std::vector<int>(n, 0)};
}

WreathElement wreath_mult(const WreathElement& a, const WreathElement& b,
                          int r) {
  int n = a.size();
  WreathElement out;
  out.perm = a.perm.compose(b.perm);
  out.colors.resize(n);
  for (int k = 0; k < n; ++k)
    out.colors[a.perm(k)] = (a.colors[a.perm(k)] + b.colors[k]) % r;
  return out;
}

WreathElement wreath_inverse(const WreathElement& a, int r) {
  int n = a.size();
  WreathElement out;
  out.perm = a.perm.inverse();
  out.colors.resize(n);
  for (int i = 0; i < n; ++i)
    out.colors[i] = (r - a.colors[a.perm(i)]) % r;
  return out;
}

// Visits each cycle of x.perm once, reporting its length and color sum.
template <typename F>
static void for_each_cycle(const WreathElement& x, int r, F&& f) {
  int n = x.size();
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0, colorsum = 0;
    int i = start;
    do {
      seen[i] = true;
      ++len;
      colorsum += x.colors[i];
      i = x.perm(i);
    } while (i != start);
    f(len, colorsum % r);
  }
}

int ell(const WreathElement& x, int r) {
  int count = 0;
  for_each_cycle(x, r, [&](int, int colorclass) {
    if (colorclass == 0) ++count;
  });
  return count;
}

WreathType wreath_type_of(const WreathElement& x, int r) {
  WreathType t;
  t.components.assign(r, Partition{});
  for_each_cycle(x, r, [&](int len, int colorclass) {
    t.components[colorclass].push_back(len);
  });
  for (Partition& p : t.components)
    std::sort(p.begin(), p.end(), std::greater<int>());
  return t;
}

int descent_count(const WreathElement& x, int r) {
  int n = x.size();
  if (r == 1) {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (x.perm(i) > x.perm(i + 1)) ++d;
    return d;
  }
  // rank of letter zeta^a v (v 1-based): 0-colored letters above the
  // sentinel in natural order, nonzero colors below it, higher color lower,
  // larger value lower within a nonzero color.
  auto rank = [&](int i) {
    int a = x.colors[i];
    int v = x.perm(i) + 1;
    return a == 0 ? v : -((a - 1) * n + v);
  };
  int d = 0;
  int prev = 0;  // sentinel
  for (int i = 0; i < n; ++i) {
    int cur = rank(i);
    if (prev > cur) ++d;
    prev = cur;
  }
  return d;
}

Integer group_order(int r, int n) {
  return int_pow(Integer(r), n) * factorial(n);
}

std::vector<WreathElement> enumerate_group(int r, int n, long cap) {
  if (r < 1 || n < 0) throw std::invalid_argument("bad (r, n)");
  Integer size = group_order(r, n);
  if (cmp(size, cap) > 0)
    throw CapExceeded("group G(" + std::to_string(r) + ",1," +
                      std::to_string(n) + ") has " + size.get_str() +
                      " elements, exceeding the enumeration cap " +
                      std::to_string(cap));
  std::vector<WreathElement> out;
  out.reserve(size.get_ui());
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    WreathElement x;
    x.perm.img = base;
    x.colors.assign(n, 0);
    while (true) {
      out.push_back(x);
      int i = n - 1;
      while (i >= 0 && ++x.colors[i] == r) {
        x.colors[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

GroupTable::GroupTable(int r, int n, long cap) : r_(r), n_(n) {
  elements_ = enumerate_group(r, n, cap);
  long g = order();
  ell_.resize(g);
  des_.resize(g);
  class_.resize(g);

  class_types_ = wreath_types(r, n);
  std::map<WreathType, int> type_id;
  for (size_t c = 0; c < class_types_.size(); ++c)
    type_id[class_types_[c]] = static_cast<int>(c);
  class_sizes_.assign(class_types_.size(), 0);
  class_rep_.assign(class_types_.size(), -1);

  for (long i = 0; i < g; ++i) {
    const WreathElement& x = elements_[i];
    ell_[i] = ell(x, r);
    des_[i] = descent_count(x, r);
    int c = type_id.at(wreath_type_of(x, r));
    class_[i] = c;
    ++class_sizes_[c];
    if (class_rep_[c] < 0) class_rep_[c] = i;
  }

  perm_rank_factorials_.assign(std::max(n, 1), 1);
  for (int i = 1; i < n; ++i)
    perm_rank_factorials_[i] = perm_rank_factorials_[i - 1] * i;
  color_span_ = 1;
  for (int i = 0; i < n; ++i) color_span_ *= r;
}

int GroupTable::class_id(const WreathType& t) const {
  for (size_t c = 0; c < class_types_.size(); ++c)
    if (class_types_[c] == t) return static_cast<int>(c);
  throw std::invalid_argument("unknown wreath type " + to_string(t));
}

long GroupTable::index_of(const WreathElement& x) const {
  // Lehmer rank of the permutation, then the color odometer value.
  long rank = 0;
  const auto& img = x.perm.img;
  for (int i = 0; i < n_; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n_; ++j)
      if (img[j] < img[i]) ++smaller_after;
    if (n_ - 1 - i > 0)
      rank += smaller_after * perm_rank_factorials_[n_ - 1 - i];
  }
  long colorval = 0;
  for (int i = 0; i < n_; ++i) colorval = colorval * r_ + x.colors[i];
  return rank * color_span_ + colorval;
}

long GroupTable::product_index(long a, long b) const {
  return index_of(wreath_mult(elements_[a], elements_[b], r_));
}

long GroupTable::inverse_index(long a) const {
  return index_of(wreath_inverse(elements_[a], r_));
}

const GroupTable& GroupTable::cached(int r, int n, long cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(r, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GroupTable>(r, n, cap)).first;
  return *it->second;
}

}  // namespace foulkes
