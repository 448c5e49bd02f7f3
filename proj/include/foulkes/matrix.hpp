#pragma once

#include <stdexcept>
#include <vector>

namespace foulkes {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
Matrix<T> matrix_identity(int n) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (int i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <typename T>
Matrix<T> matrix_transpose(const Matrix<T>& a) {
  if (a.empty()) return {};
  Matrix<T> out(a[0].size(), std::vector<T>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

template <typename T>
Matrix<T> matrix_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> out(a.size(), std::vector<T>(b[0].size(), T(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == T(0)) continue;
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace foulkes
