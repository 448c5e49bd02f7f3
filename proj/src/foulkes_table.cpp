#include "foulkes/foulkes_table.hpp"

#include <stdexcept>

#include "foulkes/char_values.hpp"
#include "foulkes/series.hpp"

namespace foulkes {

static int table_dim(int r, int n) { return (r == 1) ? n : n + 1; }

FoulkesTable phi_table(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("phi_table needs r, n >= 1");
  int dim = table_dim(r, n);
  FoulkesTable t;
  t.r = r;
  t.n = n;
  t.entries.assign(dim, std::vector<Integer>(dim, Integer(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      int l = n - j;
      Integer v = 0;
      for (int u = 0; u <= i; ++u) {
        Integer term = binom_int(Integer(n + 1), i - u) *
                       int_pow(Integer(r * u + 1), l);
        v += ((i - u) % 2 == 0) ? term : -term;
      }
      t.entries[i][j] = v;
    }
  return t;
}

std::vector<Integer> descent_histogram(int r, int n, long cap) {
  std::vector<Integer> hist(table_dim(r, n), 0);
  for (const WreathElement& x : enumerate_group(r, n, cap))
    ++hist[descent_count(x, r)];
  return hist;
}

FoulkesTable phi_table_recursive(int r, int n, long hist_cap) {
  if (r < 1 || n < 1)
    throw std::invalid_argument("phi_table_recursive needs r, n >= 1");
  // Base: S_1 -> [[1]]; G(r,1,0) -> [[1]].
  FoulkesTable prev;
  prev.r = r;
  prev.n = (r == 1) ? 1 : 0;
  prev.entries = {{Integer(1)}};
  int m0 = (r == 1) ? 2 : 1;
  for (int m = m0; m <= n; ++m) {
    FoulkesTable cur;
    cur.r = r;
    cur.n = m;
    int dim = table_dim(r, m);
    cur.entries.assign(dim, std::vector<Integer>(dim, Integer(0)));
    // Low-ell columns from the previous table.
    for (int l = cur.ell_min(); l <= m - 1; ++l) {
      int jc = m - l;          // column in cur
      int jp = (m - 1) - l;    // column in prev
      for (int i = 0; i < dim; ++i) {
        Integer v = 0;
        if (i < prev.rows()) v += prev.entries[i][jp];
        if (i - 1 >= 0 && i - 1 < prev.rows()) v -= prev.entries[i - 1][jp];
        cur.entries[i][jc] = v;
      }
    }
    // Identity column from the descent histogram.
    std::vector<Integer> hist = descent_histogram(r, m, hist_cap);
    for (int i = 0; i < dim; ++i) cur.entries[i][0] = hist[i];
    prev = std::move(cur);
  }
  return prev;
}

std::vector<Matrix<Integer>> delsarte_f_tables(int n) {
  if (n < 1) throw std::invalid_argument("delsarte_f_tables needs n >= 1");
  std::vector<Matrix<Integer>> F;
  for (int m = 0; m <= n - 1; ++m) {
    Matrix<Integer> fm(m + 1, std::vector<Integer>(m + 1, Integer(0)));
    std::vector<Integer> euler = eulerian_row(m + 1);
    for (int k = 0; k <= m; ++k)
      fm[0][k] = (k < static_cast<int>(euler.size())) ? euler[k] : Integer(0);
    for (int u = 1; u <= m; ++u)
      for (int i = 0; i <= m; ++i) {
        const Matrix<Integer>& pm = F[m - 1];
        Integer v = 0;
        if (u - 1 <= m - 1 && i <= m - 1) v += pm[u - 1][i];
        if (u - 1 <= m - 1 && i - 1 >= 0 && i - 1 <= m - 1)
          v -= pm[u - 1][i - 1];
        fm[u][i] = v;
      }
    F.push_back(std::move(fm));
  }
  return F;
}

FoulkesTable delsarte_table(int n) {
  FoulkesTable t;
  t.r = 1;
  t.n = n;
  t.entries = delsarte_f_tables(n).back();
  FoulkesTable direct = phi_table(1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.entries[j][i] != direct.entries[i][j])
        throw ConsistencyError(
            "delsarte_table: transpose mismatch with phi_table at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
  return t;
}

LengthClassFunction phi_row(const FoulkesTable& t, int i) {
  LengthClassFunction f;
  f.r = t.r;
  f.n = t.n;
  f.values.resize(t.rows());
  for (int l = f.ell_min(); l <= t.n; ++l)
    f.at_ell(l) = Rational(t.value(i, l));
  return f;
}

LengthClassFunction power_length_function(int r, int n, const Rational& base) {
  LengthClassFunction f;
  f.r = r;
  f.n = n;
  f.values.resize(table_dim(r, n));
  for (int l = f.ell_min(); l <= n; ++l) f.at_ell(l) = rat_pow(base, l);
  return f;
}

std::vector<Rational> decompose_length_function(
    const LengthClassFunction& theta) {
  Matrix<Rational> lambda = eps_coeff_matrix(theta.r, theta.n);
  int dim = static_cast<int>(lambda.size());
  if (theta.size() != dim)
    throw std::invalid_argument("length class function has wrong size");
  std::vector<Rational> coeffs(dim, Rational(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      coeffs[i] += lambda[i][j] * theta.at_ell(theta.n - j);
  return coeffs;
}

LengthClassFunction combine_phi(const FoulkesTable& t,
                                const std::vector<Rational>& coeffs) {
  LengthClassFunction f;
  f.r = t.r;
  f.n = t.n;
  f.values.assign(t.rows(), Rational(0));
  for (int l = f.ell_min(); l <= t.n; ++l)
    for (int i = 0; i < t.rows(); ++i)
      f.at_ell(l) += coeffs[i] * Rational(t.value(i, l));
  return f;
}

Polynomial df_generating_row(int r, int n, int j) {
  FoulkesTable t = phi_table(r, n);
  if (j < t.ell_min() || j > n)
    throw std::out_of_range("df_generating_row: class index out of range");
  std::vector<Rational> coeffs(t.rows());
  for (int i = 0; i < t.rows(); ++i) coeffs[i] = Rational(t.value(i, j));
  Polynomial row{std::move(coeffs)};

  // Operator route in Y with Y^r = X.
  int order = r * (2 * n + 4);
  TruncatedSeries s = TruncatedSeries::geometric(r, order);
  s = s.apply_euler_operator(j);
  std::vector<Rational> pc(static_cast<size_t>(r) * (n + 1) + 1, Rational(0));
  for (int u = 0; u <= n + 1; ++u) {
    // (1 - Y^r)^{n+1}
    if (static_cast<size_t>(r) * u < pc.size()) {
      Integer b = binom_int(Integer(n + 1), u);
      pc[r * u] = (u % 2 == 0) ? Rational(b) : Rational(-b);
    }
  }
  s = TruncatedSeries::from_polynomial(Polynomial(std::move(pc)), order) * s;
  for (int k = 0; k <= order; ++k) {
    Rational c = s.coefficient(k);
    if (k % r != 0 && c != 0)
      throw ConsistencyError("df_generating_row: stray power Y^" +
                             std::to_string(k));
    if (k % r == 0 && k / r > n && c != 0)
      throw ConsistencyError("df_generating_row: tail coefficient at X^" +
                             std::to_string(k / r) + " is nonzero");
    if (k % r == 0 && k / r <= n && c != row.coefficient(k / r))
      throw ConsistencyError("df_generating_row: operator route disagrees at X^" +
                             std::to_string(k / r));
  }
  return row;
}

std::vector<Rational> inversion_a_to_b(const std::vector<Rational>& a, int r,
                                       int n) {
  FoulkesTable t = phi_table(r, n);
  int dim = t.rows();
  if (static_cast<int>(a.size()) != dim)
    throw std::invalid_argument("inversion input has wrong length");
  // q(X) = sum_i a_i phi(C_i), phi(C_i) read off column n-i of Phi.
  std::vector<Rational> q(dim, Rational(0));
  for (int idx = 0; idx < dim; ++idx) {
    int l = t.ell_min() + idx;  // a-index idx corresponds to class C_l
    if (a[idx] == 0) continue;
    for (int k = 0; k < dim; ++k) q[k] += a[idx] * Rational(t.value(k, l));
  }
  return q;  // b_k = [X^{k-1}] q for r = 1, [X^k] q otherwise; same vector
}

std::vector<Rational> inversion_b_to_a(const std::vector<Rational>& b, int r,
                                       int n) {
  int dim = table_dim(r, n);
  if (static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("inversion input has wrong length");
  Polynomial p;
  for (int idx = 0; idx < dim; ++idx) {
    if (b[idx] == 0) continue;
    // r = 1: b index idx is b_{idx+1}, paired with C(X + n-(idx+1), n);
    // r >= 2: b index idx is b_idx, paired with C(n + (X-1)/r - idx, n).
    int shift = (r == 1) ? (n - idx) : (n - idx);
    p = p + binom_shift_poly(shift, n, r) * b[idx];
  }
  std::vector<Rational> a(dim);
  int lo = (r == 1) ? 1 : 0;
  if (r == 1 && p.coefficient(0) != 0)
    throw ConsistencyError("inversion_b_to_a: nonzero constant term for S_n");
  for (int idx = 0; idx < dim; ++idx) a[idx] = p.coefficient(lo + idx);
  return a;
}

}  // namespace foulkes
