#include "foulkes/products.hpp"

#include <stdexcept>

#include "foulkes/combinatorics.hpp"
#include "foulkes/foulkes_table.hpp"

namespace foulkes {

static ProductTensor make_tensor(int r, int n) {
  ProductTensor t;
  t.r = r;
  t.n = n;
  t.dim = (r == 1) ? n : n + 1;
  t.c.assign(static_cast<size_t>(t.dim) * t.dim * t.dim, Integer(0));
  return t;
}

ProductTensor c_spectral(int r, int n) {
  ProductTensor t = make_tensor(r, n);
  FoulkesTable phi = phi_table(r, n);
  for (int i = 0; i < t.dim; ++i)
    for (int j = i; j < t.dim; ++j) {
      LengthClassFunction prod;
      prod.r = r;
      prod.n = n;
      prod.values.resize(t.dim);
      for (int l = prod.ell_min(); l <= n; ++l)
        prod.at_ell(l) = Rational(phi.value(i, l) * phi.value(j, l));
      std::vector<Rational> coeffs = decompose_length_function(prod);
      for (int k = 0; k < t.dim; ++k) {
        t.at(i, j, k) = to_integer(coeffs[k]);
        t.at(j, i, k) = t.at(i, j, k);
      }
    }
  return t;
}

Integer c_closed_form(int r, int n, int i, int j, int k) {
  Integer acc = 0;
  for (int u = 0; u <= i; ++u)
    for (int v = 0; v <= j; ++v) {
      Integer term = binom_int(Integer(n + 1), i - u) *
                     binom_int(Integer(n + 1), j - v) *
                     binom_int(Integer(r * u * v + u + v + n - k), n);
      acc += ((i - u + j - v) % 2 == 0) ? term : -term;
    }
  return acc;
}

ProductTensor c_closed_form_tensor(int r, int n) {
  ProductTensor t = make_tensor(r, n);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k) t.at(i, j, k) = c_closed_form(r, n, i, j, k);
  return t;
}

Matrix<Integer> c_combinatorial_slice(const GroupTable& G, long z_index) {
  int dim = (G.r() == 1) ? G.n() : G.n() + 1;
  Matrix<Integer> out(dim, std::vector<Integer>(dim, Integer(0)));
  const WreathElement& z = G.element(z_index);
  for (long a = 0; a < G.order(); ++a) {
    WreathElement y =
        wreath_mult(wreath_inverse(G.element(a), G.r()), z, G.r());
    ++out[G.des_of(a)][descent_count(y, G.r())];
  }
  return out;
}

Integer c_combinatorial(const GroupTable& G, int i, int j, int k) {
  long z = -1;
  for (long e = 0; e < G.order(); ++e)
    if (G.des_of(e) == k) {
      z = e;
      break;
    }
  if (z < 0)
    throw std::out_of_range("no element with " + std::to_string(k) +
                            " descents in G(" + std::to_string(G.r()) + ",1," +
                            std::to_string(G.n()) + ")");
  return c_combinatorial_slice(G, z)[i][j];
}

ProductTensor c_delsarte(int n) {
  if (n < 1) throw std::invalid_argument("c_delsarte needs n >= 1");
  std::vector<Matrix<Integer>> F = delsarte_f_tables(n);

  ProductTensor cur = make_tensor(1, 1);
  cur.at(0, 0, 0) = 1;
  for (int m = 1; m < n; ++m) {
    // Build the tensor for S_{m+1} from the one for S_m.
    ProductTensor next = make_tensor(1, m + 1);
    const Matrix<Integer>& phi = F[m];  // phi_i(C_l) = F[m][m+1-l][i]
    std::vector<Integer> cyc = stirling_cycle_row(m + 1);
    Integer fact = factorial(m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        // k = 0 slice: the multiplicity of phi_0 in phi_i phi_j is the
        // plain inner product <phi_i, phi_j> over S_{m+1}.
        Integer num = 0;
        for (int l = 1; l <= m + 1; ++l)
          num += cyc[l] * phi[m + 1 - l][i] * phi[m + 1 - l][j];
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    fact.get_mpz_t());
        if (rem != 0)
          throw ConsistencyError("c_delsarte: non-integral k=0 slice");
        next.at(i, j, 0) = q;
      }
    auto prev_at = [&](int i, int j, int k) -> Integer {
      if (i < 0 || j < 0 || k < 0 || i >= cur.dim || j >= cur.dim ||
          k >= cur.dim)
        return 0;
      return cur.at(i, j, k);
    };
    for (int k = 1; k <= m; ++k)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
          if (i == 0) {
            next.at(i, j, k) = (j == k) ? 1 : 0;
          } else if (j == 0) {
            next.at(i, j, k) = (i == k) ? 1 : 0;
          } else {
            next.at(i, j, k) =
                next.at(i, j, k - 1) - prev_at(i - 1, j - 1, k - 1) +
                prev_at(i, j - 1, k - 1) + prev_at(i - 1, j, k - 1) -
                prev_at(i, j, k - 1);
          }
        }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace foulkes
