#include "foulkes/inner_product.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "foulkes/char_values.hpp"
#include "foulkes/combinatorics.hpp"

namespace foulkes {

ExpectationKernel kernel_for_sequence(const ClassSequence& seq,
                                      const GroupTable& G) {
  if (seq.r != G.r() || seq.n != G.n())
    throw std::invalid_argument("sequence/group mismatch");
  int nc = G.class_count();
  long g = G.order();

  std::vector<std::vector<long>> members(nc);
  for (long e = 0; e < g; ++e) members[G.class_of(e)].push_back(e);

  // Distribution of k_1...k_m over classes, starting from the empty
  // product at the identity class.
  std::vector<Rational> dist(nc, Rational(0));
  dist[G.class_of(0)] = 1;
  for (const WreathType& K : seq.classes) {
    int kc = G.class_id(K);
    const std::vector<long>& kt = members[kc];
    std::vector<Rational> next(nc, Rational(0));
    for (int d = 0; d < nc; ++d) {
      if (dist[d] == 0) continue;
      std::vector<long> counts(nc, 0);
      const WreathElement& rep = G.element(G.class_representative(d));
      for (long ke : kt)
        ++counts[G.class_of(G.index_of(
            wreath_mult(rep, G.element(ke), G.r())))];
      Rational scale = dist[d] / Rational(static_cast<long>(kt.size()));
      for (int c = 0; c < nc; ++c)
        if (counts[c]) next[c] += scale * counts[c];
    }
    dist = std::move(next);
  }

  // Combine with factorization counts per product class.
  int dim = (G.r() == 1) ? G.n() : G.n() + 1;
  int lmin = (G.r() == 1) ? 1 : 0;
  ExpectationKernel ker;
  ker.r = G.r();
  ker.n = G.n();
  ker.mu.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (int c = 0; c < nc; ++c) {
    if (dist[c] == 0) continue;
    const WreathElement& x = G.element(G.class_representative(c));
    Matrix<long> f(dim, std::vector<long>(dim, 0));
    for (long a = 0; a < g; ++a) {
      int li = G.ell_of(a);
      int lj = ell(wreath_mult(x, G.element(a), G.r()), G.r());
      ++f[li - lmin][lj - lmin];
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (f[i][j]) ker.mu[i][j] += dist[c] * f[i][j];
  }
  ker.provenance = "sequence of " + std::to_string(seq.classes.size()) +
                   " classes";
  return ker;
}

static WreathType single_component_type(int r, int s, const Partition& p) {
  WreathType t;
  t.components.assign(r, Partition{});
  t.components[s] = p;
  return t;
}

std::vector<std::pair<Rational, ClassSequence>> canonical_mixture(int r,
                                                                  int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("canonical_mixture: bad (r,n)");
  std::vector<std::pair<Rational, ClassSequence>> mix;
  WreathType full0 = single_component_type(r, 0, Partition{n});
  if (r == 1) {
    mix.push_back({Rational(1), ClassSequence{r, n, {full0, full0}}});
    return mix;
  }
  WreathType full1 = single_component_type(r, 1, Partition{n});
  if (n == 1) {
    mix.push_back({Rational(2, r), ClassSequence{r, n, {full0, full0}}});
    mix.push_back({Rational(r - 2, r), ClassSequence{r, n, {full0, full1}}});
    return mix;
  }
  WreathType split;  // ((n-1),(1),0,...)
  split.components.assign(r, Partition{});
  split.components[0] = Partition{n - 1};
  split.components[1] = Partition{1};
  WreathType two_row = single_component_type(r, 0, Partition{n - 1, 1});
  mix.push_back({Rational(1, r), ClassSequence{r, n, {full0, full0}}});
  mix.push_back({Rational(r - 2, 2 * r), ClassSequence{r, n, {full0, full1}}});
  mix.push_back({Rational(1, 4), ClassSequence{r, n, {full0, split}}});
  mix.push_back(
      {Rational(1, 2 * r),
       ClassSequence{r, n, {full0, full0, two_row, two_row}}});
  mix.push_back(
      {Rational(r - 2, 4 * r),
       ClassSequence{r, n, {full0, full0, split, two_row}}});
  return mix;
}

const ExpectationKernel& canonical_kernel(int r, int n, long cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ExpectationKernel>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(r, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  const GroupTable& G = GroupTable::cached(r, n, cap);
  int dim = (r == 1) ? n : n + 1;
  auto ker = std::make_unique<ExpectationKernel>();
  ker->r = r;
  ker->n = n;
  ker->mu.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (const auto& [weight, seq] : canonical_mixture(r, n)) {
    if (weight == 0) continue;
    ExpectationKernel part = kernel_for_sequence(seq, G);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) ker->mu[i][j] += weight * part.mu[i][j];
  }
  ker->provenance = (r == 1) ? "n-cycle pair" : "canonical mixture mu";
  it = cache.emplace(key, std::move(ker)).first;
  return *it->second;
}

Rational bracket(const LengthClassFunction& theta,
                 const LengthClassFunction& psi,
                 const ExpectationKernel& kernel) {
  if (theta.r != kernel.r || theta.n != kernel.n || psi.r != kernel.r ||
      psi.n != kernel.n)
    throw std::invalid_argument("bracket: dimension mismatch");
  Rational acc(0);
  int lmin = kernel.ell_min();
  for (int li = lmin; li <= kernel.n; ++li)
    for (int lj = lmin; lj <= kernel.n; ++lj) {
      const Rational& m = kernel.at(li, lj);
      if (m != 0) acc += theta.at_ell(li) * psi.at_ell(lj) * m;
    }
  return acc / Rational(group_order(kernel.r, kernel.n));
}

Rational bracket_spectral(const LengthClassFunction& theta,
                          const LengthClassFunction& psi) {
  if (theta.r != psi.r || theta.n != psi.n)
    throw std::invalid_argument("bracket_spectral: dimension mismatch");
  std::vector<Rational> a = decompose_length_function(theta);
  std::vector<Rational> b = decompose_length_function(psi);
  Rational acc(0);
  for (size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

static bool has_full_cycle_component(const WreathType& t, int n) {
  for (const Partition& p : t.components)
    if (p == Partition{n}) return true;
  return false;
}

Rational xi_value(const ClassSequence& seq, int i, long cap) {
  if (seq.classes.empty() ||
      !has_full_cycle_component(seq.classes.front(), seq.n))
    throw std::invalid_argument(
        "xi_value: first class must have a component equal to (n)");
  const GroupTable& G = GroupTable::cached(seq.r, seq.n, cap);
  ExpectationKernel ker = kernel_for_sequence(seq, G);
  FoulkesTable t = phi_table(seq.r, seq.n);
  Rational diag;
  for (int u = 0; u < t.rows(); ++u)
    for (int v = u; v < t.rows(); ++v) {
      Rational b = bracket(phi_row(t, u), phi_row(t, v), ker);
      if (u == v && u == i) diag = b;
      if (u != v && b != 0)
        throw ConsistencyError("xi_value: [phi_" + std::to_string(u) +
                               ", phi_" + std::to_string(v) +
                               "] nonzero for this sequence");
    }
  return diag;
}

Matrix<Rational> single_class_orthogonality(int r, int n,
                                            const WreathType& sigma_class,
                                            long cap) {
  const GroupTable& G = GroupTable::cached(r, n, cap);
  ExpectationKernel ker =
      kernel_for_sequence(ClassSequence{r, n, {sigma_class}}, G);
  FoulkesTable t = phi_table(r, n);
  Matrix<Rational> out(t.rows(), std::vector<Rational>(t.rows()));
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.rows(); ++j)
      out[i][j] = bracket(phi_row(t, i), phi_row(t, j), ker);
  return out;
}

// Exact square root of a rational known to be a square of a rational.
static Rational rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw ConsistencyError("gram_schmidt: negative norm");
  Integer num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw ConsistencyError("gram_schmidt: norm is not a perfect square");
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

GramSchmidtResult gram_schmidt_foulkes(int r, int n) {
  int dim = (r == 1) ? n : n + 1;
  std::vector<LengthClassFunction> v(dim), w(dim);
  for (int u = 0; u < dim; ++u)
    v[u] = power_length_function(r, n, Rational(r * u + 1));

  Matrix<Rational> L(dim, std::vector<Rational>(dim, Rational(0)));
  for (int u = 0; u < dim; ++u) {
    w[u] = v[u];
    L[u][u] = 1;
    for (int t = 0; t < u; ++t) {
      Rational proj =
          bracket_spectral(v[u], w[t]) / bracket_spectral(w[t], w[t]);
      if (proj == 0) continue;
      for (int l = 0; l < dim; ++l) w[u].values[l] -= proj * w[t].values[l];
      for (int l = 0; l < dim; ++l) L[u][l] -= proj * L[t][l];
    }
    Rational norm2 = bracket_spectral(w[u], w[u]);
    Rational scale = rational_sqrt(norm2);
    if (scale != 1) {
      for (int l = 0; l < dim; ++l) w[u].values[l] /= scale;
      for (int l = 0; l < dim; ++l) L[u][l] /= scale;
    }
    if (sgn(L[u][u]) < 0) {
      for (int l = 0; l < dim; ++l) w[u].values[l] = -w[u].values[l];
      for (int l = 0; l < dim; ++l) L[u][l] = -L[u][l];
    }
  }

  GramSchmidtResult res;
  res.table.r = r;
  res.table.n = n;
  res.table.entries.assign(dim, std::vector<Integer>(dim));
  for (int u = 0; u < dim; ++u)
    for (int j = 0; j < dim; ++j)
      res.table.entries[u][j] = to_integer(w[u].at_ell(n - j));
  res.change_of_basis = std::move(L);
  if (!(res.table == phi_table(r, n)))
    throw ConsistencyError("gram_schmidt_foulkes: output differs from Phi");
  return res;
}

}  // namespace foulkes
