#include "foulkes/carries.hpp"

#include <random>
#include <stdexcept>

#include "foulkes/char_values.hpp"
#include "foulkes/combinatorics.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/foulkes_table.hpp"
#include "foulkes/inner_product.hpp"

namespace foulkes {

void validate_flavor(const CarriesFlavor& f) {
  if (f.balanced) {
    if (f.n < 2 || f.n % 2 != 0)
      throw std::invalid_argument("balanced chain needs even N >= 2");
    if (f.base < 3 || f.base % 2 == 0)
      throw std::invalid_argument("balanced chain needs odd base >= 3");
  } else {
    if (f.n < 1) throw std::invalid_argument("carries chain needs n >= 1");
    if (f.base < 2) throw std::invalid_argument("carries chain needs base >= 2");
  }
}

CarriesChain chain_spectral(const CarriesFlavor& f) {
  validate_flavor(f);
  int r = f.balanced ? 2 : 1;
  int dim = f.state_count();
  FoulkesTable phi = phi_table(r, f.n);
  Matrix<Rational> lambda = eps_coeff_matrix(r, f.n);
  CarriesChain chain;
  chain.flavor = f;
  chain.M.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational acc(0);
      for (int k = 0; k < dim; ++k)
        acc += lambda[i][k] * rat_pow(Rational(f.base), -k) *
               Rational(phi.entries[j][k]);
      chain.M[i][j] = acc;
    }
  return chain;
}

CarriesChain chain_bracket(const CarriesFlavor& f) {
  validate_flavor(f);
  int r = f.balanced ? 2 : 1;
  int dim = f.state_count();
  FoulkesTable phi = phi_table(r, f.n);
  CarriesChain chain;
  chain.flavor = f;
  chain.M.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (int j = 0; j < dim; ++j) {
    // b^{ell-n} phi_j as a length class function
    LengthClassFunction scaled = phi_row(phi, j);
    for (int l = scaled.ell_min(); l <= f.n; ++l)
      scaled.at_ell(l) *= rat_pow(Rational(f.base), l - f.n);
    for (int i = 0; i < dim; ++i)
      chain.M[i][j] = bracket_spectral(phi_row(phi, i), scaled);
  }
  CarriesChain spectral = chain_spectral(f);
  if (!(chain.M == spectral.M))
    throw ConsistencyError("chain_bracket: disagrees with chain_spectral");
  return chain;
}

CarriesChain carries_enumerate(const CarriesFlavor& f, long tuple_cap) {
  validate_flavor(f);
  Integer tuples = int_pow(Integer(f.base), f.n);
  if (cmp(tuples, tuple_cap) > 0)
    throw CapExceeded("digit enumeration needs " + tuples.get_str() +
                      " tuples, exceeding the cap " +
                      std::to_string(tuple_cap));
  // Tally of digit sums over all tuples, by literal odometer enumeration.
  int n = f.n, b = f.base;
  int maxsum = f.balanced ? n * ((b - 1) / 2) : n * (b - 1);
  int minsum = f.balanced ? -maxsum : 0;
  std::vector<Integer> sum_count(maxsum - minsum + 1, 0);
  std::vector<int> digit(n, 0);  // offsets 0..b-1; balanced digit = offset - (b-1)/2
  int offset = f.balanced ? (b - 1) / 2 : 0;
  while (true) {
    int s = 0;
    for (int d : digit) s += d - offset;
    ++sum_count[s - minsum];
    int i = n - 1;
    while (i >= 0 && ++digit[i] == b) {
      digit[i] = 0;
      --i;
    }
    if (i < 0) break;
  }

  int dim = f.state_count();
  CarriesChain chain;
  chain.flavor = f;
  chain.M.assign(dim, std::vector<Rational>(dim, Rational(0)));
  Rational denom(tuples);
  for (int idx = 0; idx < dim; ++idx) {
    int carry = f.balanced ? idx - n / 2 : idx;
    for (int s = minsum; s <= maxsum; ++s) {
      const Integer& cnt = sum_count[s - minsum];
      if (cnt == 0) continue;
      int total = carry + s;
      int next;
      if (f.balanced) {
        int h = (b - 1) / 2;
        next = (total + h) >= 0 ? (total + h) / b
                                : -(((-(total + h)) + b - 1) / b);
      } else {
        next = total / b;  // total >= 0 here
      }
      int next_idx = f.balanced ? next + n / 2 : next;
      if (next_idx < 0 || next_idx >= dim)
        throw ConsistencyError("carries_enumerate: carry left the state space");
      chain.M[idx][next_idx] += Rational(cnt) / denom;
    }
  }
  return chain;
}

namespace {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t m) {
  // rejection sampling keeps the draw exactly uniform and portable
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % m);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

}  // namespace

CarriesSimulation carries_simulate(const CarriesFlavor& f, long steps,
                                   std::uint64_t seed) {
  validate_flavor(f);
  if (steps < 1) throw std::invalid_argument("simulation needs steps >= 1");
  int n = f.n, b = f.base;
  int dim = f.state_count();
  int offset = f.balanced ? (b - 1) / 2 : 0;
  std::mt19937_64 rng(seed);
  CarriesSimulation sim;
  sim.counts.assign(dim, std::vector<long>(dim, 0));
  sim.visits.assign(dim, 0);
  int state = f.balanced ? n / 2 : 0;  // carry 0
  for (long t = 0; t < steps; ++t) {
    int carry = f.balanced ? state - n / 2 : state;
    int s = 0;
    for (int i = 0; i < n; ++i)
      s += static_cast<int>(bounded_draw(rng, b)) - offset;
    int total = carry + s;
    int next;
    if (f.balanced) {
      int h = (b - 1) / 2;
      next = (total + h) >= 0 ? (total + h) / b
                              : -(((-(total + h)) + b - 1) / b);
    } else {
      next = total / b;
    }
    int next_idx = f.balanced ? next + n / 2 : next;
    ++sim.counts[state][next_idx];
    ++sim.visits[state];
    state = next_idx;
  }
  sim.freq.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i)
    if (sim.visits[i] > 0)
      for (int j = 0; j < dim; ++j)
        sim.freq[i][j] = Rational(sim.counts[i][j], sim.visits[i]);
  return sim;
}

}  // namespace foulkes
