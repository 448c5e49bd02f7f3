#pragma once

#include <cstdint>
#include <vector>

#include "foulkes/matrix.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

inline constexpr long kDefaultTupleCap = 10000000;

// Ordinary chain: carries from adding n random base-b numbers, states
// 0..n-1.  Balanced chain: N numbers with balanced digits in odd base b,
// matrix index i standing for carry i - N/2, states 0..N.
struct CarriesFlavor {
  bool balanced = false;
  int n = 0;  // number of addends (N for the balanced chain, even)
  int base = 0;

  int state_count() const { return balanced ? n + 1 : n; }
};

void validate_flavor(const CarriesFlavor& f);

struct CarriesChain {
  CarriesFlavor flavor;
  Matrix<Rational> M;
};

// M = Phi^{-t} diag(b^0, b^-1, ...) Phi^t in exact rationals, from
// phi_table(1, n) for the ordinary chain and phi_table(2, N) balanced.
CarriesChain chain_spectral(const CarriesFlavor& f);

// M(i,j) = [phi_i, b^{ell-n} phi_j] through the spectral bracket; must
// coincide with chain_spectral exactly (ConsistencyError otherwise).
CarriesChain chain_bracket(const CarriesFlavor& f);

// Exact transition probabilities by enumerating all b^n digit tuples.
CarriesChain carries_enumerate(const CarriesFlavor& f,
                               long tuple_cap = kDefaultTupleCap);

struct CarriesSimulation {
  Matrix<long> counts;      // transitions i -> j observed
  std::vector<long> visits; // departures from state i
  Matrix<Rational> freq;    // counts/visits (0 when never visited)
};

// Seeded trajectory of the carries process started at carry 0; the PRNG is
// mt19937_64 with rejection-sampled bounded draws, so runs are reproducible
// for a fixed seed.
CarriesSimulation carries_simulate(const CarriesFlavor& f, long steps,
                                   std::uint64_t seed);

}  // namespace foulkes
