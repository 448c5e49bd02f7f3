#pragma once

#include <vector>

#include "foulkes/rational.hpp"

namespace foulkes {

Integer factorial(int n);

// Generalized binomial coefficient m(m-1)...(m-k+1)/k! for any integer m
// and k >= 0.  Always an integer; agrees with the standard binomial for
// m >= 0 and equals (-1)^k C(k-m-1, k) for negative m.
Integer binom_int(const Integer& m, int k);

inline Integer binom_int(long m, int k) { return binom_int(Integer(m), k); }

Integer int_pow(const Integer& base, unsigned e);
Rational rat_pow(const Rational& base, long e);

// Row n of the Eulerian triangle: entry k counts permutations of S_n with
// exactly k descents (k = 0..max(n-1,0)).  Row 0 is {1}.
std::vector<Integer> eulerian_row(int n);

// Unsigned Stirling numbers of the first kind: entry l counts permutations
// of S_n with exactly l cycles (l = 0..n).
std::vector<Integer> stirling_cycle_row(int n);

}  // namespace foulkes
