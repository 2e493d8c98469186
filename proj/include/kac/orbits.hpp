/*
  orbits.hpp — independent verification paths: brute-force counting of
  connected inversion-coordinate assignments over F_p, torus-orbit counting
  on products of partial flag varieties, the Stirling-number orbit count for
  configurations of points on a line, and polynomial recovery by
  interpolating oracle values at several primes.
*/
#pragma once

#include <map>
#include <vector>

#include "kac/bruhat.hpp"
#include "kac/exactmath.hpp"
#include "kac/quiver.hpp"

namespace kac {

// Stirling number of the second kind, S(0,0) = 1
Int stirling2(int r, int m);

// sum over m = 3..r of S(r,m) C_m with C_3 = 1 and
// C_m = (q-2)(q-3)...(q-(m-2)) for m > 3; requires r >= 3
IntPoly gm_orbit_count(int r);

// number of F_p assignments to the inversion coordinates of wt whose
// nonzero-coordinate graph spans all r vertices; enumerates all p^m tuples
long long oracle_cell_count(const PermTuple& wt, int p,
                            long long budget = 100'000'000);

struct FlagOrbitReport {
  // torus orbits of rational points whose stabilizer is exactly the scalars
  long long orbit_count = 0;
  // counted orbits keyed by the stabilizer size of the first leg's chain
  std::map<long long, long long> strata;
  long long point_count = 0;
};

// enumerates the product of partial flag varieties attached to mu over F_p
// and counts torus orbits as above; BadPrime for p = 2 or composite p,
// TooLarge when point count times torus order exceeds the budget
FlagOrbitReport oracle_flag_orbits(const MultiPartition& mu, int p,
                                   long long budget = 10'000'000);

// interpolates oracle_flag_orbits counts at the given primes; needs at
// least delta(v_mu) + 2 of them (and always at least one)
IntPoly kac_via_oracle(const MultiPartition& mu, const std::vector<int>& primes);

}  // namespace kac
