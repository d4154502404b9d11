#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eep/combinatorics.hpp"

namespace eep {

/// Enumeration limits; the defaults keep a sweep at desk scale.
struct OracleBudget {
    long max_tn = 40;                        // bound on t * n
    long long max_candidates = 100000000;    // bound on (t(n-1)+1)^m
};

/// Majorization membership test for the dilated permutahedron t*Pi_n:
/// the coordinate sum is t*n(n+1)/2 and for k = 1..n-1 the k largest
/// entries sum to at most t*(n + (n-1) + ... + (n-k+1)). Uses only the
/// definition of Pi_n, independent of every formula under test.
bool in_dilated_permutahedron(const std::vector<long long>& x, long t);

/// Brute-force count of lattice points of t*Pi_n fixed by a permutation
/// of the given cycle type: enumerates integer vectors constant on
/// cycles with entries in [t, tn]. Throws input_error with a bound report
/// when the budget is exceeded.
mpz_class count_fixed_lattice_points(const CycleType& lambda, long t,
                                     const OracleBudget& budget = {});

struct SweepResult {
    long long checks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Asserts count_fixed_lattice_points == ehrhart_quasipolynomial(t)
/// for every cycle type of every n <= n_max and every 1 <= t <= t_max.
/// Mismatches are reported, not thrown.
SweepResult oracle_sweep(long n_max, long t_max, const OracleBudget& budget = {});

}  // namespace eep
