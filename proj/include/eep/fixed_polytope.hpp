#pragma once

#include <gmpxx.h>

#include "eep/combinatorics.hpp"
#include "eep/poly.hpp"

namespace eep {

/// Period-2 quasipolynomial in t: one polynomial branch per parity.
struct Quasipolynomial {
    IntPoly even_branch;
    IntPoly odd_branch;

    mpz_class operator()(long t) const {
        return (t % 2 == 0) ? even_branch(t) : odd_branch(t);
    }
};

/// True iff every block of pi contains an odd part of lambda or attains
/// its minimum 2-valuation an even number of times.
bool is_lambda_compatible(const CycleType& lambda, const SetPartition& pi);

/// Per-block weight gcd(l_j : j in B) * (sum_{j in B} l_j)^{|B|-2},
/// multiplied over blocks; singleton blocks contribute 1.
mpz_class v_pi(const CycleType& lambda, const SetPartition& pi);

/// Ehrhart quasipolynomial of the fixed polytope of a permutation with
/// the given cycle type. Even branch sums v_pi t^{m-|pi|} over all set
/// partitions of [m]; the odd branch restricts to lambda-compatible ones.
Quasipolynomial ehrhart_quasipolynomial(const CycleType& lambda);

/// Normalized volume n^{m-2} * gcd(lambda); 1 when m = 1 (a point).
mpz_class volume(const CycleType& lambda);

/// True iff the fixed polytope is a lattice polytope (all parts odd).
bool is_lattice(const CycleType& lambda);

/// Smallest k such that the affine span of the k-th dilate meets the
/// lattice; 1 or 2, decided by compatibility of the one-block partition.
int index(const CycleType& lambda);

/// Volume of the half-open parallelotope attached to a forest:
/// prod_j l_j^{deg(j)-1} * prod_{components T} gcd(l_j : j in T),
/// evaluated per component so every factor is an integer.
mpz_class box_volume(const CycleType& lambda, const Forest& forest);

/// Divisibility criterion for the affine span of a pi-indexed
/// parallelotope to meet Z^n: for every block,
/// gcd(l_j) | sum_j l_j(l_j+1)/2. Independent of is_lambda_compatible.
bool affine_span_meets_lattice(const CycleType& lambda, const SetPartition& pi);

/// Verifies, by explicit forest enumeration, that the forests inducing pi
/// weigh in at prod_i (sum_{j in B_i} l_j)^{|B_i|-2}. Refuses for m beyond
/// the bound (combinatorial explosion).
bool forest_sum_identity_check(const CycleType& lambda, const SetPartition& pi,
                               int max_m = 6);

}  // namespace eep
