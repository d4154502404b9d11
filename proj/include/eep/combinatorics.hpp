#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "eep/poly.hpp"

namespace eep {

/// Cycle type of a permutation: an integer partition of n,
/// parts weakly decreasing.
struct CycleType {
    std::vector<long> parts;

    static CycleType of(std::vector<long> parts);

    long n() const;
    int m() const { return static_cast<int>(parts.size()); }
    long gcd() const;

    std::string to_string() const;  // "(2,1,1)"

    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator<(const CycleType& o) const { return parts < o.parts; }
};

/// Partition of the ground set {1,...,m} into disjoint nonempty blocks.
/// Canonical form: blocks ordered by minimum element, elements ascending.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int ground_size() const;
    int size() const { return static_cast<int>(blocks.size()); }

    /// The one-block partition {{1,...,m}}.
    static SetPartition whole(int m);
    /// Validates against ground set {1,...,m} and throws input_error on failure.
    void validate(int m) const;

    std::string to_string() const;  // "12|3"

    bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
};

/// Acyclic graph on vertices {1,...,m}, edges as pairs {i,j} with i < j.
struct Forest {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    SetPartition components() const;
    std::vector<int> degrees() const;  // 1-based vertex -> degree, index 0 unused
    bool is_spanning_tree() const {
        return static_cast<int>(edges.size()) == vertices - 1;
    }
};

/// All integer partitions of n in reverse-lexicographic order.
std::vector<CycleType> partitions_of(long n);

/// All set partitions of {1,...,m} in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int m);

/// All labeled forests on {1,...,m}.
std::vector<Forest> forests_on(int m);

/// Largest e with 2^e | k, for k >= 1.
int two_valuation(const mpz_class& k);

/// Eulerian polynomial A_k(z), normalized by
/// sum_{t>=0} t^k z^t = A_k(z) / (1-z)^{k+1}; so A_0 = 1, A_1 = z.
IntPoly eulerian_polynomial(int k);

/// Size of the conjugacy class of S_n with the given cycle type: n!/z_lambda.
mpz_class class_size(const CycleType& lambda);

mpz_class factorial(long n);

}  // namespace eep
