#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eep/combinatorics.hpp"
#include "eep/poly.hpp"

namespace eep {

/// Irrep label: a partition of n, weakly decreasing.
/// Conventions: trivial = (n), sign = (1,...,1), standard = (n-1, 1).
using Partition = std::vector<long>;

/// Irreducible character value chi^mu(lambda) by the Murnaghan-Nakayama
/// border-strip recursion (beta-number form).
mpz_class irreducible_character(const Partition& mu, const CycleType& lambda);

/// Integer-valued class function of S_n, one value per cycle type.
struct ClassFunction {
    long n = 0;
    std::map<Partition, mpz_class> values;

    const mpz_class& at(const CycleType& lambda) const;
};

/// Multiplicities of irreducibles in a virtual character.
struct CharacterDecomposition {
    long n = 0;
    std::map<Partition, mpz_class> multiplicities;
};

/// Inner product with every irreducible; throws internal_error if any
/// multiplicity fails to be an integer (the input was not a virtual
/// character, an upstream bug).
CharacterDecomposition decompose(const ClassFunction& f);

/// Evaluates a decomposition back to a class function.
ClassFunction reconstruct(const CharacterDecomposition& d);

/// The equivariant phi-series of Pi_n assembled classwise: polynomial
/// parts, tails over powers of (1+z), coefficient class functions, and
/// the polynomiality/effectiveness verdicts.
struct PhiData {
    long n = 0;
    bool is_polynomial = false;
    bool is_effective = false;
    int polynomial_degree = 0;  // max degree over classes of the polynomial part

    /// Series coefficient class functions phi_0, phi_1, ... (terms of them).
    std::vector<ClassFunction> coefficients;
    std::map<Partition, IntPoly> polynomial_parts;
    std::map<Partition, std::vector<mpz_class>> tails;  // c_1..c_r per class

    std::optional<Partition> nonpolynomial_witness;
    struct NegativeWitness {
        int term = 0;
        Partition irrep;
        mpz_class multiplicity;
    };
    std::optional<NegativeWitness> negative_witness;
};

/// terms <= 0 selects an automatic window (all polynomial coefficients,
/// plus a few tail terms when the series is not polynomial).
PhiData phi_data(long n, int terms = 0);

bool phi_is_polynomial(long n);
bool phi_is_effective(long n);

/// h*-polynomial of Pi_n: the phi-series at the identity, certified polynomial.
IntPoly h_star(long n);

/// Closed form for phi[1](sigma):
/// (m-1)! n^{m-2} gcd(lambda) l_1...l_m / ind(Pi_n^sigma).
/// Throws internal_error if the division fails to be exact.
mpz_class phi_at_one_formula(const CycleType& lambda);

struct CheckReport {
    bool pass = false;
    std::vector<std::string> lines;
};

CheckReport check_conjecture_12_2(long n);
CheckReport check_conjecture_12_3(long n_max);
CheckReport check_conjecture_12_4(long n);

std::string partition_to_string(const Partition& p);

}  // namespace eep
