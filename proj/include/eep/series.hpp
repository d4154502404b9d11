#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "eep/combinatorics.hpp"
#include "eep/poly.hpp"

namespace eep {

/// Rational function N(z)/D(z) with integer coefficients, kept fully
/// reduced: gcd(N, D) = 1 over Q and D(0) = 1. Denominators of the
/// series in this artifact factor as (1-z)^p (1+z)^q after reduction.
class RationalFunction {
public:
    RationalFunction() : num_(IntPoly::constant(0)), den_(IntPoly::constant(1)) {}
    /// Reduces num/den. den must have den(0) = +-1 (true for any product
    /// of cyclotomic-style factors (1 - z^a)).
    RationalFunction(IntPoly num, IntPoly den);
    /// Builds num / prod (1 - z^a)^e from a factor list of (a, e) pairs.
    static RationalFunction from_factored(IntPoly num,
                                          const std::vector<std::pair<int, int>>& factors);

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }
    bool is_polynomial() const { return den_ == IntPoly::constant(1); }

    struct DenominatorFactors {
        int one_minus_z = 0;  // multiplicity of (1-z)
        int one_plus_z = 0;   // multiplicity of (1+z)
        IntPoly rest;         // leftover cofactor, rest(0) = 1
    };
    DenominatorFactors denominator_factors() const;

    /// First `count` Maclaurin coefficients, exact.
    std::vector<mpz_class> coefficients(int count) const;

    /// Value at z = x as an exact rational; requires den(x) != 0.
    mpq_class operator()(const mpz_class& x) const;

    std::string to_string(const std::string& var) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    IntPoly num_;
    IntPoly den_;
    void reduce();
};

/// Ehrhart series of the fixed polytope: compatible partitions contribute
/// v A_k(z)/(1-z)^{k+1}, incompatible ones v 2^k A_k(z^2)/(1-z^2)^{k+1},
/// with k = m - |pi|; combined and fully reduced.
RationalFunction ehrhart_series(const CycleType& lambda);

/// Equivariant phi-series at this cycle type:
/// prod_i (1 - z^{l_i}) * ehrhart_series(lambda), fully reduced.
RationalFunction phi_series(const CycleType& lambda);

std::vector<mpz_class> series_coefficients(const RationalFunction& rf, int count);

bool is_polynomial(const RationalFunction& rf);

/// Parity criterion: the phi-series at lambda is a polynomial iff the
/// number of even parts is 0, m-1, or m. Independent of the exact
/// rational-function reduction.
bool polynomiality_predicate(const CycleType& lambda);

/// rf = polynomial_part + sum_{j=1}^r tail[j-1] / (1+z)^j, all integer.
struct PartialFraction {
    IntPoly polynomial_part;
    std::vector<mpz_class> tail;  // c_1, ..., c_r
};

/// Requires the reduced denominator to be a power of (1+z); anything else
/// signals an upstream bug and throws internal_error.
PartialFraction partial_fraction_tail(const RationalFunction& rf);

}  // namespace eep
