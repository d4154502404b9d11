#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace eep {

/// Dense polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of z^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class operator()(const mpz_class& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Substitute z -> z^k.
    IntPoly stretched(int k) const;
    /// Substitute z -> z + a (integer shift of the argument).
    IntPoly shifted_arg(const mpz_class& a) const;
    /// p^e by repeated multiplication.
    IntPoly pow(int e) const;

    /// Euclidean division by a divisor whose leading coefficient is +-1.
    /// Returns (quotient, remainder) with deg(remainder) < deg(divisor).
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const;
    /// Exact division; throws internal_error if the remainder is nonzero.
    IntPoly divided_by(const IntPoly& divisor) const;

    /// Human-readable form, highest degree first, e.g. "4t^2+3t+1".
    std::string to_string(const std::string& var) const;

private:
    std::vector<mpz_class> coeffs_;
    void normalize();
};

}  // namespace eep
