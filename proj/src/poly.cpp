#include "eep/poly.hpp"

#include <sstream>

#include "eep/errors.hpp"

namespace eep {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    return IntPoly{{c}};
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    std::vector<mpz_class> v(static_cast<size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPoly{std::move(v)};
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r = coeffs_;
    for (auto& c : r) c = -c;
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator*(const mpz_class& c) const {
    std::vector<mpz_class> r = coeffs_;
    for (auto& x : r) x *= c;
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::stretched(int k) const {
    if (is_zero()) return IntPoly{};
    std::vector<mpz_class> r(static_cast<size_t>(degree()) * k + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i * k] = coeffs_[i];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::shifted_arg(const mpz_class& a) const {
    // Horner on polynomial coefficients: p(z+a) built from the top down.
    IntPoly acc;
    const IntPoly lin{{a, 1}};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + constant(*it);
    return acc;
}

IntPoly IntPoly::pow(int e) const {
    IntPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw internal_error("IntPoly::divmod: division by zero");
    const mpz_class lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1)
        throw internal_error("IntPoly::divmod: divisor leading coefficient must be +-1");
    std::vector<mpz_class> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<mpz_class> quot;
    if (degree() >= dd) quot.assign(static_cast<size_t>(degree() - dd) + 1, 0);
    for (int d = degree(); d >= dd; --d) {
        const size_t di = static_cast<size_t>(d);
        if (rem[di] == 0) continue;
        mpz_class q = rem[di] / lead;
        quot[static_cast<size_t>(d - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(d - dd + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
    }
    return {IntPoly{std::move(quot)}, IntPoly{std::move(rem)}};
}

IntPoly IntPoly::divided_by(const IntPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw internal_error("IntPoly::divided_by: division is not exact");
    return q;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        mpz_class a = abs(c);
        if (a != 1 || d == 0) out << a.get_str();
        if (d >= 1) {
            out << var;
            if (d > 1) out << "^" << d;
        }
        first = false;
    }
    return out.str();
}

}  // namespace eep
