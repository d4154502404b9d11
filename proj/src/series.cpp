#include "eep/series.hpp"

#include <algorithm>
#include <sstream>

#include "eep/errors.hpp"
#include "eep/fixed_polytope.hpp"

namespace eep {

namespace {

using RatPoly = std::vector<mpq_class>;  // lowest degree first, no trailing zeros

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

void rat_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b over Q; b nonzero.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    const size_t db = b.size() - 1;
    const mpq_class lead = b.back();
    while (a.size() > db) {
        mpq_class q = a.back() / lead;
        const size_t shift = a.size() - 1 - db;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        rat_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

// Primitive integer gcd of two integer polynomials (Euclid over Q, then
// denominators cleared and content removed). Positive leading coefficient.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly x = to_rat(a), y = to_rat(b);
    rat_normalize(x);
    rat_normalize(y);
    while (!y.empty()) {
        RatPoly r = rat_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) throw internal_error("primitive_gcd of zero polynomials");
    // clear denominators, divide out content
    mpz_class den_lcm = 1;
    for (const auto& c : x) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<mpz_class> z;
    z.reserve(x.size());
    for (const auto& c : x) z.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));
    mpz_class content = 0;
    for (const auto& c : z) content = gcd(content, c);
    for (auto& c : z) c /= content;
    if (z.back() < 0)
        for (auto& c : z) c = -c;
    return IntPoly{std::move(z)};
}

}  // namespace

RationalFunction::RationalFunction(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw internal_error("RationalFunction: zero denominator");
    reduce();
}

RationalFunction RationalFunction::from_factored(
    IntPoly num, const std::vector<std::pair<int, int>>& factors) {
    IntPoly den = IntPoly::constant(1);
    for (auto [a, e] : factors) {
        if (a < 1 || e < 1) throw input_error("denominator factor (a, e) must be positive");
        std::vector<mpz_class> f(static_cast<size_t>(a) + 1, 0);
        f.front() = 1;
        f.back() = -1;  // 1 - z^a
        den = den * IntPoly{std::move(f)}.pow(e);
    }
    return RationalFunction(std::move(num), std::move(den));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    IntPoly g = primitive_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        // Gauss: a primitive divisor of an integer polynomial divides it over Z,
        // but g's leading coefficient may be > 1; divide over Q and certify.
        RatPoly gr = to_rat(g);
        auto divide_exact = [&](const IntPoly& p) {
            RatPoly a = to_rat(p);
            const size_t dg = gr.size() - 1;
            RatPoly q(a.size() - dg, 0);
            while (a.size() > dg) {
                mpq_class c = a.back() / gr.back();
                const size_t shift = a.size() - 1 - dg;
                q[shift] = c;
                for (size_t j = 0; j < gr.size(); ++j) a[shift + j] -= c * gr[j];
                rat_normalize(a);
                if (a.size() <= dg && !a.empty())
                    throw internal_error("RationalFunction::reduce: gcd does not divide");
            }
            std::vector<mpz_class> z;
            z.reserve(q.size());
            for (const auto& c : q) {
                if (c.get_den() != 1)
                    throw internal_error("RationalFunction::reduce: non-integer quotient");
                z.push_back(c.get_num());
            }
            return IntPoly{std::move(z)};
        };
        num_ = divide_exact(num_);
        den_ = divide_exact(den_);
    }
    if (den_.coeff(0) == -1) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.coeff(0) != 1)
        throw internal_error("RationalFunction::reduce: denominator constant term is not 1");
}

RationalFunction::DenominatorFactors RationalFunction::denominator_factors() const {
    DenominatorFactors f;
    f.rest = den_;
    const IntPoly one_minus{{1, -1}};
    const IntPoly one_plus{{1, 1}};
    while (f.rest.degree() > 0 && f.rest(1) == 0) {
        f.rest = f.rest.divided_by(one_minus);
        ++f.one_minus_z;
    }
    while (f.rest.degree() > 0 && f.rest(-1) == 0) {
        f.rest = f.rest.divided_by(one_plus);
        ++f.one_plus_z;
    }
    return f;
}

std::vector<mpz_class> RationalFunction::coefficients(int count) const {
    if (count < 1) throw input_error("coefficient count must be positive");
    std::vector<mpz_class> c(static_cast<size_t>(count), 0);
    const int dd = den_.degree();
    for (int k = 0; k < count; ++k) {
        mpz_class acc = num_.coeff(k);
        for (int j = 1; j <= dd && j <= k; ++j) acc -= den_.coeff(j) * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = acc;  // den(0) = 1
    }
    return c;
}

mpq_class RationalFunction::operator()(const mpz_class& x) const {
    mpz_class d = den_(x);
    if (d == 0) throw input_error("RationalFunction: evaluation at a pole");
    mpq_class v(num_(x), d);
    v.canonicalize();
    return v;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::ostringstream out;
    out << "(" << num_.to_string(var) << ")/(";
    auto f = denominator_factors();
    auto emit = [&](const std::string& base, int e) {
        if (e == 0) return;
        out << "(" << base << ")";
        if (e > 1) out << "^" << e;
    };
    emit("1-" + var, f.one_minus_z);
    emit("1+" + var, f.one_plus_z);
    if (!(f.rest == IntPoly::constant(1)))
        out << "(" << f.rest.to_string(var) << ")";
    out << ")";
    return out.str();
}

RationalFunction ehrhart_series(const CycleType& lambda) {
    const int m = lambda.m();
    // Common denominator (1-z)^m (1-z^2)^m; each term's cofactor below.
    const IntPoly one_minus_z{{1, -1}};
    const IntPoly one_minus_z2{{1, 0, -1}};
    std::vector<IntPoly> pow1(static_cast<size_t>(m) + 1), pow2(static_cast<size_t>(m) + 1);
    pow1[0] = IntPoly::constant(1);
    pow2[0] = IntPoly::constant(1);
    for (int i = 1; i <= m; ++i) {
        pow1[static_cast<size_t>(i)] = pow1[static_cast<size_t>(i - 1)] * one_minus_z;
        pow2[static_cast<size_t>(i)] = pow2[static_cast<size_t>(i - 1)] * one_minus_z2;
    }

    IntPoly total;
    for (const auto& pi : set_partitions(m)) {
        const int k = m - pi.size();
        const mpz_class v = v_pi(lambda, pi);
        const IntPoly a = eulerian_polynomial(k);
        if (is_lambda_compatible(lambda, pi)) {
            // v A_k(z)/(1-z)^{k+1} * common
            total = total + a * v * pow1[static_cast<size_t>(m - k - 1)] * pow2[static_cast<size_t>(m)];
        } else {
            mpz_class two_k;
            mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
            total = total +
                    a.stretched(2) * (v * two_k) * pow1[static_cast<size_t>(m)] *
                        pow2[static_cast<size_t>(m - k - 1)];
        }
    }
    return RationalFunction::from_factored(std::move(total), {{1, m}, {2, m}});
}

RationalFunction phi_series(const CycleType& lambda) {
    RationalFunction ehr = ehrhart_series(lambda);
    IntPoly det = IntPoly::constant(1);
    for (long part : lambda.parts) {
        std::vector<mpz_class> f(static_cast<size_t>(part) + 1, 0);
        f.front() = 1;
        f.back() = -1;
        det = det * IntPoly{std::move(f)};
    }
    return RationalFunction(det * ehr.numerator(), ehr.denominator());
}

std::vector<mpz_class> series_coefficients(const RationalFunction& rf, int count) {
    return rf.coefficients(count);
}

bool is_polynomial(const RationalFunction& rf) {
    return rf.is_polynomial();
}

bool polynomiality_predicate(const CycleType& lambda) {
    const int even = static_cast<int>(
        std::count_if(lambda.parts.begin(), lambda.parts.end(), [](long p) { return p % 2 == 0; }));
    return even == 0 || even == lambda.m() - 1 || even == lambda.m();
}

PartialFraction partial_fraction_tail(const RationalFunction& rf) {
    auto f = rf.denominator_factors();
    if (f.one_minus_z != 0 || !(f.rest == IntPoly::constant(1)))
        throw internal_error(
            "partial_fraction_tail: reduced denominator is not a power of (1+z)");
    const int r = f.one_plus_z;
    if (r == 0) return PartialFraction{rf.numerator(), {}};

    auto [quot, rem] = rf.numerator().divmod(rf.denominator());
    // rem / (1+z)^r with deg(rem) < r: expand rem in powers of u = 1+z,
    // i.e. rem(u - 1); then c_j is the coefficient of u^{r-j}.
    IntPoly in_u = rem.shifted_arg(mpz_class(-1));
    std::vector<mpz_class> tail(static_cast<size_t>(r), 0);
    for (int j = 1; j <= r; ++j) tail[static_cast<size_t>(j - 1)] = in_u.coeff(r - j);
    return PartialFraction{std::move(quot), std::move(tail)};
}

}  // namespace eep
