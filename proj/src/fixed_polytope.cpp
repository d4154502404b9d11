#include "eep/fixed_polytope.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "eep/errors.hpp"

namespace eep {

bool is_lambda_compatible(const CycleType& lambda, const SetPartition& pi) {
    pi.validate(lambda.m());
    for (const auto& block : pi.blocks) {
        bool has_odd = false;
        int min_val = INT_MAX;
        int min_count = 0;
        for (int j : block) {
            long part = lambda.parts[static_cast<size_t>(j - 1)];
            if (part % 2 == 1) {
                has_odd = true;
                break;
            }
            int v = two_valuation(part);
            if (v < min_val) {
                min_val = v;
                min_count = 1;
            } else if (v == min_val) {
                ++min_count;
            }
        }
        if (has_odd) continue;
        if (min_count % 2 != 0) return false;
    }
    return true;
}

mpz_class v_pi(const CycleType& lambda, const SetPartition& pi) {
    pi.validate(lambda.m());
    mpz_class result = 1;
    for (const auto& block : pi.blocks) {
        if (block.size() == 1) continue;  // gcd(l) * l^{-1} = 1
        long g = 0, s = 0;
        for (int j : block) {
            long part = lambda.parts[static_cast<size_t>(j - 1)];
            g = std::gcd(g, part);
            s += part;
        }
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(s),
                      static_cast<unsigned long>(block.size() - 2));
        result *= g * power;
    }
    return result;
}

Quasipolynomial ehrhart_quasipolynomial(const CycleType& lambda) {
    const int m = lambda.m();
    std::vector<mpz_class> even(static_cast<size_t>(m), 0);
    std::vector<mpz_class> odd(static_cast<size_t>(m), 0);
    for (const auto& pi : set_partitions(m)) {
        mpz_class v = v_pi(lambda, pi);
        size_t d = static_cast<size_t>(m - pi.size());
        even[d] += v;
        if (is_lambda_compatible(lambda, pi)) odd[d] += v;
    }
    return Quasipolynomial{IntPoly{std::move(even)}, IntPoly{std::move(odd)}};
}

mpz_class volume(const CycleType& lambda) {
    const int m = lambda.m();
    if (m == 1) return 1;  // n^{-1} * n, the normalized volume of a point
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(lambda.n()),
                  static_cast<unsigned long>(m - 2));
    return power * lambda.gcd();
}

bool is_lattice(const CycleType& lambda) {
    return std::all_of(lambda.parts.begin(), lambda.parts.end(),
                       [](long p) { return p % 2 == 1; });
}

int index(const CycleType& lambda) {
    return is_lambda_compatible(lambda, SetPartition::whole(lambda.m())) ? 1 : 2;
}

mpz_class box_volume(const CycleType& lambda, const Forest& forest) {
    if (forest.vertices != lambda.m())
        throw input_error("box_volume: forest vertex count does not match cycle type");
    const auto deg = forest.degrees();
    mpz_class result = 1;
    for (const auto& comp : forest.components().blocks) {
        if (comp.size() == 1) continue;  // isolated vertex: l^{-1} * l = 1
        long g = 0;
        mpz_class factor = 1;
        for (int j : comp) {
            long part = lambda.parts[static_cast<size_t>(j - 1)];
            g = std::gcd(g, part);
            int e = deg[static_cast<size_t>(j)] - 1;  // >= 0 in a tree on >= 2 vertices
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part),
                          static_cast<unsigned long>(e));
            factor *= p;
        }
        result *= factor * g;
    }
    return result;
}

bool affine_span_meets_lattice(const CycleType& lambda, const SetPartition& pi) {
    pi.validate(lambda.m());
    for (const auto& block : pi.blocks) {
        mpz_class g = 0, s = 0;
        for (int j : block) {
            long part = lambda.parts[static_cast<size_t>(j - 1)];
            g = gcd(g, mpz_class(part));
            s += mpz_class(part) * (part + 1) / 2;
        }
        if (s % g != 0) return false;
    }
    return true;
}

bool forest_sum_identity_check(const CycleType& lambda, const SetPartition& pi,
                               int max_m) {
    const int m = lambda.m();
    if (m > max_m)
        throw input_error("forest_sum_identity_check: m exceeds the enumeration bound");
    pi.validate(m);

    mpq_class lhs = 0;
    for (const auto& forest : forests_on(m)) {
        if (!(forest.components() == pi)) continue;
        const auto deg = forest.degrees();
        mpq_class term = 1;
        for (int j = 1; j <= m; ++j) {
            long part = lambda.parts[static_cast<size_t>(j - 1)];
            int e = deg[static_cast<size_t>(j)] - 1;
            for (int i = 0; i < e; ++i) term *= part;
            for (int i = 0; i < -e; ++i) term /= part;
        }
        lhs += term;
    }

    mpq_class rhs = 1;
    for (const auto& block : pi.blocks) {
        long s = 0;
        for (int j : block) s += lambda.parts[static_cast<size_t>(j - 1)];
        int e = static_cast<int>(block.size()) - 2;
        for (int i = 0; i < e; ++i) rhs *= s;
        for (int i = 0; i < -e; ++i) rhs /= s;
    }
    return lhs == rhs;
}

}  // namespace eep
