#include "eep/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eep/errors.hpp"
#include "eep/fixed_polytope.hpp"

namespace eep {

bool in_dilated_permutahedron(const std::vector<long long>& x, long t) {
    const long long n = static_cast<long long>(x.size());
    long long sum = 0;
    for (long long v : x) sum += v;
    if (sum != t * n * (n + 1) / 2) return false;

    std::vector<long long> sorted = x;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long prefix = 0;
    for (long long k = 1; k < n; ++k) {
        prefix += sorted[static_cast<size_t>(k - 1)];
        // t * (n + (n-1) + ... + (n-k+1))
        if (prefix > t * (k * n - k * (k - 1) / 2)) return false;
    }
    return true;
}

namespace {

void check_budget(const CycleType& lambda, long t, const OracleBudget& budget) {
    if (t < 1) throw input_error("oracle: t must be positive");
    const long n = lambda.n();
    if (t * n > budget.max_tn) {
        std::ostringstream msg;
        msg << "oracle budget exceeded: t*n = " << t * n << " > " << budget.max_tn;
        throw input_error(msg.str());
    }
    const long long base = t * (n - 1) + 1;
    long long candidates = 1;
    for (int i = 0; i < lambda.m(); ++i) {
        if (candidates > budget.max_candidates / base + 1) {
            candidates = budget.max_candidates + 1;
            break;
        }
        candidates *= base;
    }
    if (candidates > budget.max_candidates) {
        std::ostringstream msg;
        msg << "oracle budget exceeded: (t(n-1)+1)^m = " << base << "^" << lambda.m()
            << " > " << budget.max_candidates;
        throw input_error(msg.str());
    }
}

}  // namespace

mpz_class count_fixed_lattice_points(const CycleType& lambda, long t,
                                     const OracleBudget& budget) {
    check_budget(lambda, t, budget);
    const long n = lambda.n();
    const int m = lambda.m();
    const long long lo = t, hi = static_cast<long long>(t) * n;
    const long long target = static_cast<long long>(t) * n * (n + 1) / 2;

    // A sigma-fixed point is constant on cycles: one value y_k per cycle.
    // The last value is forced by the coordinate-sum equation; the
    // majorization test then decides membership from first principles.
    std::vector<long long> suffix_min(static_cast<size_t>(m) + 1, 0);
    std::vector<long long> suffix_max(static_cast<size_t>(m) + 1, 0);
    for (int k = m - 1; k >= 0; --k) {
        const long long part = lambda.parts[static_cast<size_t>(k)];
        suffix_min[static_cast<size_t>(k)] = suffix_min[static_cast<size_t>(k) + 1] + part * lo;
        suffix_max[static_cast<size_t>(k)] = suffix_max[static_cast<size_t>(k) + 1] + part * hi;
    }

    std::vector<long long> y(static_cast<size_t>(m), 0);
    std::vector<long long> ambient(static_cast<size_t>(n), 0);
    long long count = 0;

    std::function<void(int, long long)> rec = [&](int k, long long partial) {
        if (k == m - 1) {
            const long long part = lambda.parts[static_cast<size_t>(k)];
            const long long rem = target - partial;
            if (rem % part != 0) return;
            const long long value = rem / part;
            if (value < lo || value > hi) return;
            y[static_cast<size_t>(k)] = value;
            size_t pos = 0;
            for (int c = 0; c < m; ++c)
                for (long i = 0; i < lambda.parts[static_cast<size_t>(c)]; ++i)
                    ambient[pos++] = y[static_cast<size_t>(c)];
            if (in_dilated_permutahedron(ambient, t)) ++count;
            return;
        }
        const long long part = lambda.parts[static_cast<size_t>(k)];
        for (long long value = lo; value <= hi; ++value) {
            const long long next = partial + part * value;
            if (next + suffix_min[static_cast<size_t>(k) + 1] > target) break;
            if (next + suffix_max[static_cast<size_t>(k) + 1] < target) continue;
            y[static_cast<size_t>(k)] = value;
            rec(k + 1, next);
        }
    };
    rec(0, 0);
    return mpz_class(static_cast<long>(count));
}

SweepResult oracle_sweep(long n_max, long t_max, const OracleBudget& budget) {
    if (n_max < 1 || t_max < 1) throw input_error("oracle_sweep: bounds must be positive");
    SweepResult result;
    for (long n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const Quasipolynomial q = ehrhart_quasipolynomial(lambda);
            for (long t = 1; t <= t_max; ++t) {
                const mpz_class counted = count_fixed_lattice_points(lambda, t, budget);
                const mpz_class predicted = q(t);
                ++result.checks;
                if (counted != predicted) {
                    std::ostringstream msg;
                    msg << "mismatch at lambda=" << lambda.to_string() << " t=" << t
                        << ": oracle=" << counted.get_str()
                        << " formula=" << predicted.get_str();
                    result.mismatches.push_back(msg.str());
                }
            }
        }
    }
    return result;
}

}  // namespace eep
