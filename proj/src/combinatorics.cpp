#include "eep/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "eep/errors.hpp"

namespace eep {

CycleType CycleType::of(std::vector<long> parts) {
    if (parts.empty()) throw input_error("cycle type must have at least one part");
    for (long p : parts)
        if (p < 1) throw input_error("cycle type parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return CycleType{std::move(parts)};
}

long CycleType::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

long CycleType::gcd() const {
    long g = 0;
    for (long p : parts) g = std::gcd(g, p);
    return g;
}

std::string CycleType::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

int SetPartition::ground_size() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

SetPartition SetPartition::whole(int m) {
    std::vector<int> all(static_cast<size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    return SetPartition{{all}};
}

void SetPartition::validate(int m) const {
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    int count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw input_error("set partition has an empty block");
        for (int x : b) {
            if (x < 1 || x > m || seen[static_cast<size_t>(x)])
                throw input_error("set partition is not a partition of {1,...,m}");
            seen[static_cast<size_t>(x)] = true;
            ++count;
        }
    }
    if (count != m) throw input_error("set partition does not cover {1,...,m}");
}

std::string SetPartition::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out << "|";
        for (int x : blocks[i]) out << x;
    }
    return out.str();
}

namespace {

// Union-find on 1-based vertices.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int m) : parent(static_cast<size_t>(m) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

SetPartition canonical_blocks(int m, DisjointSets& ds) {
    std::vector<std::vector<int>> byroot(static_cast<size_t>(m) + 1);
    for (int v = 1; v <= m; ++v) byroot[static_cast<size_t>(ds.find(v))].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= m; ++v)
        if (!byroot[static_cast<size_t>(v)].empty())
            blocks.push_back(std::move(byroot[static_cast<size_t>(v)]));
    // members were added ascending; a block's root need not be its minimum,
    // so order the blocks by least element
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

}  // namespace

SetPartition Forest::components() const {
    DisjointSets ds(vertices);
    for (auto [a, b] : edges) ds.unite(a, b);
    return canonical_blocks(vertices, ds);
}

std::vector<int> Forest::degrees() const {
    std::vector<int> deg(static_cast<size_t>(vertices) + 1, 0);
    for (auto [a, b] : edges) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    return deg;
}

std::vector<CycleType> partitions_of(long n) {
    if (n < 1) throw input_error("partitions_of: n must be positive");
    std::vector<CycleType> out;
    std::vector<long> current;
    // reverse-lexicographic: largest first part first
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.push_back(CycleType{current});
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<SetPartition> set_partitions(int m) {
    if (m < 1) throw input_error("set_partitions: m must be positive");
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int maxblock) {
        if (pos == m) {
            int k = maxblock + 1;
            std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
            for (int i = 0; i < m; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
            out.push_back(SetPartition{std::move(blocks)});
            return;
        }
        for (int b = 0; b <= maxblock + 1; ++b) {
            rgs[static_cast<size_t>(pos)] = b;
            rec(pos + 1, std::max(maxblock, b));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

std::vector<Forest> forests_on(int m) {
    if (m < 1) throw input_error("forests_on: m must be positive");
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) all_edges.emplace_back(i, j);

    std::vector<Forest> out;
    std::vector<std::pair<int, int>> current;
    std::function<void(size_t, DisjointSets&)> rec = [&](size_t idx, DisjointSets& ds) {
        if (idx == all_edges.size()) {
            out.push_back(Forest{m, current});
            return;
        }
        // exclude edge idx
        rec(idx + 1, ds);
        // include it when acyclic
        auto [a, b] = all_edges[idx];
        if (ds.find(a) != ds.find(b)) {
            DisjointSets copy = ds;
            copy.unite(a, b);
            current.push_back(all_edges[idx]);
            rec(idx + 1, copy);
            current.pop_back();
        }
    };
    DisjointSets ds(m);
    rec(0, ds);
    return out;
}

int two_valuation(const mpz_class& k) {
    if (k < 1) throw input_error("two_valuation: argument must be positive");
    return static_cast<int>(mpz_scan1(k.get_mpz_t(), 0));
}

IntPoly eulerian_polynomial(int k) {
    if (k < 0) throw input_error("eulerian_polynomial: k must be nonnegative");
    // A_k = (1-z)^{k+1} * sum_{t>=0} t^k z^t; the degree-<=k coefficients of
    // the product only involve series terms t <= k, so a truncation is exact.
    std::vector<mpz_class> series(static_cast<size_t>(k) + 1);
    for (int t = 0; t <= k; ++t) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(k));
        series[static_cast<size_t>(t)] = p;
    }
    IntPoly prod = IntPoly{std::move(series)} * IntPoly{{1, -1}}.pow(k + 1);
    std::vector<mpz_class> trunc;
    for (int d = 0; d <= k && d <= prod.degree(); ++d) trunc.push_back(prod.coeff(d));
    return IntPoly{std::move(trunc)};
}

mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class class_size(const CycleType& lambda) {
    // n! / z_lambda with z_lambda = prod_k k^{m_k} m_k!
    mpz_class z = 1;
    long run_part = 0, run_len = 0;
    auto flush = [&] {
        if (run_len == 0) return;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(run_part),
                      static_cast<unsigned long>(run_len));
        z *= p * factorial(run_len);
    };
    for (long part : lambda.parts) {
        if (part == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = part;
            run_len = 1;
        }
    }
    flush();
    mpz_class result = factorial(lambda.n()) / z;
    return result;
}

}  // namespace eep
