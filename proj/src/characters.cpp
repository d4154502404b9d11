#include "eep/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "eep/errors.hpp"
#include "eep/fixed_polytope.hpp"
#include "eep/series.hpp"

namespace eep {

namespace {

// Beta numbers of a partition: mu_i + (k-1-i), strictly decreasing.
std::vector<int> beta_numbers(const Partition& mu) {
    const int k = static_cast<int>(mu.size());
    std::vector<int> betas(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        betas[static_cast<size_t>(i)] = static_cast<int>(mu[static_cast<size_t>(i)]) + (k - 1 - i);
    return betas;
}

// Removing a border strip of length l = moving one beta number down by l
// onto an unoccupied value; the strip height is the number of beta numbers
// jumped over.
struct MnContext {
    const std::vector<long>& parts;  // class parts, processed left to right
    std::map<std::pair<std::vector<int>, size_t>, mpz_class> memo;

    mpz_class eval(std::vector<int> betas, size_t idx) {
        if (idx == parts.size()) return 1;
        auto key = std::make_pair(betas, idx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const int strip = static_cast<int>(parts[idx]);
        mpz_class total = 0;
        for (size_t i = 0; i < betas.size(); ++i) {
            const int from = betas[i];
            const int to = from - strip;
            if (to < 0) continue;
            if (std::find(betas.begin(), betas.end(), to) != betas.end()) continue;
            int height = 0;
            for (int b : betas)
                if (to < b && b < from) ++height;
            std::vector<int> next = betas;
            next[i] = to;
            std::sort(next.begin(), next.end(), std::greater<>());
            mpz_class sub = eval(std::move(next), idx + 1);
            if (height % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

void validate_partition(const Partition& p, long n, const char* what) {
    if (p.empty()) throw input_error(std::string(what) + ": empty partition");
    long sum = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw input_error(std::string(what) + ": parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw input_error(std::string(what) + ": parts must be weakly decreasing");
        sum += p[i];
    }
    if (sum != n) throw input_error(std::string(what) + ": partition is not of the same n");
}

}  // namespace

mpz_class irreducible_character(const Partition& mu, const CycleType& lambda) {
    validate_partition(mu, lambda.n(), "irreducible_character");
    MnContext ctx{lambda.parts, {}};
    return ctx.eval(beta_numbers(mu), 0);
}

const mpz_class& ClassFunction::at(const CycleType& lambda) const {
    auto it = values.find(lambda.parts);
    if (it == values.end()) throw input_error("ClassFunction: unknown cycle type");
    return it->second;
}

CharacterDecomposition decompose(const ClassFunction& f) {
    const auto classes = partitions_of(f.n);
    if (f.values.size() != classes.size())
        throw input_error("decompose: class function does not cover every cycle type");
    const mpz_class order = factorial(f.n);

    CharacterDecomposition d;
    d.n = f.n;
    for (const auto& mu : classes) {
        mpz_class inner = 0;
        for (const auto& lambda : classes)
            inner += class_size(lambda) * irreducible_character(mu.parts, lambda) * f.at(lambda);
        if (inner % order != 0)
            throw internal_error("decompose: non-integer multiplicity; input is not a virtual character");
        d.multiplicities[mu.parts] = inner / order;
    }
    return d;
}

ClassFunction reconstruct(const CharacterDecomposition& d) {
    ClassFunction f;
    f.n = d.n;
    for (const auto& lambda : partitions_of(d.n)) {
        mpz_class v = 0;
        for (const auto& [mu, mult] : d.multiplicities)
            if (mult != 0) v += mult * irreducible_character(mu, lambda);
        f.values[lambda.parts] = v;
    }
    return f;
}

PhiData phi_data(long n, int terms) {
    if (n < 1) throw input_error("phi_data: n must be positive");
    PhiData data;
    data.n = n;
    data.is_polynomial = true;

    const auto classes = partitions_of(n);
    std::map<Partition, RationalFunction> series;
    for (const auto& lambda : classes) {
        RationalFunction rf = phi_series(lambda);
        auto pf = partial_fraction_tail(rf);
        if (!pf.tail.empty() && data.is_polynomial) {
            data.is_polynomial = false;
            data.nonpolynomial_witness = lambda.parts;
        }
        data.polynomial_degree = std::max(data.polynomial_degree,
                                          std::max(pf.polynomial_part.degree(), 0));
        data.polynomial_parts[lambda.parts] = std::move(pf.polynomial_part);
        data.tails[lambda.parts] = std::move(pf.tail);
        series.emplace(lambda.parts, std::move(rf));
    }

    if (terms <= 0) terms = data.polynomial_degree + (data.is_polynomial ? 1 : 3);
    std::map<Partition, std::vector<mpz_class>> coeffs;
    for (const auto& [parts, rf] : series) coeffs[parts] = rf.coefficients(terms);
    for (int i = 0; i < terms; ++i) {
        ClassFunction f;
        f.n = n;
        for (const auto& lambda : classes)
            f.values[lambda.parts] = coeffs[lambda.parts][static_cast<size_t>(i)];
        data.coefficients.push_back(std::move(f));
    }

    // Effectiveness: a non-polynomial series is never effective (the tail is a
    // fixed virtual character with alternating sign). For the polynomial case
    // every coefficient must decompose nonnegatively.
    data.is_effective = data.is_polynomial;
    for (int i = 0; i < terms && !data.negative_witness; ++i) {
        auto d = decompose(data.coefficients[static_cast<size_t>(i)]);
        for (const auto& [mu, mult] : d.multiplicities) {
            if (mult < 0) {
                data.is_effective = false;
                data.negative_witness = PhiData::NegativeWitness{i, mu, mult};
                break;
            }
        }
    }
    return data;
}

bool phi_is_polynomial(long n) {
    return phi_data(n).is_polynomial;
}

bool phi_is_effective(long n) {
    return phi_data(n).is_effective;
}

IntPoly h_star(long n) {
    std::vector<long> ones(static_cast<size_t>(n), 1);
    RationalFunction rf = phi_series(CycleType::of(std::move(ones)));
    if (!rf.is_polynomial())
        throw internal_error("h_star: phi-series at the identity is not a polynomial");
    return rf.numerator();
}

mpz_class phi_at_one_formula(const CycleType& lambda) {
    const int m = lambda.m();
    mpz_class numerator = factorial(m - 1) * lambda.gcd();
    if (m >= 2) {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(lambda.n()),
                      static_cast<unsigned long>(m - 2));
        numerator *= power;
        for (long part : lambda.parts) numerator *= part;
    }
    // m = 1: n^{-1} * l_1 = 1, so only the gcd factor survives.
    const int ind = index(lambda);
    if (numerator % ind != 0)
        throw internal_error("phi_at_one_formula: index does not divide the numerator");
    mpz_class value = numerator / ind;
    if (value < 0) throw internal_error("phi_at_one_formula: negative value");
    return value;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    out << ")";
    return out.str();
}

namespace {

std::string decomposition_to_string(const CharacterDecomposition& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, mult] : d.multiplicities) {
        if (mult == 0) continue;
        if (!first) out << " + ";
        out << mult.get_str() << "*chi" << partition_to_string(mu);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

CheckReport check_conjecture_12_2(long n) {
    PhiData data = phi_data(n);
    if (!data.is_polynomial)
        throw input_error("conjecture 12.2 applies only when the phi-series is polynomial");

    // phi[1] classwise: evaluate every polynomial part at z = 1.
    ClassFunction phi1;
    phi1.n = n;
    for (const auto& [parts, poly] : data.polynomial_parts) phi1.values[parts] = poly(1);
    CharacterDecomposition d = decompose(phi1);

    CheckReport report;
    report.pass = true;
    auto require = [&](bool ok, const std::string& what) {
        report.lines.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
        report.pass = report.pass && ok;
    };

    bool nonneg_mults = true;
    mpz_class triv_mult = 0;
    for (const auto& [mu, mult] : d.multiplicities) {
        if (mult < 0) nonneg_mults = false;
        if (mu == Partition{n}) triv_mult = mult;
    }
    require(nonneg_mults, "all multiplicities nonnegative");
    require(triv_mult >= 1, "trivial character occurs");

    const Partition identity(static_cast<size_t>(n), 1);
    const mpz_class& at_identity = phi1.values.at(identity);
    bool values_ok = true, identity_max = true;
    for (const auto& [parts, v] : phi1.values) {
        if (v < 0) values_ok = false;
        if (v > at_identity) identity_max = false;
    }
    require(values_ok, "all class-function values nonnegative");
    require(identity_max, "value at the identity is maximal");

    if (n == 3) {
        CharacterDecomposition expected;
        expected.n = 3;
        expected.multiplicities[{3}] = 3;
        expected.multiplicities[{2, 1}] = 1;
        expected.multiplicities[{1, 1, 1}] = 1;
        require(d.multiplicities == expected.multiplicities,
                "n=3 decomposition is 3*triv + std + alt");
    }
    report.lines.push_back("phi[1] = " + decomposition_to_string(d));
    return report;
}

CheckReport check_conjecture_12_3(long n_max) {
    if (n_max < 1) throw input_error("conjecture 12.3: n_max must be positive");
    CheckReport report;
    report.pass = true;
    long checked = 0;
    for (long n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            // throws internal_error on a non-integer or negative value,
            // which would falsify the conjecture
            phi_at_one_formula(lambda);
            ++checked;
        }
    }
    std::ostringstream line;
    line << "ok: phi[1] formula is a nonnegative integer for all " << checked
         << " cycle types with n <= " << n_max;
    report.lines.push_back(line.str());
    return report;
}

CheckReport check_conjecture_12_4(long n) {
    PhiData data = phi_data(n);
    if (!data.is_polynomial)
        throw input_error("conjecture 12.4 applies only when the phi-series is polynomial");

    const IntPoly h = h_star(n);
    CheckReport report;
    report.pass = true;
    for (int i = 0; i <= h.degree(); ++i) {
        if (h.coeff(i) <= 0) continue;
        CharacterDecomposition d = decompose(data.coefficients[static_cast<size_t>(i)]);
        const mpz_class& triv = d.multiplicities[{n}];
        std::ostringstream line;
        const bool ok = triv >= 1;
        line << (ok ? "ok: " : "FAIL: ") << "h*_" << i << " = " << h.coeff(i).get_str()
             << " > 0 and phi_" << i << " contains chi_triv with multiplicity "
             << triv.get_str();
        report.lines.push_back(line.str());
        report.pass = report.pass && ok;
    }
    return report;
}

}  // namespace eep
