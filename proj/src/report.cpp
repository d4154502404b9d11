#include "eep/report.hpp"

#include "eep/errors.hpp"
#include "eep/fixed_polytope.hpp"

namespace eep {

using nlohmann::json;

namespace {

json cycle_type_json(const CycleType& lambda) {
    json a = json::array();
    for (long p : lambda.parts) a.push_back(p);
    return a;
}

json coeff_array(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.get_str());
    return a;
}

json quasipoly_json(const Quasipolynomial& q) {
    return json{
        {"even", poly_to_json(q.even_branch)},
        {"odd", poly_to_json(q.odd_branch)},
        {"even_str", q.even_branch.to_string("t")},
        {"odd_str", q.odd_branch.to_string("t")},
    };
}

json envelope(const std::string& command, json inputs, json results) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)}};
}

json decomposition_json(const CharacterDecomposition& d) {
    json obj = json::object();
    for (const auto& [mu, mult] : d.multiplicities)
        if (mult != 0) obj[partition_to_string(mu)] = mult.get_str();
    return obj;
}

json phi_entry_json(const CycleType& lambda) {
    RationalFunction rf = phi_series(lambda);
    auto pf = partial_fraction_tail(rf);
    json j = rational_to_json(rf);
    j["is_polynomial"] = rf.is_polynomial();
    j["polynomial_part"] = poly_to_json(pf.polynomial_part);
    j["tail"] = coeff_array(pf.tail);
    j["series_prefix"] = coeff_array(rf.coefficients(10));
    return j;
}

}  // namespace

json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

json rational_to_json(const RationalFunction& rf) {
    auto f = rf.denominator_factors();
    json factors = json::array();
    if (f.one_minus_z > 0)
        factors.push_back(json{{"factor", "1-z"}, {"power", f.one_minus_z}});
    if (f.one_plus_z > 0)
        factors.push_back(json{{"factor", "1+z"}, {"power", f.one_plus_z}});
    if (!(f.rest == IntPoly::constant(1)))
        factors.push_back(json{{"factor", "poly"}, {"coefficients", poly_to_json(f.rest)}});
    return json{{"numerator", poly_to_json(rf.numerator())},
                {"denominator_factors", factors},
                {"string", rf.to_string("z")}};
}

json report_quasipoly(const CycleType& lambda) {
    const Quasipolynomial q = ehrhart_quasipolynomial(lambda);
    json results = quasipoly_json(q);
    results["volume"] = volume(lambda).get_str();
    results["is_lattice"] = is_lattice(lambda);
    results["index"] = index(lambda);
    return envelope("quasipoly",
                    json{{"cycle_type", cycle_type_json(lambda)}, {"n", lambda.n()}},
                    std::move(results));
}

json report_series(const CycleType& lambda) {
    RationalFunction rf = ehrhart_series(lambda);
    json results = rational_to_json(rf);
    results["series_prefix"] = coeff_array(rf.coefficients(10));
    return envelope("series",
                    json{{"cycle_type", cycle_type_json(lambda)}, {"n", lambda.n()}},
                    std::move(results));
}

json report_phi(const CycleType& lambda) {
    return envelope("phi",
                    json{{"cycle_type", cycle_type_json(lambda)}, {"n", lambda.n()}},
                    phi_entry_json(lambda));
}

json report_table(long n) {
    if (n < 1) throw input_error("table: n must be positive");
    json rows = json::array();
    for (const auto& lambda : partitions_of(n)) {
        json row;
        row["cycle_type"] = cycle_type_json(lambda);
        row["quasipolynomial"] = quasipoly_json(ehrhart_quasipolynomial(lambda));
        row["ehrhart_series"] = rational_to_json(ehrhart_series(lambda));
        row["phi_series"] = phi_entry_json(lambda);
        rows.push_back(std::move(row));
    }
    return envelope("table", json{{"n", n}}, json{{"rows", std::move(rows)}});
}

json report_decompose(long n, int terms) {
    if (n < 1) throw input_error("decompose: n must be positive");
    PhiData data = phi_data(n, terms);
    json coeffs = json::array();
    for (size_t i = 0; i < data.coefficients.size(); ++i) {
        CharacterDecomposition d = decompose(data.coefficients[i]);
        coeffs.push_back(json{{"term", i}, {"decomposition", decomposition_json(d)}});
    }
    json tails = json::object();
    for (const auto& [parts, tail] : data.tails)
        if (!tail.empty()) tails[partition_to_string(parts)] = coeff_array(tail);
    return envelope(
        "decompose", json{{"n", n}, {"terms", data.coefficients.size()}},
        json{{"is_polynomial", data.is_polynomial},
             {"is_effective", data.is_effective},
             {"coefficients", std::move(coeffs)},
             {"tails", std::move(tails)}});
}

json report_verdict(long n) {
    if (n < 1) throw input_error("verdict: n must be positive");
    PhiData data = phi_data(n);
    json results{{"is_polynomial", data.is_polynomial},
                 {"is_effective", data.is_effective}};
    if (data.nonpolynomial_witness)
        results["nonpolynomial_witness"] = partition_to_string(*data.nonpolynomial_witness);
    else
        results["nonpolynomial_witness"] = nullptr;
    if (data.negative_witness)
        results["negative_witness"] =
            json{{"term", data.negative_witness->term},
                 {"irrep", partition_to_string(data.negative_witness->irrep)},
                 {"multiplicity", data.negative_witness->multiplicity.get_str()}};
    else
        results["negative_witness"] = nullptr;
    return envelope("verdict", json{{"n", n}}, std::move(results));
}

json report_oracle(const CycleType& lambda, long t, const OracleBudget& budget) {
    const mpz_class counted = count_fixed_lattice_points(lambda, t, budget);
    const mpz_class predicted = ehrhart_quasipolynomial(lambda)(t);
    return envelope(
        "oracle", json{{"cycle_type", cycle_type_json(lambda)}, {"n", lambda.n()}, {"t", t}},
        json{{"count", counted.get_str()},
             {"formula", predicted.get_str()},
             {"match", counted == predicted}});
}

json report_oracle_sweep(long n_max, long t_max, const OracleBudget& budget) {
    SweepResult sweep = oracle_sweep(n_max, t_max, budget);
    json mismatches = json::array();
    for (const auto& msg : sweep.mismatches) mismatches.push_back(msg);
    return envelope("oracle-sweep", json{{"n_max", n_max}, {"t_max", t_max}},
                    json{{"checks", sweep.checks},
                         {"match", sweep.ok()},
                         {"mismatches", std::move(mismatches)}});
}

json report_check(const std::string& conjecture, long max_n) {
    CheckReport report;
    if (conjecture == "12.2")
        report = check_conjecture_12_2(max_n);
    else if (conjecture == "12.3")
        report = check_conjecture_12_3(max_n);
    else if (conjecture == "12.4")
        report = check_conjecture_12_4(max_n);
    else
        throw input_error("unknown conjecture '" + conjecture + "' (expected 12.2, 12.3 or 12.4)");
    json lines = json::array();
    for (const auto& line : report.lines) lines.push_back(line);
    return envelope("check", json{{"conjecture", conjecture}, {"max_n", max_n}},
                    json{{"pass", report.pass}, {"details", std::move(lines)}});
}

}  // namespace eep
