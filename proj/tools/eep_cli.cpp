// Command-line front end. Talks to the library exclusively through the
// C API in eep.h and renders the JSON reports as markdown on request.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "eep.h"

namespace {

using nlohmann::json;

std::string join_decomposition(const json& decomposition) {
    std::string out;
    for (auto it = decomposition.begin(); it != decomposition.end(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mult = it.value().get<std::string>();
        if (mult != "1") out += mult + "*";
        out += "chi" + it.key();
    }
    return out.empty() ? "0" : out;
}

std::string cycle_type_str(const json& parts) {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i].get<long>());
    }
    return out + ")";
}

std::string phi_str(const json& phi) {
    if (phi["is_polynomial"].get<bool>()) return phi["string"].get<std::string>();
    return phi["string"].get<std::string>();
}

void render_markdown(const json& doc) {
    const std::string command = doc["command"].get<std::string>();
    const json& in = doc["inputs"];
    const json& res = doc["results"];

    if (command == "quasipoly") {
        std::cout << "# Ehrhart quasipolynomial\n\n";
        std::cout << "- cycle type: " << cycle_type_str(in["cycle_type"]) << " (n = "
                  << in["n"].get<long>() << ")\n";
        std::cout << "- even t: " << res["even_str"].get<std::string>() << "\n";
        std::cout << "- odd t: " << res["odd_str"].get<std::string>() << "\n";
        std::cout << "- normalized volume: " << res["volume"].get<std::string>() << "\n";
        std::cout << "- lattice polytope: " << (res["is_lattice"].get<bool>() ? "yes" : "no")
                  << "\n";
        std::cout << "- index: " << res["index"].get<int>() << "\n";
    } else if (command == "series" || command == "phi") {
        std::cout << "# " << (command == "series" ? "Ehrhart series" : "phi-series") << "\n\n";
        std::cout << "- cycle type: " << cycle_type_str(in["cycle_type"]) << "\n";
        std::cout << "- " << command << ": " << res["string"].get<std::string>() << "\n";
        std::cout << "- first coefficients: ";
        for (size_t i = 0; i < res["series_prefix"].size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << res["series_prefix"][i].get<std::string>();
        }
        std::cout << "\n";
        if (command == "phi")
            std::cout << "- polynomial: " << (res["is_polynomial"].get<bool>() ? "yes" : "no")
                      << "\n";
    } else if (command == "table") {
        std::cout << "# Equivariant Ehrhart table for S_" << in["n"].get<long>() << "\n\n";
        std::cout << "| Cycle type | L(t), t even | L(t), t odd | Ehrhart series | phi-series |\n";
        std::cout << "|---|---|---|---|---|\n";
        for (const auto& row : res["rows"]) {
            std::cout << "| " << cycle_type_str(row["cycle_type"]) << " | "
                      << row["quasipolynomial"]["even_str"].get<std::string>() << " | "
                      << row["quasipolynomial"]["odd_str"].get<std::string>() << " | "
                      << row["ehrhart_series"]["string"].get<std::string>() << " | "
                      << phi_str(row["phi_series"]) << " |\n";
        }
    } else if (command == "decompose") {
        std::cout << "# phi-series decomposition for S_" << in["n"].get<long>() << "\n\n";
        std::cout << "- polynomial: " << (res["is_polynomial"].get<bool>() ? "yes" : "no")
                  << "\n";
        std::cout << "- effective: " << (res["is_effective"].get<bool>() ? "yes" : "no")
                  << "\n\n";
        for (const auto& coeff : res["coefficients"]) {
            std::cout << "- phi_" << coeff["term"].get<int>() << " = "
                      << join_decomposition(coeff["decomposition"]) << "\n";
        }
        if (!res["tails"].empty()) {
            std::cout << "\nTail numerators over powers of (1+z):\n";
            for (auto it = res["tails"].begin(); it != res["tails"].end(); ++it) {
                std::cout << "- " << it.key() << ": ";
                for (size_t i = 0; i < it.value().size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << it.value()[i].get<std::string>();
                }
                std::cout << "\n";
            }
        }
    } else if (command == "verdict") {
        std::cout << "# Verdict for S_" << in["n"].get<long>() << "\n\n";
        std::cout << "- polynomial: " << (res["is_polynomial"].get<bool>() ? "yes" : "no");
        if (!res["nonpolynomial_witness"].is_null())
            std::cout << " (witness " << res["nonpolynomial_witness"].get<std::string>() << ")";
        std::cout << "\n";
        std::cout << "- effective: " << (res["is_effective"].get<bool>() ? "yes" : "no");
        if (!res["negative_witness"].is_null()) {
            const auto& w = res["negative_witness"];
            std::cout << " (phi_" << w["term"].get<int>() << " has multiplicity "
                      << w["multiplicity"].get<std::string>() << " on "
                      << w["irrep"].get<std::string>() << ")";
        }
        std::cout << "\n";
    } else if (command == "oracle") {
        std::cout << "# Oracle check\n\n";
        std::cout << "- cycle type: " << cycle_type_str(in["cycle_type"]) << ", t = "
                  << in["t"].get<long>() << "\n";
        std::cout << "- brute-force count: " << res["count"].get<std::string>() << "\n";
        std::cout << "- formula value: " << res["formula"].get<std::string>() << "\n";
        std::cout << "- match: " << (res["match"].get<bool>() ? "yes" : "NO") << "\n";
    } else if (command == "oracle-sweep") {
        std::cout << "# Oracle sweep\n\n";
        std::cout << "- n <= " << in["n_max"].get<long>() << ", t <= " << in["t_max"].get<long>()
                  << "\n";
        std::cout << "- checks: " << res["checks"].get<long long>() << "\n";
        std::cout << "- all match: " << (res["match"].get<bool>() ? "yes" : "NO") << "\n";
        for (const auto& line : res["mismatches"])
            std::cout << "- " << line.get<std::string>() << "\n";
    } else if (command == "check") {
        std::cout << "# Conjecture " << in["conjecture"].get<std::string>() << "\n\n";
        std::cout << "- result: " << (res["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& line : res["details"])
            std::cout << "- " << line.get<std::string>() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

int emit(int code, eep_report* report, const std::string& format) {
    if (report == nullptr) {
        std::cerr << "error: " << eep_last_error() << "\n";
        return code;
    }
    if (format == "json") {
        std::cout << eep_report_json(report) << "\n";
    } else {
        render_markdown(json::parse(eep_report_json(report)));
    }
    eep_report_free(report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Ehrhart theory of the permutahedron"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "markdown";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();

    std::string cycle_type;
    long t = 1;
    int n = 3;
    int terms = 0;
    int max_n = 10;
    long max_tn = 0;
    long long budget = 0;
    std::string sweep;
    std::string conjecture;

    auto* quasipoly = app.add_subcommand("quasipoly", "Ehrhart quasipolynomial of the fixed polytope");
    quasipoly->add_option("--cycle-type", cycle_type, "Comma-separated cycle lengths")->required();

    auto* series = app.add_subcommand("series", "Ehrhart series as an exact rational function");
    series->add_option("--cycle-type", cycle_type)->required();

    auto* phi = app.add_subcommand("phi", "Equivariant phi-series at a cycle type");
    phi->add_option("--cycle-type", cycle_type)->required();

    auto* table = app.add_subcommand("table", "Full table for S_n");
    table->add_option("--n", n, "Symmetric group degree")->required();

    auto* decompose = app.add_subcommand("decompose", "Character decompositions of phi coefficients");
    decompose->add_option("--n", n)->required();
    decompose->add_option("--terms", terms, "Number of coefficients (0 = automatic)");

    auto* verdict = app.add_subcommand("verdict", "Polynomiality and effectiveness verdicts");
    verdict->add_option("--n", n)->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force lattice-point count vs formula");
    oracle->add_option("--cycle-type", cycle_type);
    oracle->add_option("--t", t, "Dilation factor");
    oracle->add_option("--sweep", sweep, "N,TMAX: check every cycle type of n <= N, t <= TMAX");
    oracle->add_option("--budget", budget, "Candidate budget (default 1e8)");
    oracle->add_option("--max-tn", max_tn, "Bound on t*n (default 40)");

    auto* check = app.add_subcommand("check", "Conjecture checks");
    check->add_option("--conjecture", conjecture, "12.2, 12.3 or 12.4")->required();
    check->add_option("--max-n", max_n, "Cycle-type bound (12.3) or n (12.2/12.4)");

    CLI11_PARSE(app, argc, argv);

    eep_report* report = nullptr;
    int code = EEP_ERR_INPUT;
    if (quasipoly->parsed()) {
        code = eep_quasipoly(cycle_type.c_str(), &report);
    } else if (series->parsed()) {
        code = eep_series(cycle_type.c_str(), &report);
    } else if (phi->parsed()) {
        code = eep_phi(cycle_type.c_str(), &report);
    } else if (table->parsed()) {
        code = eep_table(n, &report);
    } else if (decompose->parsed()) {
        code = eep_decompose(n, terms, &report);
    } else if (verdict->parsed()) {
        code = eep_verdict(n, &report);
    } else if (oracle->parsed()) {
        if (!sweep.empty()) {
            int n_max = 0;
            long t_max = 0;
            if (std::sscanf(sweep.c_str(), "%d,%ld", &n_max, &t_max) != 2) {
                std::cerr << "error: --sweep expects N,TMAX\n";
                return EEP_ERR_INPUT;
            }
            code = eep_oracle_sweep(n_max, t_max, max_tn, budget, &report);
        } else if (!cycle_type.empty()) {
            code = eep_oracle(cycle_type.c_str(), t, max_tn, budget, &report);
        } else {
            std::cerr << "error: oracle requires --cycle-type or --sweep\n";
            return EEP_ERR_INPUT;
        }
    } else if (check->parsed()) {
        code = eep_check(conjecture.c_str(), max_n, &report);
    }
    return emit(code, report, format);
}
