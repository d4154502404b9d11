#pragma once

#include <json.hpp>

#include "eep/characters.hpp"
#include "eep/combinatorics.hpp"
#include "eep/oracle.hpp"
#include "eep/series.hpp"

namespace eep {

/// Machine-readable report documents (one per CLI subcommand). All math
/// integers are emitted as exact decimal strings so the documents
/// round-trip losslessly.
nlohmann::json report_quasipoly(const CycleType& lambda);
nlohmann::json report_series(const CycleType& lambda);
nlohmann::json report_phi(const CycleType& lambda);
nlohmann::json report_table(long n);
nlohmann::json report_decompose(long n, int terms);
nlohmann::json report_verdict(long n);
nlohmann::json report_oracle(const CycleType& lambda, long t, const OracleBudget& budget);
nlohmann::json report_oracle_sweep(long n_max, long t_max, const OracleBudget& budget);
nlohmann::json report_check(const std::string& conjecture, long max_n);

nlohmann::json poly_to_json(const IntPoly& p);
nlohmann::json rational_to_json(const RationalFunction& rf);

}  // namespace eep
