#include "eep.h"

#include <sstream>
#include <string>

#include "eep/errors.hpp"
#include "eep/report.hpp"

struct eep_report {
    std::string json;
};

namespace {

thread_local std::string g_last_error;

eep::CycleType parse_cycle_type(const char* text) {
    if (text == nullptr || *text == '\0')
        throw eep::input_error("cycle type must not be empty");
    std::vector<long> parts;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            throw eep::input_error("cycle type part '" + token + "' is not an integer");
        }
        if (used != token.size())
            throw eep::input_error("cycle type part '" + token + "' is not an integer");
        parts.push_back(value);
    }
    return eep::CycleType::of(std::move(parts));
}

eep::OracleBudget make_budget(long max_tn, long long max_candidates) {
    eep::OracleBudget budget;
    if (max_tn > 0) budget.max_tn = max_tn;
    if (max_candidates > 0) budget.max_candidates = max_candidates;
    return budget;
}

int deliver(nlohmann::json doc, eep_report** out, bool mismatch = false) {
    if (out == nullptr) {
        g_last_error = "output report pointer is null";
        return EEP_ERR_INPUT;
    }
    *out = new eep_report{doc.dump(2)};
    g_last_error.clear();
    return mismatch ? EEP_ERR_MISMATCH : EEP_OK;
}

template <typename Fn>
int guarded(eep_report** out, Fn&& fn) {
    if (out != nullptr) *out = nullptr;
    try {
        return fn();
    } catch (const eep::input_error& e) {
        g_last_error = e.what();
        return EEP_ERR_INPUT;
    } catch (const eep::internal_error& e) {
        g_last_error = e.what();
        return EEP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EEP_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* eep_report_json(const eep_report* report) {
    return report == nullptr ? "" : report->json.c_str();
}

size_t eep_report_size(const eep_report* report) {
    return report == nullptr ? 0 : report->json.size();
}

void eep_report_free(eep_report* report) {
    delete report;
}

const char* eep_last_error(void) {
    return g_last_error.c_str();
}

int eep_quasipoly(const char* cycle_type, eep_report** out) {
    return guarded(out, [&] {
        return deliver(eep::report_quasipoly(parse_cycle_type(cycle_type)), out);
    });
}

int eep_series(const char* cycle_type, eep_report** out) {
    return guarded(out, [&] {
        return deliver(eep::report_series(parse_cycle_type(cycle_type)), out);
    });
}

int eep_phi(const char* cycle_type, eep_report** out) {
    return guarded(out, [&] {
        return deliver(eep::report_phi(parse_cycle_type(cycle_type)), out);
    });
}

int eep_table(int n, eep_report** out) {
    return guarded(out, [&] { return deliver(eep::report_table(n), out); });
}

int eep_decompose(int n, int terms, eep_report** out) {
    return guarded(out, [&] { return deliver(eep::report_decompose(n, terms), out); });
}

int eep_verdict(int n, eep_report** out) {
    return guarded(out, [&] { return deliver(eep::report_verdict(n), out); });
}

int eep_oracle(const char* cycle_type, long t, long max_tn, long long max_candidates,
               eep_report** out) {
    return guarded(out, [&] {
        nlohmann::json doc = eep::report_oracle(parse_cycle_type(cycle_type), t,
                                                make_budget(max_tn, max_candidates));
        const bool match = doc["results"]["match"].get<bool>();
        return deliver(std::move(doc), out, !match);
    });
}

int eep_oracle_sweep(int n_max, long t_max, long max_tn, long long max_candidates,
                     eep_report** out) {
    return guarded(out, [&] {
        nlohmann::json doc =
            eep::report_oracle_sweep(n_max, t_max, make_budget(max_tn, max_candidates));
        const bool match = doc["results"]["match"].get<bool>();
        return deliver(std::move(doc), out, !match);
    });
}

int eep_check(const char* conjecture, int max_n, eep_report** out) {
    return guarded(out, [&] {
        if (conjecture == nullptr) throw eep::input_error("conjecture must not be null");
        nlohmann::json doc = eep::report_check(conjecture, max_n);
        const bool pass = doc["results"]["pass"].get<bool>();
        return deliver(std::move(doc), out, !pass);
    });
}

}  // extern "C"
