#pragma once

// The acceptance battery. Each criterion is a self-contained check with a
// wall-clock budget; the suite runs the selected ones and reports a
// pass/fail matrix.

#include "iwknot/laurent.hpp"
#include "iwknot/report.hpp"

#include <string>
#include <vector>

namespace iwknot {

struct SuiteConfig {
    // random corpus: span <= max_span, |coefficients| <= coeff_bound
    int corpus_size = 50;
    int max_span = 6;
    long coeff_bound = 50;
    std::uint32_t seed = 20250101;
    // text form, appended to the corpus
    std::vector<std::string> extra_polys = {"t^2-3*t+1", "2*t^2-3*t+2", "t^2-t+1", "t^2+4*t+1", "t^2-4*t+1"};
    std::vector<std::uint64_t> primes = {2, 3, 5, 7};
    std::vector<long> ms = {1, 2, 3, 4};
    long r_lo = 0;
    long resource_cap = 100000;
    long m_max = 12;
    long n_lo = -10, n_hi = 10;
    std::vector<std::uint64_t> knot_primes = {2, 3, 5, 7, 11, 13};
    long wada_n_lo = -5, wada_n_hi = 5;
    std::vector<std::uint64_t> wada_primes = {3, 5, 7, 11, 13};
    int wada_samples = 20;
    long anchor_n = 64;       // |n| range for the polynomial identities in n
    long mahler_n = 200;
    double mahler_tol = 1e-2;
    long padic_n = 60;
    std::vector<int> criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
};

/// ConfigParse on unknown keys, wrong types or out-of-range values.
SuiteConfig suite_config_from_json(const Json& j);
Json suite_config_to_json(const SuiteConfig& c);

std::vector<ZPoly> suite_corpus(const SuiteConfig& c);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool correct = false;
    double seconds = 0;
    double budget = 0;
    std::string detail;
    Json witness; // first failing instance, null when correct
    bool pass() const { return correct && seconds < budget; }
};

constexpr int kCriteriaCount = 13; // 13 is the fiberedness verdict contract

std::string criterion_title(int id);
double criterion_budget(int id);
CriterionResult run_criterion(int id, const SuiteConfig& c);
std::vector<CriterionResult> run_suite(const SuiteConfig& c);

/// Pass/fail matrix plus per-section wall clock. Timings are the only
/// run-dependent fields.
Json suite_report(const std::vector<CriterionResult>& rs, const SuiteConfig& c);

} // namespace iwknot
