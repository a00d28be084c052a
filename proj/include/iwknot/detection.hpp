#pragma once

// Diagnostics read off scanned Iwasawa invariants: degree recovery,
// monicness, genus candidates and a three-valued fiberedness flag.

#include "iwknot/iwasawa.hpp"
#include "iwknot/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iwknot {

struct DegreeVerdict {
    std::uint64_t p = 0;
    long span = 0;
    long degree = 0;                 // recovered degree, or the largest lambda seen
    bool recovered = false;          // lambda = span(f) at witness_m
    bool upper_bound_only = false;   // p divides the leading coefficient of f / content
    std::optional<long> witness_m;
    std::vector<std::pair<long, long>> lambda_by_m;
};

DegreeVerdict degree_recovery(const ZPoly& f, std::uint64_t p, long m_max = 12);

struct MonicEvidence {
    std::uint64_t p = 0;
    long mu = 0;          // at m = 1
    long max_lambda = 0;  // over m <= m_max prime to p
    std::optional<long> witness_m;
};

struct MonicVerdict {
    bool monic = false;
    long m_max = 0;
    std::vector<MonicEvidence> evidence;
};

/// monic iff every mu vanishes and the maximal lambda is the same for all p
MonicVerdict monic_detect(const ZPoly& f, const std::vector<std::uint64_t>& p_list, long m_max = 12);

struct GenusVerdict {
    long lambda_tau = 0, N = 1, d = 1;
    Rational ratio;       // lambda_tau / (N d)
    Rational x_K;         // max(0, ratio)
    std::optional<long> genus; // (x_K + 1) / 2 when x_K is an odd integer
};

GenusVerdict genus_bound(long lambda_tau, long N, long d);

enum class FiberedStatus { Consistent, Refuted, Undetermined };
std::string to_string(FiberedStatus s);

struct MuReport {
    std::string label;
    std::uint64_t p = 0;
    long m = 1;
    std::optional<long> mu; // unset when the twisted polynomial vanishes
};

struct FiberedVerdict {
    FiberedStatus status = FiberedStatus::Undetermined;
    std::optional<MuReport> witness;
    std::string note;
};

/// Refuted on any positive mu or vanishing polynomial, consistent otherwise.
/// Consistency is evidence at the scanned scale only.
FiberedVerdict fibered_mu_criterion(const std::vector<MuReport>& reports);

/// Least m <= m_max prime to p such that f / content has p-unit leading and
/// trailing coefficients and its reduction divides (t^m - 1)^span.
std::optional<long> reduction_splits_in_unit_roots(const ZPoly& f, std::uint64_t p, long m_max = 12);

Json to_json(const DegreeVerdict& v);
Json to_json(const MonicVerdict& v);
Json to_json(const GenusVerdict& v);
Json to_json(const FiberedVerdict& v);

} // namespace iwknot
