#pragma once

#include "iwknot/laurent.hpp"

#include <vector>

namespace iwknot {

/// mu' = min_i v_p(a_i); the Gauss norm is p^(-mu').
long gauss_norm_exponent(const ZPoly& f, std::uint64_t p);

/// log|a| for a nonzero big integer
double log_abs(const Integer& a);

/// Magnitudes of the nonzero complex roots of f, ascending. Roots within
/// 1e-9 of the unit circle are reported as exactly 1.
std::vector<double> root_magnitudes(const ZPoly& f);

/// |lead| * prod max(1, |root|). Eigenvalues of the companion matrix when
/// tol >= 1e-8, Graeffe root squaring below that.
double mahler_measure(const ZPoly& f, double tol = 1e-10);
double mahler_measure_graeffe(const ZPoly& f, double tol);

struct MeasureReport {
    double mahler = 0;
    long gauss_exponent = 0;
    std::vector<double> roots;
};

MeasureReport measure_report(const ZPoly& f, std::uint64_t p, double tol = 1e-10);

struct AsymptoticRow {
    long n = 0;
    Integer resultant;
    double root_growth = 0; // |r_n|^(1/n)
    double p_part = 0;      // |r_n|_p^(1/n) = p^(-v_p(r_n)/n)
    long valuation = 0;
    bool psi_nontrivial = false;
};

/// Rows for n in [n_min, n_max]; computed in parallel, returned in order of n.
std::vector<AsymptoticRow> asymptotic_check(const ZPoly& f, long n_max, std::uint64_t p, long n_min = 1);

} // namespace iwknot
