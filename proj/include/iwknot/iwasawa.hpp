#pragma once

#include "iwknot/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iwknot {

struct WeierstrassData {
    std::uint64_t p = 0;
    long mu = 0;
    long lambda = 0;
    std::vector<Valuation> coefficient_valuations;
};

/// mu = min v_p(c_i), lambda = first index attaining it. `c` holds the
/// coefficients of a power series in T (here always a polynomial).
WeierstrassData weierstrass_extract(const ZPoly& c, std::uint64_t p);

struct LambdaMu {
    long lambda = 0;
    long mu = 0;
    bool operator==(const LambdaMu&) const = default;
};

/// H(T) = g((1+T)^m) with g the m-fold cyclotomic product of f.
ZPoly iwasawa_series(const ZPoly& f, long m);
WeierstrassData iwasawa_weierstrass(const ZPoly& f, std::uint64_t p, long m);
LambdaMu iwasawa_lambda_mu(const ZPoly& f, std::uint64_t p, long m);

/// Least k >= 1 such that for every level r >= k the Newton polygon of H at
/// a primitive p^r-th root of unity minus one is governed by T^lambda, so
/// e_r - e_{r-1} = lambda + mu (p^r - p^(r-1)) holds exactly from there on.
long predicted_stable_level(const WeierstrassData& w);

struct ERow {
    long r = 0;
    long n = 0;   // m p^r
    long e = 0;   // v_p of the cyclic resultant
    long nu = 0;  // e - lambda r - mu p^r
    bool psi_nontrivial = false;
};

struct IwasawaTriple {
    std::uint64_t p = 0;
    long m = 0;
    long lambda = 0;
    long mu = 0;
    long nu = 0;
    long stable_from = 0;
    long predicted_level = 0;
    bool psi_flag = false;
    std::vector<ERow> e_table;
};

constexpr long kDefaultResourceCap = 100000;

/// e_r for r in [r_lo, r_hi] and the fitted nu; NoStabilization unless nu is
/// constant on at least the last two levels.
IwasawaTriple nu_estimate(const ZPoly& f, std::uint64_t p, long m, long r_lo, long r_hi,
                          long resource_cap = kDefaultResourceCap);

struct FormulaCheck {
    bool pass = false;
    std::string detail;
    std::optional<IwasawaTriple> triple;
    WeierstrassData weierstrass;
};

/// Compares the Weierstrass route with the resultant-valuation route. PASS
/// needs nu to stabilise and to do so no later than the predicted level.
FormulaCheck verify_formula(const ZPoly& f, std::uint64_t p, long m, long r_lo, long r_hi,
                            long resource_cap = kDefaultResourceCap);

/// (lambda_1 - lambda_0, mu_1 - mu_0)
LambdaMu reidemeister_iwasawa(const ZPoly& f1, const ZPoly& f0, std::uint64_t p, long m);

struct LambdaSup {
    long max_lambda = 0;
    std::optional<long> witness_m; // unset when the maximum is 0
    long mu_at_witness = 0;
};

/// max over 1 <= m <= m_max prime to p, stopping early once lambda = span(f).
LambdaSup lambda_sup(const ZPoly& f, std::uint64_t p, long m_max);

} // namespace iwknot
