#include "iwknot/iwasawa.hpp"

#include "iwknot/polyalg.hpp"

#include <numeric>

namespace iwknot {

WeierstrassData weierstrass_extract(const ZPoly& c, std::uint64_t p) {
    if (c.is_zero()) fail(ErrorKind::ZeroPolynomial, "power series is zero; invariants undefined");
    if (c.min_exp() < 0) fail(ErrorKind::InvalidArgument, "power series with negative exponents");
    WeierstrassData w;
    w.p = p;
    w.mu = -1;
    for (long i = 0; i <= c.max_exp(); ++i) {
        Valuation v = valuation(c.coeff(i), p);
        w.coefficient_valuations.push_back(v);
        if (!v.infinite && (w.mu < 0 || v.value < w.mu)) {
            w.mu = v.value;
            w.lambda = i;
        }
    }
    return w;
}

ZPoly iwasawa_series(const ZPoly& f, long m) {
    return compose_one_plus_T_power(cyclotomic_product(f, m), m);
}

WeierstrassData iwasawa_weierstrass(const ZPoly& f, std::uint64_t p, long m) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "invariants of the zero polynomial are undefined");
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
    if (std::gcd(static_cast<std::uint64_t>(m), p) != 1)
        fail(ErrorKind::MNotCoprime, "m = " + std::to_string(m) + " is divisible by p = " + std::to_string(p));
    return weierstrass_extract(iwasawa_series(f, m), p);
}

LambdaMu iwasawa_lambda_mu(const ZPoly& f, std::uint64_t p, long m) {
    auto w = iwasawa_weierstrass(f, p, m);
    return {w.lambda, w.mu};
}

long predicted_stable_level(const WeierstrassData& w) {
    // need phi(p^k) * min_{i<lambda} (v_i - mu)/(lambda - i) > 1
    Rational vmin = -1;
    for (long i = 0; i < w.lambda; ++i) {
        const Valuation& v = w.coefficient_valuations[i];
        if (v.infinite) continue;
        Rational slope(v.value - w.mu, w.lambda - i);
        slope.canonicalize();
        if (vmin < 0 || slope < vmin) vmin = slope;
    }
    if (vmin < 0) return 1;
    Integer pk = 1;
    for (long k = 1;; ++k) {
        Integer phi = pk * static_cast<unsigned long>(w.p - 1);
        if (phi * vmin > 1) return k;
        pk *= static_cast<unsigned long>(w.p);
    }
}

IwasawaTriple nu_estimate(const ZPoly& f, std::uint64_t p, long m, long r_lo, long r_hi, long resource_cap) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "invariants of the zero polynomial are undefined");
    if (r_lo < 0 || r_hi - r_lo < 2) fail(ErrorKind::InvalidArgument, "r range needs r_hi - r_lo >= 2");
    auto w = iwasawa_weierstrass(f, p, m);
    IwasawaTriple out;
    out.p = p;
    out.m = m;
    out.lambda = w.lambda;
    out.mu = w.mu;
    out.predicted_level = predicted_stable_level(w);
    Integer pr = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(r_lo));
    for (long r = r_lo; r <= r_hi; ++r, pr *= static_cast<unsigned long>(p)) {
        Integer n = pr * m;
        if (n > resource_cap)
            fail(ErrorKind::ResourceCap, "m p^r = " + n.get_str() + " exceeds the cap " + std::to_string(resource_cap));
        ERow row;
        row.r = r;
        row.n = n.get_si();
        auto cr = cyclic_resultant(f, row.n);
        row.e = valuation(cr.value, p).value;
        row.psi_nontrivial = cr.psi.degree() > 0;
        Integer nu = Integer(row.e) - Integer(w.lambda) * r - Integer(w.mu) * pr;
        row.nu = nu.get_si();
        out.psi_flag = out.psi_flag || row.psi_nontrivial;
        out.e_table.push_back(row);
    }
    const auto& tab = out.e_table;
    std::size_t k = tab.size() - 1;
    while (k > 0 && tab[k - 1].nu == tab.back().nu) --k;
    if (k + 1 >= tab.size())
        fail(ErrorKind::NoStabilization, "nu differs on the last two levels; raise r_hi");
    out.stable_from = tab[k].r;
    out.nu = tab.back().nu;
    return out;
}

FormulaCheck verify_formula(const ZPoly& f, std::uint64_t p, long m, long r_lo, long r_hi, long resource_cap) {
    FormulaCheck out;
    out.weierstrass = iwasawa_weierstrass(f, p, m);
    try {
        out.triple = nu_estimate(f, p, m, r_lo, r_hi, resource_cap);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoStabilization) throw;
        out.pass = false;
        out.detail = e.what();
        return out;
    }
    const auto& tr = *out.triple;
    long bound = std::max(r_lo, tr.predicted_level - 1);
    out.pass = tr.stable_from <= bound;
    out.detail = "stable_from=" + std::to_string(tr.stable_from) + " predicted<=" + std::to_string(bound);
    if (tr.psi_flag) out.detail += " (quotient convention on some levels)";
    return out;
}

LambdaMu reidemeister_iwasawa(const ZPoly& f1, const ZPoly& f0, std::uint64_t p, long m) {
    auto a = iwasawa_lambda_mu(f1, p, m);
    auto b = iwasawa_lambda_mu(f0, p, m);
    return {a.lambda - b.lambda, a.mu - b.mu};
}

LambdaSup lambda_sup(const ZPoly& f, std::uint64_t p, long m_max) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "invariants of the zero polynomial are undefined");
    LambdaSup out;
    const long bound = f.span();
    for (long m = 1; m <= m_max; ++m) {
        if (std::gcd(static_cast<std::uint64_t>(m), p) != 1) continue;
        auto lm = iwasawa_lambda_mu(f, p, m);
        if (lm.lambda > out.max_lambda) {
            out.max_lambda = lm.lambda;
            out.witness_m = m;
            out.mu_at_witness = lm.mu;
        }
        if (out.max_lambda >= bound) break;
    }
    return out;
}

} // namespace iwknot
