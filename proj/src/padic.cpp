#include "iwknot/padic.hpp"

#include "iwknot/parallel.hpp"
#include "iwknot/polyalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace iwknot {

long gauss_norm_exponent(const ZPoly& f, std::uint64_t p) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "Gauss norm of the zero polynomial");
    long best = -1;
    for (const auto& [e, c] : f.terms()) {
        long v = valuation(c, p).value;
        if (best < 0 || v < best) best = v;
        if (best == 0) break;
    }
    return best;
}

double log_abs(const Integer& a) {
    if (a == 0) return -INFINITY;
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, a.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

std::vector<double> root_magnitudes(const ZPoly& f_in) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    ZPoly f = f_in.shifted_to_zero();
    const long d = f.degree();
    std::vector<double> out;
    if (d == 0) return out;
    // scale the companion by the leading coefficient in floating point
    const double lead = f.lead().get_d();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) C(i, d - 1) = -f.coeff(i).get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    if (es.info() != Eigen::Success) fail(ErrorKind::ConvergenceFailure, "companion eigenvalue iteration did not converge");
    for (long i = 0; i < d; ++i) {
        double m = std::abs(es.eigenvalues()[i]);
        if (!std::isfinite(m)) fail(ErrorKind::ConvergenceFailure, "non-finite root magnitude");
        if (std::fabs(m - 1.0) <= 1e-9) m = 1.0;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double mahler_measure_graeffe(const ZPoly& f_in, double tol) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "Mahler measure of the zero polynomial");
    ZPoly f = f_in.shifted_to_zero();
    const long d = f.degree();
    if (d == 0) return std::fabs(f.lead().get_d());
    // coefficients kept as scale * g with max|g| = 1
    std::vector<long double> g(d + 1);
    long double log_scale = 0;
    {
        double mx = 0;
        for (const auto& [e, c] : f.terms()) mx = std::max(mx, log_abs(c));
        log_scale = mx;
        for (long i = 0; i <= d; ++i) {
            const Integer c = f.coeff(i);
            g[i] = c == 0 ? 0.0L : (c < 0 ? -1.0L : 1.0L) * std::exp(static_cast<long double>(log_abs(c)) - log_scale);
        }
    }
    const long double ln2 = std::log(2.0L);
    long double pow2 = 1;
    for (int k = 1; k <= 90; ++k) {
        std::vector<long double> h(d + 1, 0.0L);
        for (long m = 0; m <= d; ++m) {
            long double acc = 0;
            for (long i = std::max(0L, 2 * m - d); i <= std::min(d, 2 * m); ++i) {
                long j = 2 * m - i;
                acc += ((j % 2) ? -1.0L : 1.0L) * g[i] * g[j];
            }
            h[m] = acc;
        }
        long double mx = 0;
        for (auto x : h) mx = std::max(mx, std::fabs(x));
        if (!(mx > 0) || !std::isfinite(static_cast<double>(mx)))
            fail(ErrorKind::ConvergenceFailure, "Graeffe iteration degenerated");
        for (auto& x : h) x /= mx;
        log_scale = 2 * log_scale + std::log(mx);
        pow2 *= 2;
        g.swap(h);
        long double norm2 = 0;
        for (auto x : g) norm2 += x * x;
        long double upper = (log_scale + 0.5L * std::log(norm2)) / pow2;
        long double width = static_cast<long double>(d) * ln2 / pow2;
        if (width < tol / 4) return static_cast<double>(std::exp(upper - width / 2));
    }
    fail(ErrorKind::ConvergenceFailure, "Graeffe iteration did not reach the requested tolerance");
}

double mahler_measure(const ZPoly& f_in, double tol) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "Mahler measure of the zero polynomial");
    if (tol < 1e-8) return mahler_measure_graeffe(f_in, tol);
    ZPoly f = f_in.shifted_to_zero();
    double m = std::fabs(f.lead().get_d());
    for (double r : root_magnitudes(f)) m *= std::max(1.0, r);
    return m;
}

MeasureReport measure_report(const ZPoly& f, std::uint64_t p, double tol) {
    MeasureReport r;
    r.mahler = mahler_measure(f, tol);
    r.gauss_exponent = gauss_norm_exponent(f, p);
    r.roots = root_magnitudes(f);
    return r;
}

std::vector<AsymptoticRow> asymptotic_check(const ZPoly& f, long n_max, std::uint64_t p, long n_min) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "asymptotic check of the zero polynomial");
    if (n_min < 1 || n_max < n_min) fail(ErrorKind::InvalidArgument, "empty range of n");
    std::vector<AsymptoticRow> rows(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(rows.size(), [&](std::size_t i) {
        long n = n_min + static_cast<long>(i);
        auto cr = cyclic_resultant(f, n);
        AsymptoticRow& row = rows[i];
        row.n = n;
        row.resultant = cr.value;
        row.psi_nontrivial = cr.psi.degree() > 0;
        row.root_growth = std::exp(log_abs(cr.value) / static_cast<double>(n));
        row.valuation = valuation(cr.value, p).value;
        row.p_part = std::pow(static_cast<double>(p), -static_cast<double>(row.valuation) / static_cast<double>(n));
    });
    return rows;
}

} // namespace iwknot
