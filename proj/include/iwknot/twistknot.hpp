#pragma once

// Twist knots J(2,2n): Chebyshev recursion, the Riley polynomial in trace
// coordinates x = tr rho(a), y = tr rho(ab), Tran's torsion coefficients and
// the scans built on them.

#include "iwknot/fox.hpp"
#include "iwknot/polyalg.hpp"
#include "iwknot/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iwknot {

struct TwistKnot {
    long n = 0;
    bool fibered() const { return n == 0 || n == 1 || n == -1; }
    /// 0_1, 3_1, 4_1, 5_2 for the small cases, J(2,2n) otherwise
    std::string name() const;
};

/// S_k(z) in Z[z]; S_0 = 0, S_1 = 1, S_{-k} = -S_k.
const ZPoly& chebyshev_poly(long k);

/// (S_{n+1} - S_{n-1} - 2) / (z - 2), exact in Z[z].
const ZPoly& tran_a0_poly(long n);

template <class R>
R eval_zpoly(const ZPoly& f, const R& z) {
    using T = ring_traits<R>;
    auto cx = T::ctx(z);
    R acc = T::zero(cx);
    if (f.is_zero()) return acc;
    for (long e = f.max_exp(); e >= 0; --e) acc = acc * z + T::from_int(cx, f.coeff(e));
    return acc;
}

template <class R>
R chebyshev(long k, const R& z) {
    using T = ring_traits<R>;
    auto cx = T::ctx(z);
    if (k < 0) return -chebyshev(-k, z);
    R prev = T::zero(cx), cur = T::one(cx);
    if (k == 0) return prev;
    for (long i = 1; i < k; ++i) {
        R next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Trace coordinates; z is recomputed on every call.
template <class R>
struct TracePoint {
    R x, y;
    R z() const {
        R two = ring_traits<R>::from_int(ring_traits<R>::ctx(x), 2);
        R xx = x * x;
        return two * xx - xx * y + y * y - two;
    }
    /// x^2 - y - 2, zero exactly on the reducible locus
    R reducibility() const {
        R two = ring_traits<R>::from_int(ring_traits<R>::ctx(x), 2);
        return x * x - y - two;
    }
};

template <class R>
R riley_fn(long n, const TracePoint<R>& pt) {
    R z = pt.z();
    R one = ring_traits<R>::one(ring_traits<R>::ctx(z));
    return (pt.y - one) * chebyshev(n, z) - chebyshev(n - 1, z);
}

template <class R>
std::pair<R, R> tran_coefficients(long n, const TracePoint<R>& pt) {
    R z = pt.z();
    R a0 = eval_zpoly(tran_a0_poly(n), z);
    R a1 = pt.x * (chebyshev(n, z) - a0);
    return {a0, a1};
}

enum class PointKind { Irreducible, ReducibleNonabelian, OffVariety };
std::string to_string(PointKind k);

template <class R>
struct PointClass {
    PointKind kind;
    R f_value;
    R reducibility;
};

/// Points off f_n = 0 are OffVariety even when x^2 - y - 2 = 0. Over a finite
/// field the labels are absolute since x^2 - y - 2 does not see extensions.
template <class R>
PointClass<R> classify_point(long n, const TracePoint<R>& pt) {
    using T = ring_traits<R>;
    R f = riley_fn(n, pt);
    R d = pt.reducibility();
    PointKind k = PointKind::OffVariety;
    if (T::is_zero(f)) k = T::is_zero(d) ? PointKind::ReducibleNonabelian : PointKind::Irreducible;
    return {k, f, d};
}

/// a0 t^2 + a1 t + a0
template <class R>
Laurent<R> torsion_poly(long n, const TracePoint<R>& pt) {
    using T = ring_traits<R>;
    auto c = classify_point(n, pt);
    if (c.kind != PointKind::Irreducible)
        fail(ErrorKind::NotIrreducible, "(" + T::str(pt.x) + ", " + T::str(pt.y) + ") is " + to_string(c.kind));
    auto [a0, a1] = tran_coefficients(n, pt);
    auto cx = T::ctx(pt.x);
    return Laurent<R>::from_terms(cx, {{0, a0}, {1, a1}, {2, a0}});
}

/// tau(1) = 2 a0 + a1
template <class R>
R torsion_at_one(long n, const TracePoint<R>& pt) {
    auto [a0, a1] = tran_coefficients(n, pt);
    return a0 + a0 + a1;
}

/// (t - 1, n t^2 - (2n-1) t + n)
std::pair<ZPoly, ZPoly> classical_alexander(long n);

template <class R>
struct ReducibleTorsion {
    Laurent<R> delta0; // t^2 - x t + 1
    Laurent<R> delta1; // Delta_K(k t) Delta_K(t / k) expanded in x = k + 1/k
    std::optional<R> kappa;
    // t - kappa and delta1 / (t - 1/kappa), when kappa exists and divides
    std::optional<std::pair<Laurent<R>, Laurent<R>>> divisor_branch;
};

template <class R>
ReducibleTorsion<R> reducible_torsion(long n, const R& x) {
    using T = ring_traits<R>;
    auto cx = T::ctx(x);
    auto I = [&](long v) { return T::from_int(cx, Integer(v)); };
    R nn = I(n), m = I(2 * n - 1);
    R top = nn * nn;
    R c3 = -(nn * m * x);
    R c2 = nn * nn * (x * x - I(2)) + m * m;
    ReducibleTorsion<R> out;
    out.delta0 = Laurent<R>::from_terms(cx, {{0, I(1)}, {1, -x}, {2, I(1)}});
    out.delta1 = Laurent<R>::from_terms(cx, {{0, top}, {1, c3}, {2, c2}, {3, c3}, {4, top}});
    if constexpr (T::is_field) {
        auto roots = quadratic_roots(T::one(cx), R(-x), T::one(cx));
        if (!roots.empty()) {
            R k = roots.front();
            out.kappa = k;
            R ki = T::inv(k);
            if (!out.delta1.is_zero() && T::is_zero(out.delta1.eval(ki))) {
                Laurent<R> lin0 = Laurent<R>::from_terms(cx, {{0, -k}, {1, I(1)}});
                Laurent<R> lin1 = Laurent<R>::from_terms(cx, {{0, -ki}, {1, I(1)}});
                out.divisor_branch.emplace(lin0, divide_exact(out.delta1, lin1));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ representations

/// s with s^2 - x s + 1 = 0 in the coefficient domain of x.
std::optional<QuadInt> trace_root(const QuadInt& x);

template <class R>
std::optional<R> trace_root(const R& x) {
    using T = ring_traits<R>;
    auto cx = T::ctx(x);
    auto roots = quadratic_roots(T::one(cx), R(-x), T::one(cx));
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

/// rho(a) = [[s,1],[0,1/s]], rho(b) = [[s,0],[u,1/s]] with u = y - x^2 + 2.
template <class R>
MatrixRep<R> build_rep(const TracePoint<R>& pt) {
    using T = ring_traits<R>;
    auto cx = T::ctx(pt.x);
    R u = pt.y - pt.x * pt.x + T::from_int(cx, 2);
    if (T::is_zero(u)) fail(ErrorKind::ReduciblePoint, "x^2 - y - 2 = 0");
    auto s = trace_root(pt.x);
    if (!s) fail(ErrorKind::NoSquareRoot, "s + 1/s = " + T::str(pt.x) + " has no solution in " + T::domain_name(cx));
    R si = T::inv(*s);
    R zero = T::zero(cx), one = T::one(cx);
    MatrixRep<R> rep;
    rep.N = 2;
    rep.mats.push_back({{*s, one}, {zero, si}});
    rep.mats.push_back({{*s, zero}, {u, si}});
    return rep;
}

/// Same traces without a square root of x^2 - 4: rho(a) = [[x,1],[-1,0]] and
/// rho(b) = [[c,q],[r,x-c]] with c picked so that q solves
/// q^2 + (y - x c) q - (c (x - c) - 1) = 0 in the field.
template <class R>
MatrixRep<R> build_rep_conic(const TracePoint<R>& pt) {
    using T = ring_traits<R>;
    static_assert(T::is_field, "conic search needs a field");
    auto cx = T::ctx(pt.x);
    if (T::is_zero(pt.reducibility())) fail(ErrorKind::ReduciblePoint, "x^2 - y - 2 = 0");
    R zero = T::zero(cx), one = T::one(cx);
    auto attempt = [&](const R& c) -> std::optional<MatrixRep<R>> {
        R lin = pt.y - pt.x * c;
        R cst = -(c * (pt.x - c) - one);
        auto qs = quadratic_roots(one, lin, cst);
        if (qs.empty()) return std::nullopt;
        R q = qs.front();
        R r = q + lin;
        MatrixRep<R> rep;
        rep.N = 2;
        rep.mats.push_back({{pt.x, one}, {-one, zero}});
        rep.mats.push_back({{c, q}, {r, pt.x - c}});
        return rep;
    };
    if constexpr (T::is_finite) {
        for (std::uint64_t i = 0; i < T::size(cx); ++i)
            if (auto rep = attempt(T::element(cx, i))) return *rep;
    } else {
        for (long k = 0; k <= 200; ++k)
            for (long sgn : {1L, -1L})
                if (auto rep = attempt(T::from_int(cx, Integer(sgn * k)))) return *rep;
    }
    fail(ErrorKind::NoSquareRoot, "no rational point found on the trace conic");
}

/// build_rep, falling back to the conic search when s is missing.
template <class R>
MatrixRep<R> build_rep_any(const TracePoint<R>& pt) {
    try {
        return build_rep(pt);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSquareRoot) throw;
    }
    return build_rep_conic(pt);
}

// ------------------------------------------------------------ finite scans

/// Elements of F_{p^2} listed in index order; the prime field comes first.
std::vector<Fq> field_elements(const FqField* F);

/// x = y = 1 - a - 1/a over a in F_{p^2} with a^(3n-1) = 1, a != +-1,
/// sorted by x and without repeats.
std::vector<Fq> nonacyclic_points(long n, std::uint64_t p);

/// Solutions of 2a0 + a1 = 0, f_n = 0, x^2 - y - 2 != 0 with x, y in F_p.
std::vector<std::pair<Fp, Fp>> nonacyclic_bruteforce(long n, std::uint64_t p);

/// Every point of f_n = 0 over F_p and over F_{p^2} (both exhaustive when
/// `extension` is set): irreducible points must have (a0, a1) != (0, 0) and
/// reducible ones a nonzero reducible torsion.
ScanReport mu_zero_scan(long n, std::uint64_t p, bool extension = true);

/// The points (+-1, -1) when p | 3n - 1. Raises PrecondFailed otherwise.
ScanReport residually_reducible_report(long n, std::uint64_t p);

/// Gradient of f_n as a polynomial in x and y, evaluated over Z.
std::pair<Integer, Integer> riley_gradient(long n, const Integer& x, const Integer& y);

/// Points of f_n = 0 over F with x^2 - y - 2 != 0, in index order.
std::vector<TracePoint<Fq>> irreducible_points(long n, const FqField* F);

} // namespace iwknot
