#pragma once

#include "iwknot/laurent.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace iwknot {

template <class E>
using Matrix = std::vector<std::vector<E>>;

// ------------------------------------------------------------ determinants

/// Fraction-free elimination. `divexact(a, b)` must return a/b when b | a.
template <class E, class IsZero, class DivExact>
E det_bareiss(Matrix<E> M, const E& one, IsZero is_zero, DivExact divexact) {
    const std::size_t n = M.size();
    if (n == 0) return one;
    bool negate = false;
    E prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(M[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(M[r][k])) ++r;
            if (r == n) return E(one - one);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                E num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = divexact(num, prev);
            }
            M[i][k] = E(one - one);
        }
        prev = M[k][k];
    }
    E d = M[n - 1][n - 1];
    return negate ? E(-d) : d;
}

/// Laplace expansion along the first row; meant for sizes up to 4.
template <class E>
E det_cofactor(const Matrix<E>& M, const E& one) {
    const std::size_t n = M.size();
    if (n == 0) return one;
    if (n == 1) return M[0][0];
    if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
    E acc = one - one;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<E> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<E> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(M[i][c]);
            minor.push_back(std::move(row));
        }
        E term = M[0][j] * det_cofactor(minor, one);
        acc = (j % 2 == 0) ? E(acc + term) : E(acc - term);
    }
    return acc;
}

template <class R>
R det(const Matrix<R>& M, const ctx_of<R>& cx) {
    using T = ring_traits<R>;
    return det_bareiss<R>(
        M, T::one(cx), [](const R& a) { return T::is_zero(a); },
        [](const R& a, const R& b) { return T::divexact(a, b); });
}

// ------------------------------------------------------------ division

/// Long division over a field: f = q*g + r, deg r < deg g. Inputs are read
/// as ordinary polynomials after shifting to min_exp 0.
template <class R>
std::pair<Laurent<R>, Laurent<R>> divmod(const Laurent<R>& f, const Laurent<R>& g) {
    using T = ring_traits<R>;
    static_assert(T::is_field, "divmod needs a field");
    if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    Laurent<R> r = f.shifted_to_zero();
    Laurent<R> G = g.shifted_to_zero();
    Laurent<R> q(G.ctx());
    R li = T::inv(G.lead());
    long dg = G.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        long e = r.degree() - dg;
        R c = r.lead() * li;
        q.add_term(e, c);
        r -= G.shift(e).scale(c);
    }
    return {q, r};
}

/// f / g as Laurent polynomials; throws InexactDivision unless g divides f.
template <class R>
Laurent<R> divide_exact(const Laurent<R>& f, const Laurent<R>& g) {
    using T = ring_traits<R>;
    if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (f.is_zero()) return Laurent<R>(g.ctx());
    Laurent<R> r = f.shifted_to_zero();
    Laurent<R> G = g.shifted_to_zero();
    Laurent<R> q(G.ctx());
    long dg = G.degree();
    const R& lg = G.lead();
    while (!r.is_zero()) {
        if (r.degree() < dg) fail(ErrorKind::InexactDivision, f.str() + " by " + g.str());
        long e = r.degree() - dg;
        R c = T::divexact(r.lead(), lg);
        q.add_term(e, c);
        r -= G.shift(e).scale(c);
    }
    return q.shift(f.min_exp() - g.min_exp());
}

template <class R>
bool divides(const Laurent<R>& g, const Laurent<R>& f) {
    try {
        (void)divide_exact(f, g);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InexactDivision) return false;
        throw;
    }
}

/// Monic gcd over a field, as an ordinary polynomial.
template <class R>
Laurent<R> gcd_field(Laurent<R> a, Laurent<R> b) {
    using T = ring_traits<R>;
    static_assert(T::is_field, "gcd_field needs a field");
    a = a.shifted_to_zero();
    b = b.shifted_to_zero();
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    a = a.shifted_to_zero();
    return a.scale(T::inv(a.lead()));
}

// ------------------------------------------------------------ normal forms

/// Canonical representative of the class of f up to units and powers of t.
template <class R>
Laurent<R> unit_normal(const Laurent<R>& f) {
    if (f.is_zero()) return f;
    Laurent<R> g = f.shifted_to_zero();
    return g.scale(ring_traits<R>::normalizer(g.trail()));
}

template <class R>
bool doteq_equal(const Laurent<R>& f, const Laurent<R>& g) {
    return unit_normal(f) == unit_normal(g);
}

// ------------------------------------------------------------ resultants

/// With `shift` the inputs are first moved to min_exp 0; without it they
/// must already be ordinary polynomials.
template <class R>
Matrix<R> sylvester_matrix(const Laurent<R>& f_in, const Laurent<R>& g_in, bool shift = true) {
    using T = ring_traits<R>;
    if (!shift && (f_in.min_exp() < 0 || g_in.min_exp() < 0))
        fail(ErrorKind::InvalidArgument, "Sylvester matrix of a Laurent polynomial");
    Laurent<R> f = shift ? f_in.shifted_to_zero() : f_in;
    Laurent<R> g = shift ? g_in.shifted_to_zero() : g_in;
    const long m = f.degree(), n = g.degree();
    const auto cx = f.ctx();
    Matrix<R> S(static_cast<std::size_t>(m + n), std::vector<R>(static_cast<std::size_t>(m + n), T::zero(cx)));
    for (long i = 0; i < n; ++i)
        for (const auto& [e, c] : f.terms()) S[i][i + m - e] = c;
    for (long i = 0; i < m; ++i)
        for (const auto& [e, c] : g.terms()) S[n + i][i + n - e] = c;
    return S;
}

/// Sylvester determinant of the shifted inputs, so
/// Res(f, g) = lead(f)^deg g * prod over roots a of f of g(a).
template <class R>
R resultant(const Laurent<R>& f, const Laurent<R>& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant of the zero polynomial");
    return det(sylvester_matrix(f, g), f.ctx());
}

/// Resultant of ordinary polynomials, no shift applied.
template <class R>
R resultant_ordinary(const Laurent<R>& f, const Laurent<R>& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant of the zero polynomial");
    return det(sylvester_matrix(f, g, false), f.ctx());
}

// ------------------------------------------------------------ substitutions

/// f(1+T) after shifting f to min_exp 0, as a polynomial in T.
template <class R>
Laurent<R> substitute_shift(const Laurent<R>& f) {
    using T = ring_traits<R>;
    Laurent<R> g = f.shifted_to_zero();
    Laurent<R> out(f.ctx());
    for (const auto& [i, a] : g.terms())
        for (long j = 0; j <= i; ++j) out.add_term(j, R(a * T::from_int(f.ctx(), binomial(i, j))));
    return out;
}

/// g((1+T)^m) for an ordinary polynomial g, expanded exactly.
template <class R>
Laurent<R> compose_one_plus_T_power(const Laurent<R>& g_in, long m) {
    using T = ring_traits<R>;
    Laurent<R> g = g_in.shifted_to_zero();
    Laurent<R> out(g.ctx());
    for (const auto& [k, a] : g.terms()) {
        unsigned long N = static_cast<unsigned long>(m * k);
        for (unsigned long j = 0; j <= N; ++j) out.add_term(static_cast<long>(j), R(a * T::from_int(g.ctx(), binomial(N, j))));
    }
    return out;
}

// ------------------------------------------------------------ integer-only

Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
/// gcd over Q made primitive with positive leading coefficient.
ZPoly gcd_z(const ZPoly& a, const ZPoly& b);
Laurent<Fp> reduce_mod(const ZPoly& f, std::uint64_t p);
QPoly to_rational(const ZPoly& f);
/// Clears denominators: returns (integer poly, positive d) with f = poly / d.
std::pair<ZPoly, Integer> clear_denominators(const QPoly& f);

struct CyclicResultant {
    Integer value;
    ZPoly psi; // gcd(t^n - 1, f), monic; 1 in the generic case
};

/// value = Res((t^n - 1)/psi, f).
CyclicResultant cyclic_resultant(const ZPoly& f, long n);
/// Same value through one Sylvester determinant; quadratic in n.
CyclicResultant cyclic_resultant_sylvester(const ZPoly& f, long n);

/// g(s) = lead(f)^m * prod (s - a^m) over the roots a of f, so that
/// g(t^m) equals prod over m-th roots of unity z of f(z t) up to sign.
ZPoly cyclotomic_product(const ZPoly& f, long m);

/// f * f^sigma, with integer coefficients.
ZPoly norm_polynomial(const Laurent<QuadInt>& f);

} // namespace iwknot
