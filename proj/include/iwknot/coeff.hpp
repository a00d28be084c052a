#pragma once

// Coefficient domains. Every element knows which domain it lives in, so
// mixing elements from different domains raises DomainMismatch instead of
// silently producing garbage.

#include "iwknot/arith.hpp"
#include "iwknot/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iwknot {

template <class R>
struct ring_traits;

template <class R>
using ctx_of = typename ring_traits<R>::Ctx;

// ---------------------------------------------------------------- integers

template <>
struct ring_traits<Integer> {
    struct Ctx {
        bool operator==(const Ctx&) const { return true; }
    };
    static constexpr bool is_field = false;
    static constexpr bool is_finite = false;
    static Ctx ctx(const Integer&) { return {}; }
    static Integer zero(const Ctx&) { return 0; }
    static Integer one(const Ctx&) { return 1; }
    static Integer from_int(const Ctx&, const Integer& n) { return n; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
    static Integer inv(const Integer& a) {
        if (!is_unit(a)) fail(ErrorKind::NonInvertibleEvaluationPoint, a.get_str() + " is not a unit in Z");
        return a;
    }
    static Integer divexact(const Integer& a, const Integer& b) {
        if (b == 0) fail(ErrorKind::InexactDivision, "division by zero");
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            fail(ErrorKind::InexactDivision, a.get_str() + " / " + b.get_str());
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    // unit u with u*a in canonical form
    static Integer normalizer(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
    static std::string str(const Integer& a) { return a.get_str(); }
    static std::string domain_name(const Ctx&) { return "integers"; }
};

// --------------------------------------------------------------- rationals

template <>
struct ring_traits<Rational> {
    struct Ctx {
        bool operator==(const Ctx&) const { return true; }
    };
    static constexpr bool is_field = true;
    static constexpr bool is_finite = false;
    static Ctx ctx(const Rational&) { return {}; }
    static Rational zero(const Ctx&) { return 0; }
    static Rational one(const Ctx&) { return 1; }
    static Rational from_int(const Ctx&, const Integer& n) { return Rational(n); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool is_unit(const Rational& a) { return a != 0; }
    static Rational inv(const Rational& a) {
        if (a == 0) fail(ErrorKind::NonInvertibleEvaluationPoint, "zero is not invertible");
        return Rational(1) / a;
    }
    static Rational divexact(const Rational& a, const Rational& b) {
        if (b == 0) fail(ErrorKind::InexactDivision, "division by zero");
        return Rational(a / b);
    }
    static Rational normalizer(const Rational& a) { return inv(a); }
    static std::string str(const Rational& a) { return a.get_str(); }
    static std::string domain_name(const Ctx&) { return "rationals"; }
};

// ------------------------------------------------------------ prime fields

struct Fp {
    std::uint64_t p = 0;
    std::uint64_t v = 0;

    Fp() = default;
    Fp(std::uint64_t p_, std::uint64_t v_) : p(p_), v(v_ % p_) {}
    static Fp from(std::uint64_t p, const Integer& a) { return Fp(p, mod_reduce(a, p)); }
    static Fp from(std::uint64_t p, long a) {
        long r = a % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return Fp(p, static_cast<std::uint64_t>(r));
    }

    Fp inv() const;
    bool operator==(const Fp& o) const { return p == o.p && v == o.v; }
};

inline void check_same(const Fp& a, const Fp& b) {
    if (a.p != b.p)
        fail(ErrorKind::DomainMismatch, "F_" + std::to_string(a.p) + " vs F_" + std::to_string(b.p));
}
inline Fp operator+(const Fp& a, const Fp& b) {
    check_same(a, b);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p || s < a.v) s -= a.p;
    return {a.p, s};
}
inline Fp operator-(const Fp& a, const Fp& b) {
    check_same(a, b);
    return {a.p, a.v >= b.v ? a.v - b.v : a.p - (b.v - a.v)};
}
inline Fp operator-(const Fp& a) { return {a.p, a.v == 0 ? 0 : a.p - a.v}; }
inline Fp operator*(const Fp& a, const Fp& b) {
    check_same(a, b);
    return {a.p, mulmod(a.v, b.v, a.p)};
}
inline Fp Fp::inv() const {
    if (v == 0) fail(ErrorKind::NonInvertibleEvaluationPoint, "zero in F_" + std::to_string(p));
    return {p, invmod(v, p)};
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }

template <>
struct ring_traits<Fp> {
    struct Ctx {
        std::uint64_t p = 0;
        bool operator==(const Ctx&) const = default;
    };
    static constexpr bool is_field = true;
    static constexpr bool is_finite = true;
    static Ctx ctx(const Fp& a) { return {a.p}; }
    static Fp zero(const Ctx& c) { return {c.p, 0}; }
    static Fp one(const Ctx& c) { return {c.p, 1}; }
    static Fp from_int(const Ctx& c, const Integer& n) { return Fp::from(c.p, n); }
    static bool is_zero(const Fp& a) { return a.v == 0; }
    static bool is_unit(const Fp& a) { return a.v != 0; }
    static Fp inv(const Fp& a) { return a.inv(); }
    static Fp divexact(const Fp& a, const Fp& b) {
        if (b.v == 0) fail(ErrorKind::InexactDivision, "division by zero");
        return a / b;
    }
    static Fp normalizer(const Fp& a) { return a.inv(); }
    static std::string str(const Fp& a) { return std::to_string(a.v); }
    static std::string domain_name(const Ctx& c) { return "F_" + std::to_string(c.p); }
    static std::uint64_t characteristic(const Ctx& c) { return c.p; }
    static std::uint64_t size(const Ctx& c) { return c.p; }
    static Fp element(const Ctx& c, std::uint64_t i) { return {c.p, i}; }
};

// ------------------------------------------------- general finite fields

/// GF(p^k) as F_p[s]/(modulus). Contexts are interned, so pointer equality
/// is domain equality and elements stay cheap to copy.
struct FqField {
    std::uint64_t p = 0;
    int k = 1;
    std::vector<std::uint64_t> modulus; // monic, low to high, size k+1
    std::uint64_t size = 0;
    std::optional<std::uint64_t> nonresidue; // set when modulus is s^2 - nonresidue
};

constexpr int kFqMaxDegree = 8;

/// Canonical field of order p^k. k = 2 with odd p adjoins the square root
/// of the least nonresidue; p = 2, k = 2 uses s^2 = s + 1.
const FqField* fq_field(std::uint64_t p, int k);
/// F_p(sqrt(nonresidue)); nonresidue must be a quadratic nonresidue mod odd p.
const FqField* fq_quadratic(std::uint64_t p, std::uint64_t nonresidue);
const FqField* fq_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);
bool fp_poly_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f);

struct Fq {
    const FqField* F = nullptr;
    std::array<std::uint64_t, kFqMaxDegree> c{};

    Fq() = default;
    explicit Fq(const FqField* f) : F(f) {}
    static Fq from_int(const FqField* f, const Integer& n) {
        Fq r(f);
        r.c[0] = mod_reduce(n, f->p);
        return r;
    }
    static Fq from_int(const FqField* f, long n) { return from_int(f, Integer(n)); }
    static Fq from_fp(const FqField* f, const Fp& a) {
        if (a.p != f->p) fail(ErrorKind::DomainMismatch, "prime field does not embed");
        Fq r(f);
        r.c[0] = a.v;
        return r;
    }
    /// the adjoined generator s
    static Fq gen(const FqField* f) {
        Fq r(f);
        if (f->k == 1) {
            // F_p itself; the generator is a root of the linear modulus
            r.c[0] = (f->p - f->modulus[0]) % f->p;
        } else {
            r.c[1] = 1;
        }
        return r;
    }
    bool is_zero() const {
        for (int i = 0; i < F->k; ++i)
            if (c[i]) return false;
        return true;
    }
    bool in_prime_field() const {
        for (int i = 1; i < F->k; ++i)
            if (c[i]) return false;
        return true;
    }
    Fq inv() const;
    Fq pow(std::uint64_t e) const;
    std::uint64_t index() const;
    bool operator==(const Fq& o) const { return F == o.F && c == o.c; }
    bool operator<(const Fq& o) const { return index() < o.index(); }
};

Fq operator+(const Fq& a, const Fq& b);
Fq operator-(const Fq& a, const Fq& b);
Fq operator-(const Fq& a);
Fq operator*(const Fq& a, const Fq& b);
inline Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }
inline Fq& operator+=(Fq& a, const Fq& b) { return a = a + b; }
inline Fq& operator-=(Fq& a, const Fq& b) { return a = a - b; }
inline Fq& operator*=(Fq& a, const Fq& b) { return a = a * b; }
std::string fq_str(const Fq& a);

template <>
struct ring_traits<Fq> {
    struct Ctx {
        const FqField* F = nullptr;
        bool operator==(const Ctx&) const = default;
    };
    static constexpr bool is_field = true;
    static constexpr bool is_finite = true;
    static Ctx ctx(const Fq& a) { return {a.F}; }
    static Fq zero(const Ctx& c) { return Fq(c.F); }
    static Fq one(const Ctx& c) { return Fq::from_int(c.F, 1L); }
    static Fq from_int(const Ctx& c, const Integer& n) { return Fq::from_int(c.F, n); }
    static bool is_zero(const Fq& a) { return a.is_zero(); }
    static bool is_unit(const Fq& a) { return !a.is_zero(); }
    static Fq inv(const Fq& a) { return a.inv(); }
    static Fq divexact(const Fq& a, const Fq& b) {
        if (b.is_zero()) fail(ErrorKind::InexactDivision, "division by zero");
        return a / b;
    }
    static Fq normalizer(const Fq& a) { return a.inv(); }
    static std::string str(const Fq& a) { return fq_str(a); }
    static std::string domain_name(const Ctx& c);
    static std::uint64_t characteristic(const Ctx& c) { return c.F->p; }
    static std::uint64_t size(const Ctx& c) { return c.F->size; }
    static Fq element(const Ctx& c, std::uint64_t i);
};

// ------------------------------------------------ quadratic integer rings

/// Z[w] with w = sqrt(D), or w = (1+sqrt(D))/2 when `half` (needs D = 1 mod 4).
struct QuadCtx {
    long D = 0;
    bool half = false;
    bool operator==(const QuadCtx&) const = default;
};

QuadCtx make_quad_ctx(long D, bool half);

struct QuadInt {
    QuadCtx ctx;
    Integer a = 0, b = 0; // a + b*w

    QuadInt() = default;
    QuadInt(QuadCtx c, Integer a_, Integer b_) : ctx(c), a(std::move(a_)), b(std::move(b_)) {}

    QuadInt conj() const;
    Integer norm() const;
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QuadInt& o) const { return ctx == o.ctx && a == o.a && b == o.b; }
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
inline QuadInt& operator+=(QuadInt& a, const QuadInt& b) { return a = a + b; }
inline QuadInt& operator-=(QuadInt& a, const QuadInt& b) { return a = a - b; }
inline QuadInt& operator*=(QuadInt& a, const QuadInt& b) { return a = a * b; }
QuadInt quad_divexact(const QuadInt& x, const QuadInt& y);
std::vector<QuadInt> quad_units(const QuadCtx& c);
std::string quad_str(const QuadInt& x);

template <>
struct ring_traits<QuadInt> {
    using Ctx = QuadCtx;
    static constexpr bool is_field = false;
    static constexpr bool is_finite = false;
    static Ctx ctx(const QuadInt& a) { return a.ctx; }
    static QuadInt zero(const Ctx& c) { return {c, 0, 0}; }
    static QuadInt one(const Ctx& c) { return {c, 1, 0}; }
    static QuadInt from_int(const Ctx& c, const Integer& n) { return {c, n, 0}; }
    static bool is_zero(const QuadInt& a) { return a.is_zero(); }
    static bool is_unit(const QuadInt& a) {
        Integer n = a.norm();
        return n == 1 || n == -1;
    }
    static QuadInt inv(const QuadInt& a) {
        if (!is_unit(a)) fail(ErrorKind::NonInvertibleEvaluationPoint, quad_str(a) + " is not a unit");
        return quad_divexact(one(a.ctx), a);
    }
    static QuadInt divexact(const QuadInt& a, const QuadInt& b) { return quad_divexact(a, b); }
    static QuadInt normalizer(const QuadInt& a);
    static std::string str(const QuadInt& a) { return quad_str(a); }
    static std::string domain_name(const Ctx& c);
};

// ----------------------------------------------------------- generic helpers

template <class R>
R rpow(R base, std::uint64_t e) {
    R r = ring_traits<R>::one(ring_traits<R>::ctx(base));
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/// Square root in Q, F_p or F_q when one exists.
std::optional<Rational> field_sqrt(const Rational& a);
std::optional<Fp> field_sqrt(const Fp& a);
std::optional<Fq> field_sqrt(const Fq& a);

/// Roots of a*X^2 + b*X + c (a != 0) lying in the field, without multiplicity.
template <class R>
std::vector<R> quadratic_roots(const R& a, const R& b, const R& c) {
    using T = ring_traits<R>;
    auto cx = T::ctx(a);
    std::vector<R> out;
    if constexpr (T::is_finite) {
        if (T::characteristic(cx) == 2) {
            for (std::uint64_t i = 0; i < T::size(cx); ++i) {
                R s = T::element(cx, i);
                if (T::is_zero(a * s * s + b * s + c)) out.push_back(s);
            }
            return out;
        }
    }
    R two = T::from_int(cx, 2);
    R four = T::from_int(cx, 4);
    R disc = b * b - four * a * c;
    auto sq = field_sqrt(disc);
    if (!sq) return out;
    R den = T::inv(two * a);
    out.push_back((-b + *sq) * den);
    if (!T::is_zero(*sq)) out.push_back((-b - *sq) * den);
    return out;
}

} // namespace iwknot
