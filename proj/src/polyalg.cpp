#include "iwknot/polyalg.hpp"

namespace iwknot {

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    Integer c = content(f);
    if (f.lead() < 0) c = -c;
    return f.map_coeffs([&](const Integer& a) { return ring_traits<Integer>::divexact(a, c); });
}

namespace {

// A = lc(B)^k * A mod B with the power folded in step by step.
ZPoly pseudo_rem(ZPoly A, const ZPoly& B) {
    const long dB = B.degree();
    const Integer& lb = B.lead();
    while (!A.is_zero() && A.degree() >= dB) {
        Integer la = A.lead();
        long e = A.degree() - dB;
        A = A.scale(lb) - B.shift(e).scale(la);
    }
    return A;
}

} // namespace

ZPoly gcd_z(const ZPoly& a_in, const ZPoly& b_in) {
    ZPoly a = primitive_part(a_in.shifted_to_zero());
    ZPoly b = primitive_part(b_in.shifted_to_zero());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a.shifted_to_zero());
}

Laurent<Fp> reduce_mod(const ZPoly& f, std::uint64_t p) {
    Laurent<Fp> r(ring_traits<Fp>::Ctx{p});
    for (const auto& [e, c] : f.terms()) r.add_term(e, Fp::from(p, c));
    return r;
}

QPoly to_rational(const ZPoly& f) {
    QPoly r{ring_traits<Rational>::Ctx{}};
    for (const auto& [e, c] : f.terms()) r.add_term(e, Rational(c));
    return r;
}

std::pair<ZPoly, Integer> clear_denominators(const QPoly& f) {
    Integer d = 1;
    for (const auto& [e, c] : f.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(e, Integer(c.get_num() * (d / c.get_den())));
    return {r, d};
}

namespace {

// An element of Q[t]/(D) stored as H/den with H integral.
struct Residue {
    ZPoly H;
    Integer den = 1;
};

void reduce(Residue& r, const ZPoly& D) {
    const long dD = D.degree();
    const Integer& a = D.lead();
    while (!r.H.is_zero() && r.H.degree() >= dD) {
        Integer c = r.H.lead();
        long e = r.H.degree() - dD;
        if (a == 1) {
            r.H -= D.shift(e).scale(c);
        } else {
            r.H = r.H.scale(a) - D.shift(e).scale(c);
            r.den *= a;
        }
    }
    if (r.den != 1) {
        Integer g = content(r.H);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.den.get_mpz_t());
        if (g != 1 && g != 0) {
            r.H = r.H.map_coeffs([&](const Integer& x) { return ring_traits<Integer>::divexact(x, g); });
            mpz_divexact(r.den.get_mpz_t(), r.den.get_mpz_t(), g.get_mpz_t());
        }
        if (r.H.is_zero()) r.den = 1;
    }
}

// t^n mod D over Q
Residue t_power_mod(long n, const ZPoly& D) {
    Residue r;
    r.H = ZPoly::one({});
    reduce(r, D);
    int top = 63;
    while (top >= 0 && !((static_cast<unsigned long>(n) >> top) & 1)) --top;
    for (int b = top; b >= 0; --b) {
        r.H = r.H * r.H;
        r.den = r.den * r.den;
        reduce(r, D);
        if ((static_cast<unsigned long>(n) >> b) & 1) {
            r.H = r.H.shift(1);
            reduce(r, D);
        }
    }
    return r;
}

ZPoly normalize_psi(ZPoly g) {
    g = primitive_part(g);
    if (g.is_zero() || !(g.lead() == 1))
        fail(ErrorKind::NonIntegralResult, "common factor with t^n - 1 is not monic: " + g.str());
    return g;
}

} // namespace

CyclicResultant cyclic_resultant(const ZPoly& f_in, long n) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "cyclic resultant of the zero polynomial");
    if (n < 1) fail(ErrorKind::InvalidArgument, "cyclic resultant needs n >= 1");
    const ZPoly f = f_in.shifted_to_zero();
    const long d = f.degree();
    if (d == 0) return {ipow(f.lead(), static_cast<unsigned long>(n)), ZPoly::one({})};

    // psi = gcd(f, t^n - 1) from the residue of t^n - 1 modulo f
    Residue r = t_power_mod(n, f);
    ZPoly rem = r.H - ZPoly::constant({}, r.den);
    ZPoly psi = rem.is_zero() ? normalize_psi(f) : normalize_psi(gcd_z(f, rem));

    const long dpsi = psi.degree();
    const long degQ = n - dpsi;
    ZPoly D = f;
    Residue s = r;
    if (dpsi > 0) {
        D = f * psi;
        s = t_power_mod(n, D);
    }
    // (t^n - 1)/psi mod f equals Hp / s.den
    ZPoly Hp = divide_exact(s.H - ZPoly::constant({}, s.den), psi);
    if (Hp.is_zero()) fail(ErrorKind::InexactDivision, "quotient shares a root with f");
    const long dH = Hp.degree();

    Integer num = resultant_ordinary(f, Hp);
    const Integer& a = f.lead();
    num *= ipow(a, static_cast<unsigned long>(degQ - dH));
    Integer dd = ipow(s.den, static_cast<unsigned long>(d));
    Integer value = ring_traits<Integer>::divexact(num, dd);
    if ((degQ * d) % 2 != 0) value = -value;
    return {value, psi};
}

CyclicResultant cyclic_resultant_sylvester(const ZPoly& f_in, long n) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "cyclic resultant of the zero polynomial");
    if (n < 1) fail(ErrorKind::InvalidArgument, "cyclic resultant needs n >= 1");
    const ZPoly f = f_in.shifted_to_zero();
    ZPoly tn = ZPoly::t({}, n) - ZPoly::one({});
    ZPoly psi = f.degree() == 0 ? ZPoly::one({}) : normalize_psi(gcd_z(tn, f));
    ZPoly Q = divide_exact(tn, psi);
    return {resultant_ordinary(Q, f), psi};
}

ZPoly cyclotomic_product(const ZPoly& f_in, long m) {
    if (f_in.is_zero()) fail(ErrorKind::ZeroPolynomial, "cyclotomic product of the zero polynomial");
    if (m < 1) fail(ErrorKind::InvalidArgument, "cyclotomic product needs m >= 1");
    const ZPoly f = f_in.shifted_to_zero();
    const long d = f.degree();
    const Integer lead_m = ipow(f.lead(), static_cast<unsigned long>(m));
    if (m == 1) return f;
    if (d == 0) return ZPoly::constant({}, lead_m);

    // values G(s) = (-1)^d Res_u(f(u), u^m - s) at s = 0..d, then Newton interpolation
    std::vector<Rational> xs, dd;
    for (long s = 0; s <= d; ++s) {
        ZPoly um = ZPoly::t({}, m) - ZPoly::constant({}, Integer(s));
        Integer v = resultant_ordinary(f, um);
        if (d % 2) v = -v;
        xs.emplace_back(s);
        dd.emplace_back(v);
    }
    for (long j = 1; j <= d; ++j)
        for (long i = d; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    QPoly g{ring_traits<Rational>::Ctx{}};
    for (long i = d; i >= 0; --i) {
        g = g * (QPoly::t({}) - QPoly::constant({}, xs[i]));
        g += QPoly::constant({}, dd[i]);
    }
    ZPoly out;
    for (const auto& [e, c] : g.terms()) {
        if (c.get_den() != 1) fail(ErrorKind::NonIntegralResult, "cyclotomic product has a non-integral coefficient");
        out.add_term(e, Integer(c.get_num()));
    }
    if (out.degree() != d || !(out.lead() == lead_m))
        fail(ErrorKind::NonIntegralResult, "cyclotomic product leading coefficient check failed");
    return out;
}

ZPoly norm_polynomial(const Laurent<QuadInt>& f) {
    Laurent<QuadInt> conj = f.map_coeffs([](const QuadInt& a) { return a.conj(); });
    Laurent<QuadInt> prod = f * conj;
    ZPoly out;
    for (const auto& [e, c] : prod.terms()) {
        if (c.b != 0) fail(ErrorKind::NonIntegralResult, "norm has a coefficient outside Z: " + quad_str(c));
        out.add_term(e, c.a);
    }
    return out;
}

} // namespace iwknot
