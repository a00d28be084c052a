#include "iwknot/coeff.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace iwknot {

namespace {

using PolyP = std::vector<std::uint64_t>; // dense, low to high

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP pmod(PolyP a, const PolyP& m, std::uint64_t p) {
    trim(a);
    std::uint64_t li = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t q = mulmod(a.back(), li, p);
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = mulmod(q, m[i], p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return pmod(r, m, p);
}

PolyP pgcd(PolyP a, PolyP b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
    for (std::uint64_t a = 2; a < p; ++a)
        if (powmod(a, (p - 1) / 2, p) == p - 1) return a;
    fail(ErrorKind::InvalidArgument, "no nonresidue modulo " + std::to_string(p));
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, PolyP>, std::unique_ptr<FqField>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

const FqField* intern(std::uint64_t p, const PolyP& modulus, std::optional<std::uint64_t> nonresidue) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, modulus);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second.get();
    auto F = std::make_unique<FqField>();
    F->p = p;
    F->k = static_cast<int>(modulus.size()) - 1;
    F->modulus = modulus;
    Integer size = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(F->k));
    if (size > Integer("4611686018427387904")) fail(ErrorKind::ResourceCap, "field too large");
    F->size = size.get_ui();
    F->nonresidue = nonresidue;
    const FqField* raw = F.get();
    reg.fields.emplace(key, std::move(F));
    return raw;
}

} // namespace

bool fp_poly_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f_in) {
    PolyP f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    // Ben-Or: no factor of degree i <= k/2, i.e. gcd(x^(p^i) - x, f) = 1
    PolyP x{0, 1};
    PolyP xp = pmod(x, f, p);
    for (int i = 1; i <= k / 2; ++i) {
        // raise to the p-th power by square and multiply
        PolyP r{1};
        PolyP base = xp;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) r = pmulmod(r, base, f, p);
            base = pmulmod(base, base, f, p);
            e >>= 1;
        }
        xp = r;
        PolyP d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (d.empty()) return false;
        PolyP g = pgcd(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

const FqField* fq_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    PolyP m = modulus;
    for (auto& c : m) c %= p;
    trim(m);
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1 || k > kFqMaxDegree) fail(ErrorKind::InvalidArgument, "field degree out of range");
    if (m.back() != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic");
    if (!fp_poly_irreducible(p, m)) fail(ErrorKind::InvalidArgument, "modulus is reducible over F_" + std::to_string(p));
    std::optional<std::uint64_t> nr;
    if (k == 2 && m[1] == 0 && p != 2) nr = (p - m[0]) % p;
    return intern(p, m, nr);
}

const FqField* fq_quadratic(std::uint64_t p, std::uint64_t nonresidue) {
    if (!is_prime(p) || p == 2) fail(ErrorKind::InvalidArgument, "quadratic field needs an odd prime");
    nonresidue %= p;
    if (nonresidue == 0 || powmod(nonresidue, (p - 1) / 2, p) != p - 1)
        fail(ErrorKind::InvalidArgument, std::to_string(nonresidue) + " is a square modulo " + std::to_string(p));
    return intern(p, PolyP{(p - nonresidue) % p, 0, 1}, nonresidue);
}

const FqField* fq_field(std::uint64_t p, int k) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (k < 1 || k > kFqMaxDegree) fail(ErrorKind::InvalidArgument, "field degree out of range");
    if (k == 1) return intern(p, PolyP{0, 1}, std::nullopt);
    if (k == 2) {
        if (p == 2) return intern(2, PolyP{1, 1, 1}, std::nullopt);
        return fq_quadratic(p, least_nonresidue(p));
    }
    // least monic irreducible in the lexicographic order on (c_0, ..., c_{k-1})
    PolyP m(k + 1, 0);
    m[k] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < k; ++i) {
            m[i] = t % p;
            t /= p;
        }
        if (m[0] != 0 && fp_poly_irreducible(p, m)) return intern(p, m, std::nullopt);
    }
    fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

static void check_same(const Fq& a, const Fq& b) {
    if (a.F != b.F) {
        if (!a.F || !b.F) fail(ErrorKind::DomainMismatch, "uninitialised finite-field element");
        fail(ErrorKind::DomainMismatch, "finite fields of order " + std::to_string(a.F->size) + " and " +
                                            std::to_string(b.F->size) + " differ");
    }
}

Fq operator+(const Fq& a, const Fq& b) {
    check_same(a, b);
    Fq r(a.F);
    std::uint64_t p = a.F->p;
    for (int i = 0; i < a.F->k; ++i) {
        std::uint64_t s = a.c[i] + b.c[i];
        r.c[i] = s >= p ? s - p : s;
    }
    return r;
}

Fq operator-(const Fq& a, const Fq& b) {
    check_same(a, b);
    Fq r(a.F);
    std::uint64_t p = a.F->p;
    for (int i = 0; i < a.F->k; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : p - (b.c[i] - a.c[i]);
    return r;
}

Fq operator-(const Fq& a) {
    Fq r(a.F);
    for (int i = 0; i < a.F->k; ++i) r.c[i] = a.c[i] ? a.F->p - a.c[i] : 0;
    return r;
}

Fq operator*(const Fq& a, const Fq& b) {
    check_same(a, b);
    const FqField& F = *a.F;
    const int k = F.k;
    const std::uint64_t p = F.p;
    Fq r(a.F);
    if (k == 1) {
        r.c[0] = mulmod(a.c[0], b.c[0], p);
        return r;
    }
    std::array<unsigned __int128, 2 * kFqMaxDegree> acc{};
    for (int i = 0; i < k; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < k; ++j) acc[i + j] += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
    }
    std::array<std::uint64_t, 2 * kFqMaxDegree> t{};
    for (int i = 0; i < 2 * k - 1; ++i) t[i] = static_cast<std::uint64_t>(acc[i] % p);
    for (int d = 2 * k - 2; d >= k; --d) {
        std::uint64_t q = t[d];
        if (!q) continue;
        t[d] = 0;
        for (int i = 0; i < k; ++i) {
            std::uint64_t sub = mulmod(q, F.modulus[i], p);
            std::uint64_t& x = t[d - k + i];
            x = x >= sub ? x - sub : p - (sub - x);
        }
    }
    for (int i = 0; i < k; ++i) r.c[i] = t[i];
    return r;
}

Fq Fq::pow(std::uint64_t e) const { return rpow(*this, e); }

Fq Fq::inv() const {
    if (is_zero()) fail(ErrorKind::NonInvertibleEvaluationPoint, "zero in a finite field");
    return pow(F->size - 2);
}

std::uint64_t Fq::index() const {
    std::uint64_t idx = 0;
    for (int i = F->k - 1; i >= 0; --i) idx = idx * F->p + c[i];
    return idx;
}

std::string fq_str(const Fq& a) {
    if (!a.F) return "?";
    if (a.F->k == 1) return std::to_string(a.c[0]);
    std::string out;
    for (int i = 0; i < a.F->k; ++i) {
        if (!a.c[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(a.c[i]);
        } else {
            if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
            out += i == 1 ? "s" : "s^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string ring_traits<Fq>::domain_name(const Ctx& c) {
    if (c.F->k == 1) return "F_" + std::to_string(c.F->p);
    return "F_" + std::to_string(c.F->p) + "^" + std::to_string(c.F->k);
}

Fq ring_traits<Fq>::element(const Ctx& c, std::uint64_t i) {
    Fq r(c.F);
    for (int j = 0; j < c.F->k; ++j) {
        r.c[j] = i % c.F->p;
        i /= c.F->p;
    }
    return r;
}

// ------------------------------------------------------------- QuadInt

QuadCtx make_quad_ctx(long D, bool half) {
    if (D == 0 || D == 1) fail(ErrorKind::InvalidArgument, "D must not be 0 or 1");
    if (D > 0) {
        Integer r = sqrt(Integer(D));
        if (r * r == D) fail(ErrorKind::InvalidArgument, "D must not be a perfect square");
    }
    if (half && ((D % 4) + 4) % 4 != 1) fail(ErrorKind::InvalidArgument, "half-integer basis requires D = 1 mod 4");
    return {D, half};
}

static void check_same(const QuadInt& x, const QuadInt& y) {
    if (!(x.ctx == y.ctx)) fail(ErrorKind::DomainMismatch, "quadratic rings differ");
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    return {x.ctx, x.a + y.a, x.b + y.b};
}
QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    return {x.ctx, x.a - y.a, x.b - y.b};
}
QuadInt operator-(const QuadInt& x) { return {x.ctx, -x.a, -x.b}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    Integer bd = x.b * y.b;
    Integer cross = x.a * y.b + x.b * y.a;
    if (x.ctx.half) {
        // w^2 = w + (D-1)/4
        long k = (x.ctx.D - 1) / 4;
        return {x.ctx, x.a * y.a + bd * k, cross + bd};
    }
    return {x.ctx, x.a * y.a + bd * x.ctx.D, cross};
}

QuadInt QuadInt::conj() const {
    if (ctx.half) return {ctx, a + b, -b};
    return {ctx, a, -b};
}

Integer QuadInt::norm() const {
    if (ctx.half) {
        long k = (ctx.D - 1) / 4;
        return a * a + a * b - b * b * k;
    }
    return a * a - b * b * ctx.D;
}

QuadInt quad_divexact(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    Integer n = y.norm();
    if (n == 0) fail(ErrorKind::InexactDivision, "division by zero");
    QuadInt num = x * y.conj();
    if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t()))
        fail(ErrorKind::InexactDivision, quad_str(x) + " / " + quad_str(y));
    Integer qa, qb;
    mpz_divexact(qa.get_mpz_t(), num.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), num.b.get_mpz_t(), n.get_mpz_t());
    return {x.ctx, qa, qb};
}

std::vector<QuadInt> quad_units(const QuadCtx& c) {
    std::vector<QuadInt> u{{c, 1, 0}, {c, -1, 0}};
    if (c.D == -1 && !c.half) {
        u.push_back({c, 0, 1});
        u.push_back({c, 0, -1});
    }
    if (c.D == -3 && c.half) {
        // w is a primitive sixth root of unity
        QuadInt w{c, 0, 1};
        QuadInt x = w;
        for (int i = 0; i < 5; ++i) {
            if (!(x.a == 1 && x.b == 0) && !(x.a == -1 && x.b == 0)) u.push_back(x);
            x = x * w;
        }
    }
    return u;
}

QuadInt ring_traits<QuadInt>::normalizer(const QuadInt& a) {
    // only the torsion units are used; real quadratic rings have infinitely
    // many units and normal forms there are up to sign only
    auto units = quad_units(a.ctx);
    QuadInt best_u = units[0];
    QuadInt best = a;
    for (const auto& u : units) {
        QuadInt v = u * a;
        if (v.a > best.a || (v.a == best.a && v.b > best.b)) {
            best = v;
            best_u = u;
        }
    }
    return best_u;
}

std::string quad_str(const QuadInt& x) {
    if (x.b == 0) return x.a.get_str();
    std::string s;
    if (x.a != 0) s = x.a.get_str();
    if (x.b < 0) {
        s += "-";
        if (x.b != -1) s += Integer(-x.b).get_str() + "*";
    } else {
        if (!s.empty()) s += "+";
        if (x.b != 1) s += x.b.get_str() + "*";
    }
    return s + "w";
}

std::string ring_traits<QuadInt>::domain_name(const Ctx& c) {
    return std::string(c.half ? "Z[(1+sqrt(" : "Z[sqrt(") + std::to_string(c.D) + (c.half ? "))/2]" : ")]");
}

// ---------------------------------------------------------------- roots

std::optional<Rational> field_sqrt(const Rational& a) {
    if (a < 0) return std::nullopt;
    Integer n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Rational r(sqrt(n), sqrt(d));
    r.canonicalize();
    return r;
}

namespace {

// Tonelli-Shanks in the cyclic group of units of a finite field of order q.
template <class R>
std::optional<R> tonelli(const R& a, std::uint64_t q) {
    using T = ring_traits<R>;
    auto cx = T::ctx(a);
    if (T::is_zero(a)) return a;
    std::uint64_t qm1 = q - 1;
    if (!(rpow(a, qm1 / 2) == T::one(cx))) return std::nullopt;
    std::uint64_t Q = qm1;
    int S = 0;
    while ((Q & 1) == 0) {
        Q >>= 1;
        ++S;
    }
    R z = T::one(cx);
    for (std::uint64_t i = 2; i < q; ++i) {
        R c = T::element(cx, i);
        if (T::is_zero(c)) continue;
        if (!(rpow(c, qm1 / 2) == T::one(cx))) {
            z = c;
            break;
        }
    }
    int M = S;
    R c = rpow(z, Q);
    R t = rpow(a, Q);
    R r = rpow(a, (Q + 1) / 2);
    while (!(t == T::one(cx))) {
        int i = 0;
        R tt = t;
        while (!(tt == T::one(cx))) {
            tt = tt * tt;
            ++i;
            if (i == M) return std::nullopt;
        }
        R b = c;
        for (int j = 0; j < M - i - 1; ++j) b = b * b;
        M = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

} // namespace

std::optional<Fp> field_sqrt(const Fp& a) {
    if (a.p == 2) return a;
    return tonelli(a, a.p);
}

std::optional<Fq> field_sqrt(const Fq& a) {
    if (a.F->p == 2) return a.pow(a.F->size / 2);
    return tonelli(a, a.F->size);
}

} // namespace iwknot
