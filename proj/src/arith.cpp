#include "iwknot/arith.hpp"

#include "iwknot/errors.hpp"

#include <cctype>

namespace iwknot {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) fail(ErrorKind::NonInvertibleEvaluationPoint, "element is not invertible modulo " + std::to_string(m));
    if (s0 < 0) s0 += m;
    return static_cast<std::uint64_t>(s0);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these bases are a proven witness set below 3.3e24
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

Valuation valuation(const Integer& a, std::uint64_t p) {
    if (a == 0) return Valuation::inf();
    if (p == 2) return {false, static_cast<long>(mpz_scan1(a.get_mpz_t(), 0))};
    Integer pp = static_cast<unsigned long>(p);
    Integer q = a;
    long v = 0;
    // square the divisor while it keeps dividing, then walk back down
    std::vector<Integer> powers{pp};
    while (mpz_divisible_p(q.get_mpz_t(), powers.back().get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), powers.back().get_mpz_t());
        v += 1L << (powers.size() - 1);
        powers.push_back(powers.back() * powers.back());
    }
    for (std::size_t i = powers.size(); i-- > 0;) {
        if (mpz_divisible_p(q.get_mpz_t(), powers[i].get_mpz_t())) {
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), powers[i].get_mpz_t());
            v += 1L << i;
        }
    }
    return {false, v};
}

Valuation valuation(const Rational& a, std::uint64_t p) {
    if (a == 0) return Valuation::inf();
    auto vn = valuation(Integer(a.get_num()), p);
    auto vd = valuation(Integer(a.get_den()), p);
    return {false, vn.value - vd.value};
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::uint64_t mod_reduce(const Integer& a, std::uint64_t p) {
    Integer r;
    Integer pp = static_cast<unsigned long>(p);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
    return r.get_ui();
}

long euler_phi(long n) {
    long result = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            while (n % q == 0) n /= q;
            result -= result / q;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Integer parse_integer(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || t == "-") fail(ErrorKind::SyntaxError, "empty integer literal");
    for (std::size_t i = (t[0] == '-') ? 1 : 0; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail(ErrorKind::SyntaxError, "bad integer literal '" + s + "'");
    }
    return Integer(t, 10);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace iwknot
