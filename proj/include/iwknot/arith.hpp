#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace iwknot {

using Integer = mpz_class;
using Rational = mpq_class;

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// p-adic valuation; `infinite` marks the valuation of zero.
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation inf() { return {true, 0}; }
    bool operator==(const Valuation&) const = default;
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

Valuation valuation(const Integer& a, std::uint64_t p);
Valuation valuation(const Rational& a, std::uint64_t p);

Integer ipow(const Integer& base, unsigned long e);
Integer binomial(unsigned long n, unsigned long k);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t mod_reduce(const Integer& a, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
long euler_phi(long n);

Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);

} // namespace iwknot
