#include "doctest.h"
#include "support.hpp"

#include "iwknot/padic.hpp"
#include "iwknot/polyalg.hpp"

#include <cmath>
#include <complex>

using namespace iwknot;
using testsupport::random_zpoly;

namespace {

ZPoly P(std::initializer_list<long> c) { return zpoly(c); }

// Jensen: log M(f) = (1/2pi) * integral of log|f(e^{i theta})|, trapezoid rule
double jensen_log_mahler(const ZPoly& f, int samples) {
    const double pi = std::acos(-1.0);
    double acc = 0;
    for (int k = 0; k < samples; ++k) {
        std::complex<double> z = std::polar(1.0, 2 * pi * (k + 0.5) / samples);
        std::complex<double> v = 0;
        for (const auto& [e, c] : f.terms()) v += c.get_d() * std::pow(z, static_cast<double>(e));
        acc += std::log(std::abs(v));
    }
    return acc / samples;
}

double min_on_circle(const ZPoly& f) {
    const double pi = std::acos(-1.0);
    double best = 1e300;
    for (int k = 0; k < 2000; ++k) {
        std::complex<double> z = std::polar(1.0, 2 * pi * k / 2000);
        std::complex<double> v = 0;
        for (const auto& [e, c] : f.terms()) v += c.get_d() * std::pow(z, static_cast<double>(e));
        best = std::min(best, std::abs(v));
    }
    return best;
}

} // namespace

TEST_CASE("Gauss norm exponents") {
    CHECK(gauss_norm_exponent(P({112, 208, 112}), 2) == 4);
    CHECK(gauss_norm_exponent(P({2, -3, 2}), 2) == 0);
    ZPoly f = P({6, 12, -18});
    CHECK(gauss_norm_exponent(f.scale(Integer(3)), 3) == gauss_norm_exponent(f, 3) + 1);
    CHECK_THROWS_AS(gauss_norm_exponent(ZPoly(), 2), Error);
}

TEST_CASE("Gauss norm is multiplicative") {
    std::mt19937 rng(21);
    for (int it = 0; it < 300; ++it) {
        ZPoly f = random_zpoly(rng, 5, 60), g = random_zpoly(rng, 5, 60);
        for (std::uint64_t p : {2UL, 3UL, 5UL, 7UL})
            CHECK(gauss_norm_exponent(f * g, p) == gauss_norm_exponent(f, p) + gauss_norm_exponent(g, p));
    }
}

TEST_CASE("Mahler measure examples") {
    const double golden2 = (3 + std::sqrt(5.0)) / 2;
    CHECK(mahler_measure(P({1, -3, 1}), 1e-8) == doctest::Approx(golden2).epsilon(1e-10));
    CHECK(mahler_measure(P({1, -3, 1}), 1e-12) == doctest::Approx(golden2).epsilon(1e-11));
    CHECK(mahler_measure(P({-1, 1}), 1e-8) == doctest::Approx(1.0));
    CHECK(mahler_measure(P({-1, 2}), 1e-8) == doctest::Approx(2.0));
    CHECK(mahler_measure(P({-1, 2}), 1e-12) == doctest::Approx(2.0).epsilon(1e-11));
    // Lehmer's degree 10 polynomial
    ZPoly lehmer = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(mahler_measure(lehmer, 1e-8) == doctest::Approx(1.17628081825991750).epsilon(1e-9));
    CHECK(mahler_measure(lehmer, 1e-12) == doctest::Approx(1.17628081825991750).epsilon(1e-11));
    CHECK(mahler_measure(P({1, -1, 1}), 1e-8) == doctest::Approx(1.0));
    auto mags = root_magnitudes(P({1, -1, 1}));
    CHECK(mags.size() == 2);
    CHECK(mags[0] == 1.0);
}

TEST_CASE("Mahler measure agrees with Jensen's integral and is multiplicative") {
    std::mt19937 rng(22);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        ZPoly f = random_zpoly(rng, 8, 9);
        ZPoly g = random_zpoly(rng, 8, 9);
        if (f.span() == 0 || g.span() == 0) continue;
        const double tol = 1e-8;
        double mf = mahler_measure(f, tol), mg = mahler_measure(g, tol), mfg = mahler_measure(f * g, tol);
        CHECK(mfg == doctest::Approx(mf * mg).epsilon(2 * tol));
        double gf = mahler_measure(f, 1e-12);
        CHECK(gf == doctest::Approx(mf).epsilon(1e-8));
        if (min_on_circle(f) > 0.05) {
            CHECK(std::log(mf) == doctest::Approx(jensen_log_mahler(f, 20000)).epsilon(1e-6));
            ++checked;
        }
        // Jensen lower bound |lead| * prod max(1,|root|) is what we compute
        CHECK(mf >= std::fabs(f.shifted_to_zero().lead().get_d()) * (1 - 1e-12));
    }
    CHECK(checked > 50);
}

TEST_CASE("torsion growth tends to the Mahler measure") {
    auto rows = asymptotic_check(P({1, -3, 1}), 200, 5, 195);
    REQUIRE(rows.size() == 6);
    CHECK(rows.back().n == 200);
    const double golden2 = (3 + std::sqrt(5.0)) / 2;
    CHECK(std::fabs(rows.back().root_growth / golden2 - 1) < 0.01);
    auto tre = asymptotic_check(P({1, -1, 1}), 60, 5);
    for (const auto& r : tre) {
        if (std::gcd(r.n, 6L) == 1) {
            CHECK(abs(r.resultant) == 1);
            CHECK(r.root_growth == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("monic polynomials: log|r_n|/n close to log M at n = 200") {
    // curated so that no root is near the unit circle
    for (ZPoly f : {P({1, -3, 1}), P({-1, -1, 0, 1}), P({1, 4, 1}), P({2, 0, -5, 1}), P({-1, 2, 0, 3, 1})}) {
        auto rows = asymptotic_check(f, 200, 2, 200);
        double lm = std::log(mahler_measure(f, 1e-10));
        CHECK(std::fabs(std::log(rows[0].root_growth) - lm) < 0.02);
    }
}

TEST_CASE("p-adic half of the growth formula") {
    ZPoly f = P({112, 208, 112});
    auto rows = asymptotic_check(f, 40, 2);
    for (const auto& r : rows) {
        if (r.n % 3 != 0) {
            CHECK(r.valuation == 4 * r.n);
            CHECK(r.p_part == doctest::Approx(1.0 / 16));
        } else {
            CHECK(r.valuation > 4 * r.n);
        }
    }
}

TEST_CASE("Gauss norm is the limit of the p-parts along p-power levels") {
    std::mt19937 rng(23);
    for (int it = 0; it < 40; ++it) {
        ZPoly f = random_zpoly(rng, 6, 50);
        if (f.span() == 0) continue;
        for (auto [p, r] : {std::pair{2UL, 9L}, std::pair{3UL, 6L}}) {
            long n1 = 1, n0;
            for (long i = 0; i < r; ++i) n1 *= static_cast<long>(p);
            n0 = n1 / static_cast<long>(p);
            long e1 = valuation(cyclic_resultant(f, n1).value, p).value;
            long e0 = valuation(cyclic_resultant(f, n0).value, p).value;
            double ratio = static_cast<double>(e1 - e0) / static_cast<double>(n1 - n0);
            long mu = gauss_norm_exponent(f, p);
            CHECK(std::fabs(ratio - mu) <= static_cast<double>(f.span()) / static_cast<double>(n1 - n0) + 1e-12);
        }
    }
}
