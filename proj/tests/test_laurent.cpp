#include "doctest.h"
#include "support.hpp"

#include "iwknot/polyalg.hpp"

#include <cmath>
#include <numeric>

using namespace iwknot;
using testsupport::random_zpoly;

namespace {

const ring_traits<Integer>::Ctx ZZ{};

ZPoly P(std::initializer_list<long> c, long shift = 0) { return zpoly(c, shift); }

Laurent<Fp> Pp(std::uint64_t p, std::initializer_list<long> c) {
    Laurent<Fp> f(ring_traits<Fp>::Ctx{p});
    long e = 0;
    for (long x : c) f.add_term(e++, Fp::from(p, x));
    return f;
}

} // namespace

TEST_CASE("normalize drops zeros and merges exponents") {
    auto f = ZPoly::from_terms(ZZ, {{2, 1}, {2, -1}, {0, 3}});
    CHECK(f == P({3}));
    CHECK(f.terms().size() == 1);
    auto g = ZPoly::from_terms(ZZ, {{1, 2}, {0, -3}, {2, 0}});
    CHECK(g == P({-3, 2}));
    CHECK(ZPoly::from_terms(ZZ, {}).is_zero());
}

TEST_CASE("mixed prime fields are rejected") {
    CHECK_THROWS_AS(Laurent<Fp>::from_terms({5}, {{0, Fp(5, 1)}, {1, Fp(7, 1)}}), Error);
    try {
        (void)(Pp(5, {1, 1}) * Pp(7, {1}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainMismatch);
    }
}

TEST_CASE("ring operations on small examples") {
    CHECK(P({-1, 1}) * P({1, 1}) == P({-1, 0, 1}));
    CHECK(P({1, -3, 1}) * P({1, 3, 1}) == P({1, 0, -7, 0, 1}));
    ZPoly f = P({2, -3, 2});
    CHECK(f + ZPoly() == f);
    CHECK(ZPoly() + f == f);
    CHECK((f - f).is_zero());
}

TEST_CASE("evaluation") {
    CHECK(P({1, -3, 1}).eval(1) == -1);
    for (long n = -12; n <= 12; ++n) CHECK(P({n, -(2 * n - 1), n}).eval(1) == 1);
    CHECK(Pp(3, {1, -1, 1}).eval(Fp(3, 2)).v == 0);
    ZPoly lau = ZPoly::from_terms(ZZ, {{-1, 1}, {0, 1}});
    CHECK(lau.eval(-1) == 0);
    try {
        (void)lau.eval(2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonInvertibleEvaluationPoint);
    }
    QPoly q = to_rational(lau);
    CHECK(q.eval(Rational(2)) == Rational(3, 2));
}

TEST_CASE("substitute t -> 1+T") {
    CHECK(substitute_shift(P({1, -3, 1})) == P({-1, -1, 1}));
    CHECK(substitute_shift(P({1, 4, 1})) == P({6, 6, 1}));
    CHECK(substitute_shift(P({1, 3, 1})) == P({5, 5, 1}));
    CHECK(substitute_shift(P({1, -4, 1})) == P({-2, -2, 1}));
    // negative exponents are cleared first
    CHECK(substitute_shift(P({1, -3, 1}, -1)) == P({-1, -1, 1}));
}

TEST_CASE("substitute t -> t^v") {
    CHECK(P({-1, 1}).substitute_power(2) == P({-1, 0, 1}));
    CHECK(P({1, -3, 1}).substitute_power(1) == P({1, -3, 1}));
    CHECK(P({1, 1}).substitute_power(3) == P({1, 0, 0, 1}));
}

TEST_CASE("content") {
    CHECK(content(P({2, -3, 2})) == 1);
    CHECK(content(P({112, 208, 112})) == 16);
    CHECK(content(ZPoly()) == 0);
}

TEST_CASE("resultant examples") {
    CHECK(abs(resultant(P({1, -1, 1}), P({-1, 0, 0, 1}))) == 4);
    CHECK(resultant(P({-1, 1}), P({-1, 1})) == 0);
    CHECK(abs(resultant(P({1, -3, 1}), P({-1, 0, 1}))) == 5);
    CHECK(abs(resultant(P({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), P({1, -3, 1}))) == 15125);
    CHECK_THROWS_AS(resultant(ZPoly(), P({1})), Error);
}

TEST_CASE("resultant of t^n - 1 equals the circulant determinant") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        ZPoly f = random_zpoly(rng, 5, 9);
        long n = 1 + static_cast<long>(rng() % 14);
        ZPoly tn = ZPoly::t(ZZ, n) - ZPoly::one(ZZ);
        CHECK(resultant(tn, f) == testsupport::circulant_product(f, n));
    }
}

TEST_CASE("cyclic resultant examples") {
    auto a = cyclic_resultant(P({1, -3, 1}), 2);
    CHECK(a.value == -5);
    CHECK(a.psi == P({1}));
    auto b = cyclic_resultant(P({-1, 1}), 3);
    CHECK(b.value == 3);
    CHECK(b.psi == P({-1, 1}));
    auto c = cyclic_resultant(P({1, -1, 1}), 1);
    CHECK(c.value == 1);
    CHECK(c.psi == P({1}));
    CHECK(abs(cyclic_resultant(P({1, -3, 1}), 10).value) == 15125);
}

TEST_CASE("cyclic resultant with a common factor") {
    auto a = cyclic_resultant(P({1, -1, 1}), 6);
    CHECK(a.value == 12);
    CHECK(a.psi == P({1, -1, 1}));
    CHECK(cyclic_resultant(P({1, -1, 1}), 12).value == 48);
    ZPoly f = P({1, 1}) * P({1, 1}) * P({-1, 1}) * P({2, -3, 2});
    auto b = cyclic_resultant(f, 6);
    CHECK(b.value == 675);
    CHECK(b.psi == P({-1, 0, 1}));
    CHECK(cyclic_resultant(P({-5, 1, 0, 3}), 7).value == -38872);
    CHECK(cyclic_resultant(P({112, 208, 112}), 8).value == Integer("98793194224877568"));
}

TEST_CASE("fast cyclic resultant agrees with one Sylvester determinant") {
    std::mt19937 rng(12);
    for (int it = 0; it < 120; ++it) {
        ZPoly f = random_zpoly(rng, 6, 20);
        if (it % 5 == 0) f = f * P({-1, 1});
        if (it % 7 == 0) f = f * P({1, 1, 1});
        long n = 1 + static_cast<long>(rng() % 30);
        auto fast = cyclic_resultant(f, n);
        auto slow = cyclic_resultant_sylvester(f, n);
        CHECK(fast.value == slow.value);
        CHECK(fast.psi == slow.psi);
    }
}

TEST_CASE("cyclic resultant magnitude matches the floating product") {
    std::mt19937 rng(13);
    for (int it = 0; it < 80; ++it) {
        ZPoly f = random_zpoly(rng, 8, 6);
        long n = 1 + static_cast<long>(rng() % 64);
        auto r = cyclic_resultant(f, n);
        double lhs = std::log(std::abs(r.value.get_d()));
        double rhs = testsupport::log_cyclic_product(f, n);
        CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("t -> t^v leaves cyclic resultants unchanged for v prime to n") {
    std::mt19937 rng(14);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 60; ++it) {
        ZPoly f = random_zpoly(rng, 4, 7);
        long n = 2 + static_cast<long>(rng() % 20);
        long v = 1 + static_cast<long>(rng() % 6);
        if (std::gcd(n, v) != 1) continue;
        auto a = cyclic_resultant(f, n);
        auto b = cyclic_resultant(f.substitute_power(v), n);
        if (!(a.psi == P({1})) || !(b.psi == P({1}))) continue;
        CHECK(abs(a.value) == abs(b.value));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("cyclotomic product examples") {
    ZPoly f = P({1, -3, 1});
    CHECK(cyclotomic_product(f, 2) == P({1, -7, 1}));
    CHECK(cyclotomic_product(f, 2).substitute_power(2) == P({1, -3, 1}) * P({1, 3, 1}));
    ZPoly g4 = cyclotomic_product(f, 4).substitute_power(4);
    CHECK(g4 == P({1, 0, -7, 0, 1}) * P({1, 0, 7, 0, 1}));
    CHECK(cyclotomic_product(f, 1) == f);
    CHECK(cyclotomic_product(P({2, -3, 2}), 3) == P({8, 9, 8}));
    CHECK(cyclotomic_product(P({-5, 1, 0, 3}), 5) == P({-3125, 376, 675, 243}));
}

TEST_CASE("cyclotomic product at m=2 is f(t) f(-t) in t^2, span preserved") {
    std::mt19937 rng(15);
    for (int it = 0; it < 100; ++it) {
        ZPoly f = random_zpoly(rng, 6, 30).shifted_to_zero();
        ZPoly fneg;
        for (const auto& [e, c] : f.terms()) fneg.add_term(e, e % 2 ? Integer(-c) : c);
        ZPoly g = cyclotomic_product(f, 2);
        CHECK(doteq_equal(g.substitute_power(2), f * fneg));
        for (long m : {1L, 2L, 3L, 5L}) CHECK(cyclotomic_product(f, m).span() == f.span());
    }
}

TEST_CASE("unit normal forms") {
    CHECK(doteq_equal(P({0, 0, -1, 1}), P({-1, 1})));
    CHECK(!doteq_equal(P({0, 2}), P({0, 1})));
    CHECK(doteq_equal(to_rational(P({0, 2})), to_rational(P({0, 1}))));
    CHECK(!doteq_equal(P({1, -3, 1}), P({1, 3, 1})));
    CHECK(unit_normal(P({-3, 5}, 4)) == P({3, -5}));
    CHECK(doteq_equal(Pp(7, {3, 1}), Pp(7, {6, 2})));
}

TEST_CASE("norm to the integers") {
    QuadCtx E = make_quad_ctx(-3, true);
    QuadCtx S = make_quad_ctx(-3, false);
    Laurent<QuadInt> f = Laurent<QuadInt>::from_dense(E, {QuadInt(E, 1, 0), QuadInt(E, 4, 0), QuadInt(E, 1, 0)});
    CHECK(norm_polynomial(f) == P({1, 4, 1}) * P({1, 4, 1}));
    Laurent<QuadInt> g = Laurent<QuadInt>::from_dense(S, {QuadInt(S, 0, -1), QuadInt(S, 1, 0)});
    CHECK(norm_polynomial(g) == P({3, 0, 1}));
    // sqrt(-3) times its conjugate is +3
    Laurent<QuadInt> c = Laurent<QuadInt>::constant(S, QuadInt(S, 0, 1));
    CHECK(norm_polynomial(c) == P({3}));
    // sqrt(-3) = 2w - 1 in the half-integer basis
    Laurent<QuadInt> c2 = Laurent<QuadInt>::constant(E, QuadInt(E, -1, 2));
    CHECK(norm_polynomial(c2) == P({3}));
}

TEST_CASE("Gauss lemma for contents") {
    std::mt19937 rng(16);
    for (int it = 0; it < 300; ++it) {
        ZPoly f = random_zpoly(rng, 5, 40), g = random_zpoly(rng, 5, 40);
        CHECK(content(f * g) == content(f) * content(g));
    }
}

TEST_CASE("exact division and gcd") {
    ZPoly a = P({1, -3, 1}) * P({2, 1}) * P({-1, 1});
    CHECK(divide_exact(a, P({2, 1})) == P({1, -3, 1}) * P({-1, 1}));
    CHECK_THROWS_AS(divide_exact(a, P({3, 1})), Error);
    CHECK(gcd_z(a, P({-1, 0, 1}) * P({5})) == P({-1, 1}));
    auto g = gcd_field(Pp(5, {1, -3, 1}), Pp(5, {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    // t^2-3t+1 = (t+1)^2 mod 5 and t^10-1 = (t^2-1)^5 mod 5
    CHECK(g == Pp(5, {1, 2, 1}));
}
