#include "doctest.h"

#include "iwknot/polyalg.hpp"

#include <random>

using namespace iwknot;

namespace {

template <class R, class Gen>
Laurent<R> random_laurent(std::mt19937& rng, const ctx_of<R>& cx, Gen gen) {
    Laurent<R> f(cx);
    int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) f.add_term(static_cast<long>(rng() % 7) - 3, gen(rng));
    return f;
}

template <class R, class Gen>
void ring_axioms(const ctx_of<R>& cx, Gen gen, unsigned seed) {
    std::mt19937 rng(seed);
    for (int it = 0; it < 1000; ++it) {
        auto a = random_laurent<R>(rng, cx, gen);
        auto b = random_laurent<R>(rng, cx, gen);
        auto c = random_laurent<R>(rng, cx, gen);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE((a - a).is_zero());
    }
}

} // namespace

TEST_CASE("primality and valuations") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(561));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK(!is_prime(18446744073709551555ULL));
    CHECK(valuation(Integer(15125), 5).value == 3);
    CHECK(valuation(Integer(1), 7).value == 0);
    CHECK(valuation(Integer(0), 7).infinite);
    CHECK(valuation(Integer("1208925819614629174706176"), 2).value == 80);
    CHECK(valuation(Integer(ipow(Integer(3), 1000) * 7), 3).value == 1000);
    CHECK(valuation(Rational(9, 250), 5).value == -3);
}

TEST_CASE("ring axioms over each coefficient domain") {
    ring_axioms<Integer>({}, [](std::mt19937& r) { return Integer(static_cast<long>(r() % 201) - 100); }, 1);
    ring_axioms<Rational>({}, [](std::mt19937& r) {
        Rational q(static_cast<long>(r() % 41) - 20, static_cast<long>(r() % 9) + 1);
        q.canonicalize();
        return q;
    }, 2);
    ring_axioms<Fp>({13}, [](std::mt19937& r) { return Fp(13, r() % 13); }, 3);
    ring_axioms<Fp>({2}, [](std::mt19937& r) { return Fp(2, r() % 2); }, 4);
    const FqField* F49 = fq_field(7, 2);
    ring_axioms<Fq>({F49}, [&](std::mt19937& r) { return ring_traits<Fq>::element({F49}, r() % 49); }, 5);
    const FqField* F81 = fq_field(3, 4);
    ring_axioms<Fq>({F81}, [&](std::mt19937& r) { return ring_traits<Fq>::element({F81}, r() % 81); }, 6);
    const FqField* F4 = fq_field(2, 2);
    ring_axioms<Fq>({F4}, [&](std::mt19937& r) { return ring_traits<Fq>::element({F4}, r() % 4); }, 7);
    for (auto [D, half] : {std::pair{-3L, true}, std::pair{5L, true}, std::pair{2L, false}, std::pair{-1L, false}}) {
        QuadCtx q = make_quad_ctx(D, half);
        ring_axioms<QuadInt>(q, [&](std::mt19937& r) {
            return QuadInt(q, static_cast<long>(r() % 21) - 10, static_cast<long>(r() % 21) - 10);
        }, 8);
    }
}

TEST_CASE("finite fields are fields") {
    for (auto [p, k] : {std::pair{2UL, 2}, std::pair{2UL, 3}, std::pair{3UL, 2}, std::pair{3UL, 4}, std::pair{5UL, 2},
                        std::pair{13UL, 2}, std::pair{11UL, 1}}) {
        const FqField* F = fq_field(p, k);
        ring_traits<Fq>::Ctx cx{F};
        std::uint64_t q = F->size;
        for (std::uint64_t i = 1; i < q; ++i) {
            Fq a = ring_traits<Fq>::element(cx, i);
            REQUIRE(a * a.inv() == ring_traits<Fq>::one(cx));
            REQUIRE(a.pow(q - 1) == ring_traits<Fq>::one(cx));
        }
        // some element has full multiplicative order
        bool found = false;
        for (std::uint64_t i = 1; i < q && !found; ++i) {
            Fq a = ring_traits<Fq>::element(cx, i);
            std::uint64_t ord = 1;
            Fq x = a;
            while (!(x == ring_traits<Fq>::one(cx))) {
                x = x * a;
                ++ord;
            }
            found = ord == q - 1;
        }
        CHECK(found);
    }
    CHECK(fq_field(7, 2)->nonresidue == 3u);
    CHECK_THROWS_AS(fq_quadratic(7, 2), Error); // 2 = 3^2 mod 7
}

TEST_CASE("square roots") {
    CHECK(*field_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!field_sqrt(Rational(5)));
    for (std::uint64_t p : {2UL, 3UL, 5UL, 13UL, 17UL, 97UL}) {
        for (std::uint64_t a = 0; a < p; ++a) {
            auto r = field_sqrt(Fp(p, a));
            bool square = false;
            for (std::uint64_t x = 0; x < p; ++x) square |= mulmod(x, x, p) == a;
            REQUIRE(static_cast<bool>(r) == square);
            if (r) REQUIRE((*r * *r).v == a);
        }
    }
    for (auto [p, k] : {std::pair{2UL, 2}, std::pair{3UL, 2}, std::pair{5UL, 4}, std::pair{13UL, 2}}) {
        const FqField* F = fq_field(p, k);
        int squares = 0;
        for (std::uint64_t i = 0; i < F->size; ++i) {
            Fq a = ring_traits<Fq>::element({F}, i);
            auto r = field_sqrt(a);
            if (r) {
                REQUIRE(*r * *r == a);
                ++squares;
            }
        }
        if (p == 2)
            CHECK(squares == static_cast<int>(F->size));
        else
            CHECK(squares == static_cast<int>((F->size + 1) / 2));
    }
}

TEST_CASE("quadratic roots") {
    const FqField* F = fq_field(2, 2);
    auto one = ring_traits<Fq>::one({F});
    // s^2 + s + 1 has both roots in F_4
    auto roots = quadratic_roots(one, one, one);
    CHECK(roots.size() == 2);
    auto r2 = quadratic_roots(Rational(1), Rational(-3), Rational(2));
    CHECK(r2.size() == 2);
    CHECK(quadratic_roots(Fp(5, 1), Fp(5, 0), Fp(5, 2)).empty()); // t^2 = 3 has no root mod 5
}

TEST_CASE("quadratic integers") {
    QuadCtx E = make_quad_ctx(-3, true);
    QuadInt w(E, 0, 1);
    CHECK(w * w == QuadInt(E, -1, 1)); // w^2 = w - 1
    CHECK(rpow(w, 6) == QuadInt(E, 1, 0));
    CHECK(w.norm() == 1);
    CHECK(quad_units(E).size() == 6);
    QuadInt x(E, 3, 5), y(E, -2, 7);
    CHECK(quad_divexact(x * y, y) == x);
    CHECK_THROWS_AS(quad_divexact(x, QuadInt(E, 2, 0)), Error);
    CHECK_THROWS_AS(make_quad_ctx(-2, true), Error);
    CHECK_THROWS_AS(make_quad_ctx(4, false), Error);
    QuadCtx S = make_quad_ctx(-3, false);
    CHECK(QuadInt(S, 0, 1).norm() == 3);
    try {
        (void)(QuadInt(S, 1, 1) + QuadInt(E, 1, 1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainMismatch);
    }
}
