#pragma once

#include "iwknot/laurent.hpp"

#include <complex>
#include <random>
#include <vector>

namespace testsupport {

using iwknot::Integer;
using iwknot::Rational;
using iwknot::ZPoly;

inline ZPoly random_zpoly(std::mt19937& rng, int max_span, long bound, bool allow_zero = false) {
    std::uniform_int_distribution<long> cd(-bound, bound);
    std::uniform_int_distribution<int> sd(0, max_span);
    for (;;) {
        int span = sd(rng);
        std::vector<Integer> c;
        for (int i = 0; i <= span; ++i) c.emplace_back(cd(rng));
        ZPoly f = ZPoly::from_dense({}, c);
        if (!f.is_zero() || allow_zero) return f;
    }
}

/// log of prod over n-th roots of unity of |f(z)|, skipping (near) zeros
inline double log_cyclic_product(const ZPoly& f, long n) {
    const double pi = std::acos(-1.0);
    double logsum = 0;
    for (long k = 0; k < n; ++k) {
        std::complex<double> z = std::polar(1.0, 2 * pi * k / n);
        std::complex<double> acc = 0;
        for (const auto& [e, c] : f.terms()) acc += c.get_d() * std::pow(z, static_cast<double>(e));
        double a = std::abs(acc);
        if (a < 1e-9) continue;
        logsum += std::log(a);
    }
    return logsum;
}

/// det by Gaussian elimination over Q
inline Rational rational_det(std::vector<std::vector<Rational>> M) {
    const std::size_t n = M.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(M[piv], M[k]);
            det = -det;
        }
        det *= M[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational r = M[i][k] / M[k][k];
            for (std::size_t j = k; j < n; ++j) M[i][j] -= r * M[k][j];
        }
    }
    return det;
}

/// prod over n-th roots of unity of f(z) as det f(C) for the cyclic shift C
inline Integer circulant_product(const ZPoly& f_in, long n) {
    ZPoly f = f_in.shifted_to_zero();
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    for (long i = 0; i < n; ++i)
        for (const auto& [e, c] : f.terms()) M[i][(i + e) % n] += Rational(c);
    Rational d = rational_det(M);
    return Integer(d.get_num());
}

} // namespace testsupport
