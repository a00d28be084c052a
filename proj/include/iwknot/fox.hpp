#pragma once

// Free differential calculus and Wada's invariant for deficiency-one
// presentations.

#include "iwknot/polyalg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iwknot {

struct Letter {
    int gen = 0;
    int exp = 1; // +1 or -1
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word; the empty word is the identity.
struct GroupWord {
    std::vector<Letter> letters;

    static GroupWord reduced(const std::vector<Letter>& ls);
    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& o) const;
    GroupWord pow(long k) const;
    std::size_t size() const { return letters.size(); }
    bool operator==(const GroupWord&) const = default;
    auto operator<=>(const GroupWord&) const = default;
    std::string str(const std::vector<std::string>& gens) const;
};

/// Tokens separated by blanks, each `g`, `g^k` or a run of one-letter
/// generators where upper case means inverse ("aB" = a b^-1).
GroupWord parse_word(std::string_view s, const std::vector<std::string>& gens);

/// Z-linear combination of group elements.
using FoxElement = std::map<GroupWord, Integer>;

FoxElement fox_derivative(const GroupWord& w, int g);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;
    std::vector<long> abelianization; // exponent of t per generator

    int index(const std::string& name) const;
    long deficiency() const {
        return static_cast<long>(generators.size()) - static_cast<long>(relators.size());
    }
    long alpha(const GroupWord& w) const;
    /// throws DeficiencyMismatch or PrecondFailed
    void validate() const;
};

/// <a, b | a w^n b^-1 w^-n>, w = a b^-1 a^-1 b; both generators map to t.
Presentation twist_knot_presentation(long n);
/// <a, b | a b a b^-1 a^-1 b^-1>
Presentation trefoil_presentation();

template <class R>
struct MatrixRep {
    int N = 0;
    std::vector<Matrix<R>> mats;
};

template <class R>
Matrix<R> identity_matrix(int N, const ctx_of<R>& cx) {
    using T = ring_traits<R>;
    Matrix<R> I(N, std::vector<R>(N, T::zero(cx)));
    for (int i = 0; i < N; ++i) I[i][i] = T::one(cx);
    return I;
}

template <class E>
Matrix<E> matmul(const Matrix<E>& A, const Matrix<E>& B) {
    const std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    Matrix<E> C(n, std::vector<E>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            E acc = A[i][0] * B[0][j];
            for (std::size_t l = 1; l < k; ++l) acc = acc + A[i][l] * B[l][j];
            C[i][j] = acc;
        }
    return C;
}

/// Inverse through the adjugate; the determinant must be a unit.
template <class R>
Matrix<R> matrix_inverse(const Matrix<R>& A, const ctx_of<R>& cx) {
    using T = ring_traits<R>;
    const int n = static_cast<int>(A.size());
    R d = det(A, cx);
    if (!T::is_unit(d)) fail(ErrorKind::PrecondFailed, "matrix is not invertible");
    R di = T::inv(d);
    Matrix<R> out(n, std::vector<R>(n, T::zero(cx)));
    if (n == 1) {
        out[0][0] = di;
        return out;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix<R> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<R> row;
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(A[r][c]);
                minor.push_back(std::move(row));
            }
            R m = det(minor, cx) * di;
            out[i][j] = (i + j) % 2 ? R(-m) : m;
        }
    return out;
}

template <class R>
Matrix<R> word_matrix(const GroupWord& w, const MatrixRep<R>& rep, const std::vector<Matrix<R>>& invs,
                      const ctx_of<R>& cx) {
    Matrix<R> M = identity_matrix<R>(rep.N, cx);
    for (const Letter& l : w.letters) M = matmul(M, l.exp > 0 ? rep.mats[l.gen] : invs[l.gen]);
    return M;
}

template <class R>
std::vector<Matrix<R>> inverse_matrices(const MatrixRep<R>& rep, const ctx_of<R>& cx) {
    std::vector<Matrix<R>> invs;
    for (const auto& M : rep.mats) invs.push_back(matrix_inverse(M, cx));
    return invs;
}

/// (rho (x) alpha) applied to a Fox element, term by term.
template <class R>
Matrix<Laurent<R>> evaluate_fox(const FoxElement& e, const Presentation& P, const MatrixRep<R>& rep,
                                const ctx_of<R>& cx) {
    using T = ring_traits<R>;
    auto invs = inverse_matrices(rep, cx);
    Matrix<Laurent<R>> out(rep.N, std::vector<Laurent<R>>(rep.N, Laurent<R>(cx)));
    for (const auto& [w, c] : e) {
        Matrix<R> M = word_matrix(w, rep, invs, cx);
        long a = P.alpha(w);
        R cc = T::from_int(cx, c);
        for (int i = 0; i < rep.N; ++i)
            for (int j = 0; j < rep.N; ++j) out[i][j].add_term(a, M[i][j] * cc);
    }
    return out;
}

/// (rho (x) alpha)(d r / d g) in one pass over the word using prefix products.
template <class R>
Matrix<Laurent<R>> fox_matrix(const GroupWord& r, int g, const Presentation& P, const MatrixRep<R>& rep,
                              const std::vector<Matrix<R>>& invs, const ctx_of<R>& cx) {
    Matrix<Laurent<R>> out(rep.N, std::vector<Laurent<R>>(rep.N, Laurent<R>(cx)));
    Matrix<R> prefix = identity_matrix<R>(rep.N, cx);
    long a = 0;
    for (const Letter& l : r.letters) {
        const Matrix<R>& step = l.exp > 0 ? rep.mats[l.gen] : invs[l.gen];
        long da = l.exp * P.abelianization[l.gen];
        if (l.gen == g && l.exp > 0) {
            for (int i = 0; i < rep.N; ++i)
                for (int j = 0; j < rep.N; ++j) out[i][j].add_term(a, prefix[i][j]);
        }
        prefix = matmul(prefix, step);
        a += da;
        if (l.gen == g && l.exp < 0) {
            for (int i = 0; i < rep.N; ++i)
                for (int j = 0; j < rep.N; ++j) out[i][j].add_term(a, -prefix[i][j]);
        }
    }
    return out;
}

template <class R>
Laurent<R> laurent_det(const Matrix<Laurent<R>>& M, const ctx_of<R>& cx) {
    Laurent<R> one = Laurent<R>::one(cx);
    if (M.size() <= 4) return det_cofactor(M, one);
    return det_bareiss<Laurent<R>>(
        M, one, [](const Laurent<R>& a) { return a.is_zero(); },
        [](const Laurent<R>& a, const Laurent<R>& b) { return divide_exact(a, b); });
}

template <class R>
struct WadaResult {
    Laurent<R> num, den;
};

/// num: Fox matrix without the column of generator `g`; den: det((rho(g) t^alpha(g)) - I).
template <class R>
WadaResult<R> wada_invariant(const Presentation& P, const MatrixRep<R>& rep, int g) {
    using T = ring_traits<R>;
    if (rep.mats.empty()) fail(ErrorKind::InvalidArgument, "empty representation");
    if (rep.mats.size() != P.generators.size())
        fail(ErrorKind::InvalidArgument, "one matrix per generator is required");
    if (P.deficiency() != 1)
        fail(ErrorKind::DeficiencyMismatch, "deficiency " + std::to_string(P.deficiency()) + ", expected 1");
    if (g < 0 || g >= static_cast<int>(P.generators.size())) fail(ErrorKind::UnknownGenerator, "generator index");
    auto cx = T::ctx(rep.mats[0][0][0]);
    const int N = rep.N;
    auto invs = inverse_matrices(rep, cx);

    Matrix<Laurent<R>> D(N, std::vector<Laurent<R>>(N, Laurent<R>(cx)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            D[i][j].add_term(P.abelianization[g], rep.mats[g][i][j]);
            if (i == j) D[i][j].add_term(0, -T::one(cx));
        }
    Laurent<R> den = laurent_det(D, cx);
    if (den.is_zero()) fail(ErrorKind::DenominatorVanishes, "det(rho(" + P.generators[g] + ") t - I) = 0");

    const int k = static_cast<int>(P.generators.size());
    const int size = N * (k - 1);
    Matrix<Laurent<R>> A(size, std::vector<Laurent<R>>(size, Laurent<R>(cx)));
    for (int ri = 0; ri < k - 1; ++ri) {
        int col = 0;
        for (int gj = 0; gj < k; ++gj) {
            if (gj == g) continue;
            auto F = fox_matrix(P.relators[ri], gj, P, rep, invs, cx);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) A[ri * N + i][col * N + j] = F[i][j];
            ++col;
        }
    }
    return {laurent_det(A, cx), den};
}

/// det(I - rho(w)) for a word w with alpha(w) = 0; a unit value means the
/// zeroth twisted polynomial is trivial.
template <class R>
R fixed_part_det(const Presentation& P, const MatrixRep<R>& rep, const GroupWord& w) {
    using T = ring_traits<R>;
    if (P.alpha(w) != 0) fail(ErrorKind::PrecondFailed, "word is not in the kernel of the abelianization");
    auto cx = T::ctx(rep.mats[0][0][0]);
    auto invs = inverse_matrices(rep, cx);
    Matrix<R> M = word_matrix(w, rep, invs, cx);
    for (int i = 0; i < rep.N; ++i)
        for (int j = 0; j < rep.N; ++j) M[i][j] = (i == j ? T::one(cx) : T::zero(cx)) - M[i][j];
    return det(M, cx);
}

} // namespace iwknot
