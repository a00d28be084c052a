#pragma once

#include "iwknot/coeff.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iwknot {

/// Finitely supported map exponent -> nonzero coefficient.
template <class R>
class Laurent {
public:
    using T = ring_traits<R>;
    using Ctx = typename T::Ctx;
    using Terms = std::map<long, R>;

    Laurent() = default;
    explicit Laurent(Ctx ctx) : ctx_(ctx), has_ctx_(true) {}

    /// Sums repeated exponents and drops zero coefficients.
    static Laurent from_terms(Ctx ctx, const std::vector<std::pair<long, R>>& terms) {
        Laurent f(ctx);
        for (const auto& [e, c] : terms) {
            if (!(T::ctx(c) == ctx)) fail(ErrorKind::DomainMismatch, "coefficient outside " + T::domain_name(ctx));
            f.add_term(e, c);
        }
        return f;
    }
    static Laurent constant(Ctx ctx, const R& c) { return monomial(ctx, c, 0); }
    static Laurent monomial(Ctx ctx, const R& c, long e) {
        Laurent f(ctx);
        f.add_term(e, c);
        return f;
    }
    static Laurent one(Ctx ctx) { return constant(ctx, T::one(ctx)); }
    static Laurent t(Ctx ctx, long e = 1) { return monomial(ctx, T::one(ctx), e); }
    /// dense coefficients c[0] + c[1] t + ...
    static Laurent from_dense(Ctx ctx, const std::vector<R>& c, long shift = 0) {
        Laurent f(ctx);
        for (std::size_t i = 0; i < c.size(); ++i) f.add_term(static_cast<long>(i) + shift, c[i]);
        return f;
    }

    const Ctx& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    long span() const { return max_exp() - min_exp(); }
    /// degree as an ordinary polynomial; requires min_exp >= 0
    long degree() const { return max_exp(); }
    const R& lead() const { return nonzero().rbegin()->second; }
    const R& trail() const { return nonzero().begin()->second; }
    R coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T::zero(ctx_) : it->second;
    }
    /// coefficients from exponent 0 (or min_exp) up to max_exp
    std::vector<R> dense() const {
        std::vector<R> out;
        if (terms_.empty()) return out;
        long lo = std::min(0L, min_exp());
        out.assign(static_cast<std::size_t>(max_exp() - lo + 1), T::zero(ctx_));
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
        return out;
    }

    void add_term(long e, const R& c) {
        if (T::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        R s = it->second + c;
        if (T::is_zero(s))
            terms_.erase(it);
        else
            it->second = s;
    }

    Laurent shift(long k) const {
        Laurent r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }
    /// the same class under multiplication by a power of t, with min_exp 0
    Laurent shifted_to_zero() const { return shift(-min_exp()); }

    Laurent operator-() const {
        Laurent r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, R(-c));
        return r;
    }
    Laurent operator+(const Laurent& o) const {
        Laurent r = adopt(o);
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }
    Laurent operator*(const Laurent& o) const {
        Laurent r = adopt(o);
        r.terms_.clear();
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, R(c1 * c2));
        return r;
    }
    Laurent scale(const R& s) const {
        Laurent r(ctx_);
        if (!(T::ctx(s) == ctx_)) fail(ErrorKind::DomainMismatch, "scalar outside " + T::domain_name(ctx_));
        for (const auto& [e, c] : terms_) r.add_term(e, R(c * s));
        return r;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    R eval(const R& x) const {
        if (!(T::ctx(x) == ctx_)) fail(ErrorKind::DomainMismatch, "evaluation point outside " + T::domain_name(ctx_));
        if (terms_.empty()) return T::zero(ctx_);
        long lo = min_exp();
        if (lo < 0 && !T::is_unit(x))
            fail(ErrorKind::NonInvertibleEvaluationPoint, "negative exponents at a non-unit point " + T::str(x));
        // Horner on the shifted polynomial, then multiply by x^lo
        R acc = T::zero(ctx_);
        long e = max_exp();
        auto it = terms_.rbegin();
        for (; e >= lo; --e) {
            acc = acc * x;
            if (it != terms_.rend() && it->first == e) {
                acc = acc + it->second;
                ++it;
            }
        }
        if (lo > 0) acc = acc * rpow(x, static_cast<std::uint64_t>(lo));
        if (lo < 0) acc = acc * rpow(T::inv(x), static_cast<std::uint64_t>(-lo));
        return acc;
    }

    /// f(t^v)
    Laurent substitute_power(long v) const {
        if (v < 1) fail(ErrorKind::InvalidArgument, "substitute_power needs v >= 1");
        Laurent r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * v, c);
        return r;
    }

    template <class F>
    Laurent map_coeffs(F&& f) const {
        Laurent r(ctx_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    std::string str(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = T::str(it->second);
            bool compound = c.find_first_of("+-", 1) != std::string::npos;
            if (compound) c = "(" + c + ")";
            long e = it->first;
            std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
            std::string piece;
            if (mono.empty())
                piece = c;
            else if (c == "1")
                piece = mono;
            else if (c == "-1")
                piece = "-" + mono;
            else
                piece = c + "*" + mono;
            if (!out.empty() && piece[0] != '-') out += "+";
            out += piece;
        }
        return out;
    }

private:
    const Terms& nonzero() const {
        if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return terms_;
    }
    // result domain for a binary operation; an unset zero adopts the other side
    Laurent adopt(const Laurent& o) const {
        if (ctx_ == o.ctx_) return *this;
        if (!has_ctx_ && terms_.empty()) return Laurent(o.ctx_);
        if (!o.has_ctx_ && o.terms_.empty()) return *this;
        fail(ErrorKind::DomainMismatch, T::domain_name(ctx_) + " vs " + T::domain_name(o.ctx_));
    }

    Ctx ctx_{};
    bool has_ctx_ = false;
    Terms terms_;
};

using ZPoly = Laurent<Integer>;
using QPoly = Laurent<Rational>;

inline ZPoly zpoly(std::initializer_list<long> dense_low_to_high, long shift = 0) {
    std::vector<Integer> c;
    for (long x : dense_low_to_high) c.emplace_back(x);
    return ZPoly::from_dense({}, c, shift);
}

} // namespace iwknot
