#include "iwknot/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace iwknot {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::SyntaxError, what); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t need_u64(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

Integer parse_integer(const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) bad("empty number in '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) bad("not an integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

// coefficient expression: signed terms r or r*w^k or w^k, r integer or a/b
std::map<int, Rational> coeff_terms(const std::string& in) {
    std::string s = strip_spaces(in);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) bad("empty coefficient");
    std::map<int, Rational> out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            bad("bad coefficient '" + in + "'");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) bad("bad coefficient '" + in + "'");
        Rational r(1);
        int k = 0;
        std::size_t w = term.find('w');
        std::string num = w == std::string::npos ? term : term.substr(0, w);
        if (w != std::string::npos) {
            if (!num.empty()) {
                if (num.back() != '*') bad("expected '*' before w in '" + in + "'");
                num.pop_back();
            }
            std::string tail = term.substr(w + 1);
            if (tail.empty()) {
                k = 1;
            } else {
                if (tail[0] != '^') bad("bad power of w in '" + in + "'");
                Integer e = parse_integer(tail.substr(1));
                if (e < 0 || e > kFqMaxDegree) bad("bad power of w in '" + in + "'");
                k = static_cast<int>(e.get_si());
            }
        }
        if (!num.empty()) {
            std::size_t slash = num.find('/');
            if (slash == std::string::npos) {
                r = Rational(parse_integer(num));
            } else {
                Integer d = parse_integer(num.substr(slash + 1));
                if (d == 0) bad("zero denominator in '" + in + "'");
                r = Rational(parse_integer(num.substr(0, slash)), d);
                r.canonicalize();
            }
        }
        out[k] += sign * r;
    }
    return out;
}

Integer integral(const Rational& r, const std::string& s) {
    if (r.get_den() != 1) fail(ErrorKind::WrongDomain, "'" + s + "' is not integral");
    return r.get_num();
}

std::uint64_t reduce_rational(const Rational& r, std::uint64_t p, const std::string& s) {
    Fp d = Fp::from(p, Integer(r.get_den()));
    if (d.v == 0) fail(ErrorKind::WrongDomain, "'" + s + "' has a denominator divisible by p");
    return (Fp::from(p, Integer(r.get_num())) / d).v;
}

std::string signed_join(const std::vector<std::pair<int, std::string>>& parts) {
    // parts: (power of w, nonzero coefficient as a signed decimal)
    std::string out;
    for (const auto& [k, c] : parts) {
        bool neg = c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        std::string piece;
        if (k == 0) {
            piece = mag;
        } else {
            std::string w = k == 1 ? "w" : "w^" + std::to_string(k);
            piece = mag == "1" ? w : mag + "*" + w;
        }
        if (neg)
            out += "-" + piece;
        else
            out += (out.empty() ? "" : "+") + piece;
    }
    return out.empty() ? "0" : out;
}

template <class R>
Laurent<R> parse_text_in(const std::string& in, const ctx_of<R>& cx) {
    using T = ring_traits<R>;
    std::string s = strip_spaces(in);
    if (s.empty()) bad("empty polynomial");
    // split at top-level signs; a sign right after '^' or '(' belongs to the token
    std::vector<std::string> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (--depth < 0) bad("unbalanced parentheses in '" + in + "'");
        }
        if ((c == '+' || c == '-') && depth == 0 && i > start && s[i - 1] != '^' && s[i - 1] != '*' &&
            s[i - 1] != '/') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    if (depth != 0) bad("unbalanced parentheses in '" + in + "'");
    terms.push_back(s.substr(start));
    Laurent<R> f(cx);
    for (std::string term : terms) {
        bool neg = false;
        if (term[0] == '+' || term[0] == '-') {
            neg = term[0] == '-';
            term = term.substr(1);
        }
        if (term.empty()) bad("dangling sign in '" + in + "'");
        // locate the variable outside parentheses
        std::size_t tpos = std::string::npos;
        depth = 0;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (term[i] == 't' && depth == 0) {
                tpos = i;
                break;
            }
        }
        std::string coef = tpos == std::string::npos ? term : term.substr(0, tpos);
        long e = 0;
        if (tpos != std::string::npos) {
            if (!coef.empty()) {
                if (coef.back() != '*') bad("expected '*' before t in '" + in + "'");
                coef.pop_back();
            }
            std::string tail = term.substr(tpos + 1);
            if (tail.empty()) {
                e = 1;
            } else {
                if (tail[0] != '^') bad("bad exponent in '" + in + "'");
                tail = tail.substr(1);
                if (tail.size() >= 2 && tail.front() == '(' && tail.back() == ')') tail = tail.substr(1, tail.size() - 2);
                Integer v = parse_integer(tail);
                if (!v.fits_slong_p()) bad("exponent out of range in '" + in + "'");
                e = v.get_si();
            }
            if (coef.empty()) coef = "1";
        }
        R c = parse_coeff(coef, cx);
        f.add_term(e, neg ? R(T::zero(cx) - c) : c);
    }
    return f;
}

template <class R>
Laurent<R> terms_from_json(const Json& terms, const ctx_of<R>& cx) {
    if (!terms.is_array()) bad("'terms' must be an array");
    std::vector<std::pair<long, R>> ts;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            bad("each term must be [exponent, \"coefficient\"]");
        std::string c;
        if (t[1].is_string())
            c = t[1].get<std::string>();
        else if (t[1].is_number_integer())
            c = std::to_string(t[1].get<long long>());
        else
            bad("coefficients must be decimal strings");
        ts.emplace_back(t[0].get<long>(), parse_coeff(c, cx));
    }
    return Laurent<R>::from_terms(cx, ts);
}

const FqField* fq_of(const DomainSpec& d) {
    if (d.kind == DomainKind::QuadraticField)
        return d.nonresidue ? fq_quadratic(d.p, *d.nonresidue) : fq_field(d.p, 2);
    return fq_field_with_modulus(d.p, d.modulus);
}

template <class R>
Matrix<R> matrix_from_json(const Json& j, int N, const ctx_of<R>& cx) {
    if (!j.is_array() || static_cast<int>(j.size()) != N) bad("matrix must have N rows");
    Matrix<R> M;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != N) bad("matrix rows must have N entries");
        std::vector<R> r;
        for (const auto& x : row) {
            if (!x.is_string()) bad("matrix entries must be strings");
            r.push_back(parse_coeff(x.get<std::string>(), cx));
        }
        M.push_back(r);
    }
    if (ring_traits<R>::is_zero(det(M, cx))) fail(ErrorKind::InvalidArgument, "singular matrix in representation");
    return M;
}

template <class R>
MatrixRep<R> rep_in(const Json& j, const std::vector<std::string>& gens, const ctx_of<R>& cx) {
    MatrixRep<R> rep;
    const Json& Nj = need(j, "N");
    if (!Nj.is_number_integer() || Nj.get<int>() < 1) bad("'N' must be a positive integer");
    rep.N = Nj.get<int>();
    const Json& ms = need(j, "matrices");
    if (!ms.is_object()) bad("'matrices' must map generators to matrices");
    for (const auto& g : gens) {
        if (!ms.contains(g)) bad("no matrix for generator '" + g + "'");
        rep.mats.push_back(matrix_from_json<R>(ms.at(g), rep.N, cx));
    }
    for (const auto& [k, v] : ms.items()) {
        if (std::find(gens.begin(), gens.end(), k) == gens.end())
            fail(ErrorKind::UnknownGenerator, "matrix for unknown generator '" + k + "'");
    }
    return rep;
}

} // namespace

// ---------------------------------------------------------------- domains

DomainSpec domain_from_json(const Json& j) {
    if (!j.is_object()) bad("domain must be an object");
    const Json& kj = need(j, "kind");
    if (!kj.is_string()) bad("domain kind must be a string");
    std::string k = kj.get<std::string>();
    DomainSpec d;
    if (k == "integers") {
        d.kind = DomainKind::Integers;
    } else if (k == "rationals") {
        d.kind = DomainKind::Rationals;
    } else if (k == "prime_field") {
        d.kind = DomainKind::PrimeField;
        d.p = need_u64(j, "p");
        if (!is_prime(d.p)) fail(ErrorKind::InvalidArgument, std::to_string(d.p) + " is not prime");
    } else if (k == "quadratic_field") {
        d.kind = DomainKind::QuadraticField;
        d.p = need_u64(j, "p");
        if (j.contains("nonresidue")) d.nonresidue = need_u64(j, "nonresidue");
        fq_of(d); // validates
    } else if (k == "finite_field") {
        d.kind = DomainKind::FiniteField;
        d.p = need_u64(j, "p");
        const Json& m = need(j, "modulus");
        if (!m.is_array()) bad("'modulus' must be an array");
        for (const auto& c : m) {
            if (!c.is_number_unsigned()) bad("modulus coefficients must be nonnegative integers");
            d.modulus.push_back(c.get<std::uint64_t>());
        }
        fq_of(d);
    } else if (k == "quadratic_ring") {
        d.kind = DomainKind::QuadraticRing;
        const Json& D = need(j, "D");
        if (!D.is_number_integer()) bad("'D' must be an integer");
        d.D = D.get<long>();
        if (j.contains("half")) {
            if (!j.at("half").is_boolean()) bad("'half' must be a boolean");
            d.half = j.at("half").get<bool>();
        }
        make_quad_ctx(d.D, d.half);
    } else {
        bad("unknown domain kind '" + k + "'");
    }
    return d;
}

Json domain_to_json(const DomainSpec& d) {
    Json j;
    switch (d.kind) {
    case DomainKind::Integers: j["kind"] = "integers"; break;
    case DomainKind::Rationals: j["kind"] = "rationals"; break;
    case DomainKind::PrimeField:
        j["kind"] = "prime_field";
        j["p"] = d.p;
        break;
    case DomainKind::QuadraticField:
        j["kind"] = "quadratic_field";
        j["p"] = d.p;
        if (d.nonresidue) j["nonresidue"] = *d.nonresidue;
        break;
    case DomainKind::FiniteField:
        j["kind"] = "finite_field";
        j["p"] = d.p;
        j["modulus"] = d.modulus;
        break;
    case DomainKind::QuadraticRing:
        j["kind"] = "quadratic_ring";
        j["D"] = d.D;
        j["half"] = d.half;
        break;
    }
    return j;
}

DomainSpec domain_of(const ring_traits<Integer>::Ctx&) { return {}; }

DomainSpec domain_of(const ring_traits<Rational>::Ctx&) {
    DomainSpec d;
    d.kind = DomainKind::Rationals;
    return d;
}

DomainSpec domain_of(const ring_traits<Fp>::Ctx& c) {
    DomainSpec d;
    d.kind = DomainKind::PrimeField;
    d.p = c.p;
    return d;
}

DomainSpec domain_of(const ring_traits<Fq>::Ctx& c) {
    DomainSpec d;
    d.p = c.F->p;
    if (c.F->k == 2 && (c.F->nonresidue || c.F == fq_field(c.F->p, 2))) {
        d.kind = DomainKind::QuadraticField;
        d.nonresidue = c.F->nonresidue;
    } else {
        d.kind = DomainKind::FiniteField;
        d.modulus = c.F->modulus;
    }
    return d;
}

DomainSpec domain_of(const QuadCtx& c) {
    DomainSpec d;
    d.kind = DomainKind::QuadraticRing;
    d.D = c.D;
    d.half = c.half;
    return d;
}

// ---------------------------------------------------------- coefficients

std::string coeff_str(const Integer& a) { return a.get_str(); }
std::string coeff_str(const Rational& a) { return a.get_str(); }
std::string coeff_str(const Fp& a) { return std::to_string(a.v); }

std::string coeff_str(const Fq& a) {
    std::vector<std::pair<int, std::string>> parts;
    for (int i = 0; i < a.F->k; ++i)
        if (a.c[i]) parts.emplace_back(i, std::to_string(a.c[i]));
    return signed_join(parts);
}

std::string coeff_str(const QuadInt& a) {
    std::vector<std::pair<int, std::string>> parts;
    if (a.a != 0) parts.emplace_back(0, a.a.get_str());
    if (a.b != 0) parts.emplace_back(1, a.b.get_str());
    return signed_join(parts);
}

Integer parse_coeff(const std::string& s, const ring_traits<Integer>::Ctx&) {
    Integer r = 0;
    for (const auto& [k, c] : coeff_terms(s)) {
        if (k != 0 && c != 0) fail(ErrorKind::WrongDomain, "'" + s + "' is not a rational integer");
        if (k == 0) r = integral(c, s);
    }
    return r;
}

Rational parse_coeff(const std::string& s, const ring_traits<Rational>::Ctx&) {
    Rational r = 0;
    for (const auto& [k, c] : coeff_terms(s)) {
        if (k != 0 && c != 0) fail(ErrorKind::WrongDomain, "'" + s + "' is not rational");
        if (k == 0) r = c;
    }
    return r;
}

Fp parse_coeff(const std::string& s, const ring_traits<Fp>::Ctx& cx) {
    Fp r(cx.p, 0);
    for (const auto& [k, c] : coeff_terms(s)) {
        if (k != 0 && c != 0) fail(ErrorKind::WrongDomain, "'" + s + "' is not in F_" + std::to_string(cx.p));
        if (k == 0) r = Fp(cx.p, reduce_rational(c, cx.p, s));
    }
    return r;
}

Fq parse_coeff(const std::string& s, const ring_traits<Fq>::Ctx& cx) {
    Fq r(cx.F);
    Fq w = Fq::gen(cx.F);
    for (const auto& [k, c] : coeff_terms(s)) {
        Fq term = Fq::from_int(cx.F, Integer(reduce_rational(c, cx.F->p, s)));
        r += term * w.pow(static_cast<std::uint64_t>(k));
    }
    return r;
}

QuadInt parse_coeff(const std::string& s, const QuadCtx& cx) {
    QuadInt r{cx, 0, 0};
    for (const auto& [k, c] : coeff_terms(s)) {
        if (k > 1 && c != 0) bad("powers of w above 1 in '" + s + "'");
        if (k == 0) r.a = integral(c, s);
        if (k == 1) r.b = integral(c, s);
    }
    return r;
}

// ------------------------------------------------------------ polynomials

Json poly_to_json(const AnyPoly& f) {
    return std::visit([](const auto& g) { return poly_to_json(g); }, f);
}

AnyPoly poly_from_json(const Json& j) {
    if (!j.is_object()) bad("polynomial must be a JSON object");
    DomainSpec d = j.contains("domain") ? domain_from_json(j.at("domain")) : DomainSpec{};
    const Json& terms = need(j, "terms");
    switch (d.kind) {
    case DomainKind::Integers: return terms_from_json<Integer>(terms, {});
    case DomainKind::Rationals: return terms_from_json<Rational>(terms, {});
    case DomainKind::PrimeField: return terms_from_json<Fp>(terms, {d.p});
    case DomainKind::QuadraticField:
    case DomainKind::FiniteField: return terms_from_json<Fq>(terms, {fq_of(d)});
    case DomainKind::QuadraticRing: return terms_from_json<QuadInt>(terms, make_quad_ctx(d.D, d.half));
    }
    bad("unreachable domain");
}

ZPoly zpoly_from_json(const Json& j) {
    AnyPoly f = poly_from_json(j);
    if (!std::holds_alternative<ZPoly>(f)) fail(ErrorKind::WrongDomain, "expected a polynomial over the integers");
    return std::get<ZPoly>(f);
}

AnyPoly parse_poly_text(const std::string& s, const DomainSpec& d) {
    switch (d.kind) {
    case DomainKind::Integers: return parse_text_in<Integer>(s, {});
    case DomainKind::Rationals: return parse_text_in<Rational>(s, {});
    case DomainKind::PrimeField: return parse_text_in<Fp>(s, {d.p});
    case DomainKind::QuadraticField:
    case DomainKind::FiniteField: return parse_text_in<Fq>(s, {fq_of(d)});
    case DomainKind::QuadraticRing: return parse_text_in<QuadInt>(s, make_quad_ctx(d.D, d.half));
    }
    bad("unreachable domain");
}

ZPoly parse_zpoly(const std::string& s) { return std::get<ZPoly>(parse_poly_text(s)); }

std::string poly_text(const AnyPoly& f) {
    return std::visit(
        [](const auto& g) {
            if (g.is_zero()) return std::string("0");
            std::string out;
            for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
                std::string c = coeff_str(it->second);
                bool compound = c.find_first_of("+-", 1) != std::string::npos;
                long e = it->first;
                std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
                std::string piece;
                if (mono.empty())
                    piece = c;
                else if (c == "1")
                    piece = mono;
                else if (c == "-1")
                    piece = "-" + mono;
                else
                    piece = (compound ? "(" + c + ")" : c) + "*" + mono;
                if (!out.empty() && piece[0] != '-') out += "+";
                out += piece;
            }
            return out;
        },
        f);
}

// ------------------------------------------------ presentations and reps

Json presentation_to_json(const Presentation& P) {
    Json j;
    j["generators"] = P.generators;
    Json rs = Json::array();
    for (const auto& r : P.relators) rs.push_back(r.str(P.generators));
    j["relators"] = rs;
    Json ab = Json::object();
    for (std::size_t i = 0; i < P.generators.size(); ++i) ab[P.generators[i]] = P.abelianization[i];
    j["abelianization"] = ab;
    return j;
}

Presentation presentation_from_json(const Json& j) {
    Presentation P;
    const Json& g = need(j, "generators");
    if (!g.is_array() || g.empty()) bad("'generators' must be a nonempty array");
    for (const auto& x : g) {
        if (!x.is_string()) bad("generator names must be strings");
        P.generators.push_back(x.get<std::string>());
    }
    const Json& r = need(j, "relators");
    if (!r.is_array()) bad("'relators' must be an array");
    for (const auto& x : r) {
        if (!x.is_string()) bad("relators must be strings");
        P.relators.push_back(parse_word(x.get<std::string>(), P.generators));
    }
    if (j.contains("abelianization")) {
        const Json& ab = j.at("abelianization");
        if (!ab.is_object()) bad("'abelianization' must map generators to exponents");
        P.abelianization.assign(P.generators.size(), 0);
        for (const auto& [k, v] : ab.items()) {
            int i = P.index(k);
            if (!v.is_number_integer()) bad("abelianization exponents must be integers");
            P.abelianization[static_cast<std::size_t>(i)] = v.get<long>();
        }
    } else {
        P.abelianization.assign(P.generators.size(), 1);
    }
    return P;
}

Json rep_to_json(const AnyRep& rep, const std::vector<std::string>& gens) {
    return std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r.mats[0][0][0])>;
            Json j;
            if (r.mats.empty()) bad("empty representation");
            j["field"] = domain_to_json(domain_of(ring_traits<R>::ctx(r.mats[0][0][0])));
            j["N"] = r.N;
            Json ms = Json::object();
            for (std::size_t g = 0; g < r.mats.size() && g < gens.size(); ++g) {
                Json M = Json::array();
                for (const auto& row : r.mats[g]) {
                    Json jr = Json::array();
                    for (const auto& x : row) jr.push_back(coeff_str(x));
                    M.push_back(jr);
                }
                ms[gens[g]] = M;
            }
            j["matrices"] = ms;
            return j;
        },
        rep);
}

AnyRep rep_from_json(const Json& j, const std::vector<std::string>& gens) {
    DomainSpec d = domain_from_json(need(j, "field"));
    switch (d.kind) {
    case DomainKind::Rationals: return rep_in<Rational>(j, gens, {});
    case DomainKind::PrimeField: return rep_in<Fp>(j, gens, {d.p});
    case DomainKind::QuadraticField:
    case DomainKind::FiniteField: return rep_in<Fq>(j, gens, {fq_of(d)});
    default: fail(ErrorKind::WrongDomain, "representations need a field");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

// ------------------------------------------------------------------- csv

namespace {

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_null())
        s = "";
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

} // namespace

void write_csv(const Json& rows, std::ostream& out) {
    if (!rows.is_array()) bad("csv rows must be an array");
    std::vector<std::string> cols;
    for (const auto& r : rows) {
        if (!r.is_object()) bad("csv rows must be objects");
        for (const auto& [k, v] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(Json(cols[i]));
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out << ",";
            if (r.contains(cols[i])) out << csv_cell(r.at(cols[i]));
        }
        out << "\n";
    }
}

} // namespace iwknot
