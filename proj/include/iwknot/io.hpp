#pragma once

// Polynomial, presentation and representation interchange. JSON is the
// canonical format; big integers always travel as decimal strings.

#include "iwknot/fox.hpp"
#include "iwknot/laurent.hpp"
#include "iwknot/report.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace iwknot {

enum class DomainKind { Integers, Rationals, PrimeField, QuadraticField, FiniteField, QuadraticRing };

struct DomainSpec {
    DomainKind kind = DomainKind::Integers;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> nonresidue; // quadratic field; unset means the canonical F_{p^2}
    std::vector<std::uint64_t> modulus;      // finite field, monic, low to high
    long D = 0;
    bool half = false;
    bool operator==(const DomainSpec&) const = default;
};

DomainSpec domain_from_json(const Json& j);
Json domain_to_json(const DomainSpec& d);

DomainSpec domain_of(const ring_traits<Integer>::Ctx&);
DomainSpec domain_of(const ring_traits<Rational>::Ctx&);
DomainSpec domain_of(const ring_traits<Fp>::Ctx& c);
DomainSpec domain_of(const ring_traits<Fq>::Ctx& c);
DomainSpec domain_of(const QuadCtx& c);

using AnyPoly = std::variant<Laurent<Integer>, Laurent<Rational>, Laurent<Fp>, Laurent<Fq>, Laurent<QuadInt>>;

// coefficient strings: "12", "-3/4", "a+b*w" for the quadratic domains
// (w^i for larger finite fields)
std::string coeff_str(const Integer& a);
std::string coeff_str(const Rational& a);
std::string coeff_str(const Fp& a);
std::string coeff_str(const Fq& a);
std::string coeff_str(const QuadInt& a);

Integer parse_coeff(const std::string& s, const ring_traits<Integer>::Ctx&);
Rational parse_coeff(const std::string& s, const ring_traits<Rational>::Ctx&);
Fp parse_coeff(const std::string& s, const ring_traits<Fp>::Ctx& c);
Fq parse_coeff(const std::string& s, const ring_traits<Fq>::Ctx& c);
QuadInt parse_coeff(const std::string& s, const QuadCtx& c);

template <class R>
Json poly_to_json(const Laurent<R>& f) {
    Json j;
    j["domain"] = domain_to_json(domain_of(f.ctx()));
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e, coeff_str(c)}));
    j["terms"] = terms;
    return j;
}

Json poly_to_json(const AnyPoly& f);
AnyPoly poly_from_json(const Json& j);
/// integer polynomial; WrongDomain for anything else
ZPoly zpoly_from_json(const Json& j);

/// "2*t^2-3*t+2", "t^-1+1", "(1+w)*t-3"; coefficients as in coeff strings
AnyPoly parse_poly_text(const std::string& s, const DomainSpec& d = {});
ZPoly parse_zpoly(const std::string& s);

std::string poly_text(const AnyPoly& f);

Json presentation_to_json(const Presentation& P);
Presentation presentation_from_json(const Json& j);

using AnyRep = std::variant<MatrixRep<Rational>, MatrixRep<Fp>, MatrixRep<Fq>>;

Json rep_to_json(const AnyRep& rep, const std::vector<std::string>& gens);
AnyRep rep_from_json(const Json& j, const std::vector<std::string>& gens);

/// Reads a whole file as JSON; SyntaxError on malformed input.
Json read_json_file(const std::string& path);

/// Rows of flat objects as CSV. Columns in first-appearance order, strings
/// quoted when needed, nested values dumped as JSON.
void write_csv(const Json& rows, std::ostream& out);

} // namespace iwknot
