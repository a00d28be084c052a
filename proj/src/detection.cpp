#include "iwknot/detection.hpp"

#include "iwknot/arith.hpp"
#include "iwknot/polyalg.hpp"

#include <numeric>

namespace iwknot {

namespace {

bool coprime(long m, std::uint64_t p) { return std::gcd(static_cast<std::uint64_t>(m), p) == 1; }

} // namespace

DegreeVerdict degree_recovery(const ZPoly& f, std::uint64_t p, long m_max) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    DegreeVerdict v;
    v.p = p;
    v.span = f.span();
    ZPoly g = primitive_part(f);
    v.upper_bound_only = valuation(g.lead(), p).value > 0;
    for (long m = 1; m <= m_max; ++m) {
        if (!coprime(m, p)) continue;
        long lam = iwasawa_lambda_mu(f, p, m).lambda;
        v.lambda_by_m.emplace_back(m, lam);
        if (lam > v.degree || (!v.witness_m && lam == v.span)) {
            v.degree = lam;
            v.witness_m = m;
        }
        if (lam == v.span) {
            v.recovered = true;
            break;
        }
    }
    return v;
}

MonicVerdict monic_detect(const ZPoly& f, const std::vector<std::uint64_t>& p_list, long m_max) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "monicness of the zero polynomial");
    if (p_list.empty()) fail(ErrorKind::InvalidArgument, "empty prime list");
    MonicVerdict v;
    v.m_max = m_max;
    bool all_mu_zero = true;
    for (std::uint64_t p : p_list) {
        MonicEvidence e;
        e.p = p;
        e.mu = iwasawa_lambda_mu(f, p, 1).mu;
        auto sup = lambda_sup(f, p, m_max);
        e.max_lambda = sup.max_lambda;
        e.witness_m = sup.witness_m;
        all_mu_zero = all_mu_zero && e.mu == 0;
        v.evidence.push_back(e);
    }
    bool constant = true;
    for (const auto& e : v.evidence) constant = constant && e.max_lambda == v.evidence.front().max_lambda;
    v.monic = all_mu_zero && constant;
    return v;
}

GenusVerdict genus_bound(long lambda_tau, long N, long d) {
    if (N < 1 || d < 1) fail(ErrorKind::InvalidArgument, "N and d must be positive");
    GenusVerdict v;
    v.lambda_tau = lambda_tau;
    v.N = N;
    v.d = d;
    v.ratio = Rational(lambda_tau, N * d);
    v.ratio.canonicalize();
    v.x_K = v.ratio > 0 ? v.ratio : Rational(0);
    if (v.x_K.get_den() == 1) {
        Integer x = v.x_K.get_num();
        if (x % 2 != 0) v.genus = Integer((x + 1) / 2).get_si();
    }
    return v;
}

std::string to_string(FiberedStatus s) {
    switch (s) {
    case FiberedStatus::Consistent: return "consistent";
    case FiberedStatus::Refuted: return "refuted";
    case FiberedStatus::Undetermined: return "undetermined";
    }
    return "?";
}

FiberedVerdict fibered_mu_criterion(const std::vector<MuReport>& reports) {
    if (reports.empty()) fail(ErrorKind::EmptyReports, "no representations scanned");
    FiberedVerdict v;
    for (const auto& r : reports) {
        if (!r.mu || *r.mu > 0) {
            v.status = FiberedStatus::Refuted;
            v.witness = r;
            v.note = r.mu ? "mu > 0 at " + r.label : "twisted polynomial vanishes at " + r.label;
            return v;
        }
    }
    v.status = FiberedStatus::Consistent;
    v.note = "mu = 0 on all " + std::to_string(reports.size()) +
             " scanned representations; evidence at scan scale, not a proof";
    return v;
}

std::optional<long> reduction_splits_in_unit_roots(const ZPoly& f, std::uint64_t p, long m_max) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "zero polynomial");
    ZPoly g = primitive_part(f.shifted_to_zero());
    if (valuation(g.lead(), p).value > 0 || valuation(g.trail(), p).value > 0) return std::nullopt;
    if (g.span() == 0) return 1;
    Laurent<Fp> gb = reduce_mod(g, p);
    for (long m = 1; m <= m_max; ++m) {
        if (!coprime(m, p)) continue;
        Laurent<Fp> tm = reduce_mod(zpoly({-1}) + ZPoly::t({}, m), p);
        Laurent<Fp> rest = gb;
        for (;;) {
            auto d = gcd_field(rest, tm);
            if (d.degree() == 0) break;
            rest = divmod(rest, d).first;
        }
        if (rest.degree() == 0) return m;
    }
    return std::nullopt;
}

Json to_json(const DegreeVerdict& v) {
    Json j;
    j["kind"] = "DegreeRecovered";
    j["p"] = v.p;
    j["span"] = v.span;
    j["degree"] = v.degree;
    j["status"] = v.recovered ? "recovered" : "partial";
    j["upper_bound_only"] = v.upper_bound_only;
    j["witness_m"] = v.witness_m ? Json(*v.witness_m) : Json();
    Json rows = Json::array();
    for (const auto& [m, l] : v.lambda_by_m) rows.push_back({{"m", m}, {"lambda", l}});
    j["lambda_by_m"] = rows;
    return j;
}

Json to_json(const MonicVerdict& v) {
    Json j;
    j["kind"] = "MonicVerdict";
    j["monic"] = v.monic;
    j["m_max"] = v.m_max;
    Json ev = Json::array();
    for (const auto& e : v.evidence)
        ev.push_back({{"p", e.p},
                      {"mu", e.mu},
                      {"max_lambda", e.max_lambda},
                      {"witness_m", e.witness_m ? Json(*e.witness_m) : Json()}});
    j["evidence"] = ev;
    return j;
}

Json to_json(const GenusVerdict& v) {
    Json j;
    j["kind"] = "GenusBound";
    j["lambda_tau"] = v.lambda_tau;
    j["N"] = v.N;
    j["d"] = v.d;
    j["ratio"] = v.ratio.get_str();
    j["x_K"] = v.x_K.get_str();
    j["genus"] = v.genus ? Json(*v.genus) : Json();
    j["status"] = v.genus ? "determined" : "undetermined";
    return j;
}

Json to_json(const FiberedVerdict& v) {
    Json j;
    j["kind"] = "FiberedFlag";
    j["status"] = to_string(v.status);
    if (v.witness) {
        j["witness"] = {{"label", v.witness->label},
                        {"p", v.witness->p},
                        {"m", v.witness->m},
                        {"mu", v.witness->mu ? Json(*v.witness->mu) : Json()}};
    } else {
        j["witness"] = Json();
    }
    j["note"] = v.note;
    return j;
}

} // namespace iwknot
