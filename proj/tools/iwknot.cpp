// iwknot command-line front end. JSON on stdout, optional CSV of the rows.
// Exit codes: 0 success or PASS, 1 FAIL verdict, 2 usage, 3 computation error.

#include "CLI11.hpp"

#include "iwknot/detection.hpp"
#include "iwknot/fox.hpp"
#include "iwknot/io.hpp"
#include "iwknot/iwasawa.hpp"
#include "iwknot/padic.hpp"
#include "iwknot/polyalg.hpp"
#include "iwknot/suite.hpp"
#include "iwknot/twistknot.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

using namespace iwknot;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kCompute = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad user input surfaces as a usage error naming the flag
template <class F>
auto for_flag(const std::string& flag, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        switch (e.kind()) {
        case ErrorKind::SyntaxError:
        case ErrorKind::ConfigParse:
        case ErrorKind::UnknownGenerator:
        case ErrorKind::InvalidArgument:
        case ErrorKind::WrongDomain:
        case ErrorKind::MNotCoprime:
            throw UsageError(flag + ": " + e.what());
        default: throw;
        }
    }
}

// a file holding polynomial JSON, or an inline expression such as 2*t^2-3*t+2
AnyPoly load_poly(const std::string& flag, const std::string& arg) {
    return for_flag(flag, [&]() -> AnyPoly {
        if (std::filesystem::exists(arg)) return poly_from_json(read_json_file(arg));
        return parse_poly_text(arg);
    });
}

ZPoly load_zpoly(const std::string& flag, const std::string& arg) {
    AnyPoly f = load_poly(flag, arg);
    if (!std::holds_alternative<ZPoly>(f)) throw UsageError(flag + ": expected a polynomial over the integers");
    return std::get<ZPoly>(f);
}

void need_prime(const std::string& flag, std::uint64_t p) {
    if (!is_prime(p)) throw UsageError(flag + ": " + std::to_string(p) + " is not prime");
}

struct Output {
    std::string csv;
    void emit(const Json& j) const {
        std::cout << j.dump(2) << "\n";
        if (!csv.empty()) {
            std::ofstream out(csv);
            if (!out) throw UsageError("--csv: cannot write " + csv);
            const Json& rows = j.contains("rows") ? j.at("rows") : Json::array({j});
            write_csv(rows, out);
        }
    }
};

int verdict(const Json& j) { return j.value("verdict", "PASS") == "PASS" ? kOk : kFail; }

Json triple_json(const IwasawaTriple& t) {
    Json rows = Json::array();
    for (const auto& r : t.e_table)
        rows.push_back({{"r", r.r}, {"n", r.n}, {"e", r.e}, {"nu", r.nu}, {"psi_nontrivial", r.psi_nontrivial}});
    return {{"p", t.p},     {"m", t.m},   {"lambda", t.lambda},           {"mu", t.mu},
            {"nu", t.nu}, {"stable_from", t.stable_from}, {"predicted_level", t.predicted_level},
            {"psi_flag", t.psi_flag}, {"e_table", rows}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iwasawa invariants of twisted knot polynomials"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Output out;
    app.add_option("--csv", out.csv, "also write the report rows as CSV");

    std::string poly, other, presentation_file, rep_file, generator, config;
    std::uint64_t p = 0;
    long m = 1, r_lo = 1, r_hi = 0, n = 0, m_max = 12, n_max = 0, rank = 1, degree = 1;
    std::uint64_t p_max = 7, gauss_p = 2;
    double tol = 1e-10;
    long power = 1;

    auto* c_poly = app.add_subcommand("poly", "normal forms and basic invariants of a polynomial");
    c_poly->add_option("--poly", poly, "polynomial JSON file or expression")->required();
    c_poly->add_option("--power", power, "also report f(t^v)")->check(CLI::PositiveNumber);

    auto* c_res = app.add_subcommand("resultant", "Sylvester resultant or cyclic resultant");
    c_res->add_option("--poly", poly, "polynomial JSON file or expression")->required();
    auto* o_other = c_res->add_option("--with", other, "second polynomial");
    auto* o_n_res = c_res->add_option("--n", n, "cyclic resultant Res(t^n - 1, f)")->check(CLI::PositiveNumber);
    o_other->excludes(o_n_res);

    auto* c_mahler = app.add_subcommand("mahler", "Mahler measure, Gauss norm and cyclic growth");
    c_mahler->add_option("--poly", poly, "polynomial JSON file or expression")->required();
    c_mahler->add_option("--p", gauss_p, "prime for the Gauss norm (default 2)");
    c_mahler->add_option("--tol", tol, "root tolerance")->check(CLI::PositiveNumber);
    c_mahler->add_option("--n", n_max, "growth table for n = 1..N")->check(CLI::PositiveNumber);

    auto* c_iw = app.add_subcommand("iwasawa", "lambda, mu and nu of a polynomial");
    c_iw->add_option("--poly", poly, "polynomial JSON file or expression")->required();
    c_iw->add_option("--p", p, "prime")->required();
    c_iw->add_option("--m", m, "tame part of the cover degree")->check(CLI::PositiveNumber);
    c_iw->add_option("--r-lo", r_lo, "first level")->check(CLI::NonNegativeNumber);
    c_iw->add_option("--r-hi", r_hi, "last level (default: past the predicted stable level)");

    auto* c_wada = app.add_subcommand("wada", "Wada invariant from a presentation and a representation");
    auto* o_pres = c_wada->add_option("--presentation", presentation_file, "presentation JSON");
    auto* o_n_wada = c_wada->add_option("--n", n, "use the twist knot J(2,2n) presentation");
    o_pres->excludes(o_n_wada);
    c_wada->add_option("--rep", rep_file, "representation JSON")->required();
    c_wada->add_option("--generator", generator, "generator for the denominator (default: first)");

    auto* c_tk = app.add_subcommand("twistknot", "twist knot J(2,2n) computations");
    c_tk->fallthrough();
    c_tk->require_subcommand(1);
    c_tk->add_option("--n", n, "twist parameter")->required();
    c_tk->add_option("--p", p, "prime");
    auto* tk_info = c_tk->add_subcommand("info", "name, fiberedness, presentation, polynomials");
    auto* tk_alex = c_tk->add_subcommand("alexander", "classical Alexander pair");
    auto* tk_scan = c_tk->add_subcommand("scan-mu", "exhaustive mu = 0 scan");
    auto* tk_nonac = c_tk->add_subcommand("nonacyclic", "non-acyclic points, parametrised and brute force");
    auto* tk_resred = c_tk->add_subcommand("resred", "residually reducible points (-1,-1) and (1,-1)");

    auto* c_det = app.add_subcommand("detect", "diagnostics read off lambda and mu");
    c_det->fallthrough();
    c_det->require_subcommand(1);
    c_det->add_option("--poly", poly, "polynomial JSON file or expression")->required();
    c_det->add_option("--p-max", p_max, "primes up to this bound")->check(CLI::PositiveNumber);
    c_det->add_option("--m-max", m_max, "largest tame degree")->check(CLI::PositiveNumber);
    c_det->add_option("--p", p, "single prime");
    auto* det_monic = c_det->add_subcommand("monic", "is the leading coefficient a unit");
    auto* det_degree = c_det->add_subcommand("degree", "recover the degree from lambda");
    auto* det_genus = c_det->add_subcommand("genus", "genus candidate from lambda_1 - lambda_0");
    det_genus->add_option("--denominator", other, "the zeroth polynomial (default t - 1)");
    det_genus->add_option("--m", m, "tame degree")->check(CLI::PositiveNumber);
    det_genus->add_option("--rank", rank, "N, the rank of the representation")->check(CLI::PositiveNumber);
    det_genus->add_option("--degree", degree, "d, the degree of the coefficient field")->check(CLI::PositiveNumber);

    auto* c_suite = app.add_subcommand("suite", "run the acceptance battery");
    c_suite->add_option("--config", config, "JSON config (default settings when omitted)");

    for (auto* sub : {c_poly, c_res, c_mahler, c_iw, c_wada, c_tk, c_det, c_suite})
        sub->add_option("--csv", out.csv, "also write the report rows as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_poly) {
            AnyPoly f = load_poly("--poly", poly);
            Json j;
            j["poly"] = poly_to_json(f);
            j["text"] = poly_text(f);
            std::visit(
                [&](const auto& g) {
                    j["span"] = g.is_zero() ? Json() : Json(g.span());
                    j["unit_normal"] = poly_text(AnyPoly(unit_normal(g)));
                    if (power > 1) j["power"] = poly_text(AnyPoly(g.substitute_power(power)));
                },
                f);
            if (auto* z = std::get_if<ZPoly>(&f)) {
                j["content"] = content(*z).get_str();
                if (!z->is_zero()) j["shift"] = poly_text(AnyPoly(substitute_shift(z->shifted_to_zero())));
            }
            if (auto* q = std::get_if<Laurent<QuadInt>>(&f)) j["norm"] = poly_text(AnyPoly(norm_polynomial(*q)));
            out.emit(j);
            return kOk;
        }
        if (*c_res) {
            ZPoly f = load_zpoly("--poly", poly);
            Json j;
            if (!other.empty()) {
                ZPoly g = load_zpoly("--with", other);
                j["resultant"] = resultant(f, g).get_str();
            } else if (n > 0) {
                auto cr = cyclic_resultant(f, n);
                j["n"] = n;
                j["value"] = cr.value.get_str();
                j["psi"] = poly_text(AnyPoly(cr.psi));
            } else {
                throw UsageError("resultant: give --with or --n");
            }
            out.emit(j);
            return kOk;
        }
        if (*c_mahler) {
            ZPoly f = load_zpoly("--poly", poly);
            need_prime("--p", gauss_p);
            auto r = measure_report(f, gauss_p, tol);
            Json j = {{"mahler", r.mahler}, {"gauss_norm_exponent", r.gauss_exponent}, {"root_magnitudes", r.roots}};
            if (n_max > 0) {
                Json rows = Json::array();
                for (const auto& a : asymptotic_check(f, n_max, gauss_p))
                    rows.push_back({{"n", a.n},
                                    {"resultant", a.resultant.get_str()},
                                    {"root_growth", a.root_growth},
                                    {"p_part", a.p_part},
                                    {"valuation", a.valuation},
                                    {"psi_nontrivial", a.psi_nontrivial}});
                j["rows"] = rows;
            }
            out.emit(j);
            return kOk;
        }
        if (*c_iw) {
            ZPoly f = load_zpoly("--poly", poly);
            need_prime("--p", p);
            auto w = for_flag("--m", [&] { return iwasawa_weierstrass(f, p, m); });
            long hi = r_hi;
            if (hi == 0) {
                hi = std::max(r_lo + 2, predicted_stable_level(w) + 1);
                while (hi > r_lo + 2 && Integer(m) * ipow(Integer(static_cast<unsigned long>(p)),
                                                           static_cast<unsigned long>(hi)) > kDefaultResourceCap)
                    --hi;
            }
            if (hi - r_lo < 2) throw UsageError("--r-hi: need r_hi - r_lo >= 2");
            auto t = nu_estimate(f, p, m, r_lo, hi);
            Json j = triple_json(t);
            j["weierstrass_pass"] = t.stable_from <= std::max(r_lo, t.predicted_level - 1);
            out.emit(j);
            return kOk;
        }
        if (*c_wada) {
            Presentation P = n != 0 ? twist_knot_presentation(n)
                                    : for_flag("--presentation", [&] {
                                          if (presentation_file.empty())
                                              fail(ErrorKind::InvalidArgument, "give --presentation or --n");
                                          return presentation_from_json(read_json_file(presentation_file));
                                      });
            AnyRep rep = for_flag("--rep", [&] { return rep_from_json(read_json_file(rep_file), P.generators); });
            int g = generator.empty() ? 0 : for_flag("--generator", [&] { return P.index(generator); });
            Json j = std::visit(
                [&](const auto& r) {
                    auto w = wada_invariant(P, r, g);
                    return Json{{"generator", P.generators[static_cast<std::size_t>(g)]},
                                {"num", poly_to_json(w.num)},
                                {"den", poly_to_json(w.den)},
                                {"num_text", poly_text(AnyPoly(w.num))},
                                {"den_text", poly_text(AnyPoly(w.den))}};
                },
                rep);
            out.emit(j);
            return kOk;
        }
        if (*c_tk) {
            if (n == 0) throw UsageError("--n: the twist parameter must be nonzero");
            auto need_p = [&] {
                if (p == 0) throw UsageError("--p: required for this command");
                need_prime("--p", p);
            };
            if (*tk_info) {
                TwistKnot K{n};
                out.emit({{"n", n},
                          {"name", K.name()},
                          {"fibered", K.fibered()},
                          {"genus", 1},
                          {"presentation", presentation_to_json(twist_knot_presentation(n))},
                          {"chebyshev_S_n", chebyshev_poly(n).str("z")},
                          {"a0", tran_a0_poly(n).str("z")}});
                return kOk;
            }
            if (*tk_alex) {
                auto [d1, d0] = classical_alexander(n);
                out.emit({{"n", n}, {"delta1", poly_to_json(d1)}, {"delta0", poly_to_json(d0)},
                          {"delta1_text", poly_text(AnyPoly(d1))}, {"delta0_text", poly_text(AnyPoly(d0))}});
                return kOk;
            }
            need_p();
            if (*tk_scan) {
                Json j = mu_zero_scan(n, p).to_json();
                out.emit(j);
                return verdict(j);
            }
            if (*tk_nonac) {
                ScanReport rep;
                rep.command = "twistknot nonacyclic";
                rep.params = {{"n", n}, {"p", p}};
                std::set<std::pair<std::uint64_t, std::uint64_t>> alpha, brute;
                int extension_points = 0;
                for (const Fq& x : nonacyclic_points(n, p)) {
                    if (x.in_prime_field())
                        alpha.insert({x.c[0], x.c[0]});
                    else
                        ++extension_points;
                }
                for (const auto& [x, y] : nonacyclic_bruteforce(n, p)) brute.insert({x.v, y.v});
                std::set<std::pair<std::uint64_t, std::uint64_t>> all = alpha;
                all.insert(brute.begin(), brute.end());
                for (const auto& [x, y] : all) {
                    Json row = {{"x", x}, {"y", y}, {"parametrised", alpha.count({x, y}) > 0},
                                {"brute_force", brute.count({x, y}) > 0}};
                    rep.rows.push_back(row);
                    if (!alpha.count({x, y}) || !brute.count({x, y})) rep.fail_with(row);
                }
                rep.summary = std::to_string(alpha.size()) + " parametrised F_p points, " +
                              std::to_string(brute.size()) + " by brute force, " +
                              std::to_string(extension_points) + " further points over F_{p^2}";
                Json j = rep.to_json();
                out.emit(j);
                return verdict(j);
            }
            if (*tk_resred) {
                Json j = residually_reducible_report(n, p).to_json();
                out.emit(j);
                return verdict(j);
            }
        }
        if (*c_det) {
            ZPoly f = load_zpoly("--poly", poly);
            std::vector<std::uint64_t> ps;
            if (p != 0) {
                need_prime("--p", p);
                ps = {p};
            } else {
                ps = primes_up_to(p_max);
                if (ps.empty()) throw UsageError("--p-max: no primes below the bound");
            }
            if (*det_monic) {
                out.emit(to_json(monic_detect(f, ps, m_max)));
                return kOk;
            }
            if (*det_degree) {
                Json rows = Json::array();
                for (auto q : ps) rows.push_back(to_json(degree_recovery(f, q, m_max)));
                out.emit({{"kind", "DegreeRecovered"}, {"span", f.span()}, {"rows", rows}});
                return kOk;
            }
            if (*det_genus) {
                ZPoly f0 = other.empty() ? zpoly({-1, 1}) : load_zpoly("--denominator", other);
                Json rows = Json::array();
                for (auto q : ps) {
                    auto lm = for_flag("--m", [&] { return reidemeister_iwasawa(f, f0, q, m); });
                    Json v = to_json(genus_bound(lm.lambda, rank, degree));
                    v["p"] = q;
                    v["m"] = m;
                    v["mu_tau"] = lm.mu;
                    rows.push_back(v);
                }
                out.emit({{"kind", "GenusBound"}, {"rows", rows}});
                return kOk;
            }
        }
        if (*c_suite) {
            SuiteConfig cfg = config.empty()
                                  ? SuiteConfig{}
                                  : for_flag("--config", [&] { return suite_config_from_json(read_json_file(config)); });
            Json j = suite_report(run_suite(cfg), cfg);
            out.emit(j);
            return verdict(j);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCompute;
    }
    return kUsage;
}
