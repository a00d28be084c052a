#include "doctest.h"

#include "iwknot/suite.hpp"

#include <set>

using namespace iwknot;

namespace {

bool config_rejected(const char* text) {
    try {
        suite_config_from_json(Json::parse(text));
    } catch (const Error& e) {
        return e.kind() == ErrorKind::ConfigParse;
    }
    return false;
}

} // namespace

TEST_CASE("config parsing rejects bad input") {
    CHECK(config_rejected(R"({"primez":[2]})"));
    CHECK(config_rejected(R"({"primes":"2"})"));
    CHECK(config_rejected(R"({"primes":[2,9]})"));
    CHECK(config_rejected(R"({"criteria":[0]})"));
    CHECK(config_rejected(R"({"criteria":[14]})"));
    CHECK(config_rejected(R"({"n_range":[3,1]})"));
    CHECK(config_rejected(R"({"n_range":[1]})"));
    CHECK(config_rejected(R"({"ms":[0]})"));
    CHECK(config_rejected(R"({"mahler_tol":0})"));
    CHECK(config_rejected(R"({"extra_polys":["t^"]})"));
    CHECK(config_rejected(R"({"seed":-1})"));
    CHECK(config_rejected(R"([1,2])"));
}

TEST_CASE("config defaults and round trip") {
    SuiteConfig d = suite_config_from_json(Json::object());
    CHECK(d.criteria.size() == static_cast<std::size_t>(kCriteriaCount));
    CHECK(suite_config_to_json(d) == suite_config_to_json(SuiteConfig{}));
    SuiteConfig c;
    c.seed = 7;
    c.primes = {3, 11};
    c.criteria = {2, 4};
    c.n_lo = -2;
    c.n_hi = 5;
    Json j = suite_config_to_json(c);
    CHECK(suite_config_to_json(suite_config_from_json(j)) == j);
}

TEST_CASE("a bare prime list and n range narrow the knot grids") {
    SuiteConfig c = suite_config_from_json(Json::parse(R"({"primes":[2,3],"n_range":[-1,2]})"));
    CHECK(c.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(c.knot_primes == std::vector<std::uint64_t>{2, 3});
    CHECK(c.wada_primes == std::vector<std::uint64_t>{3});
    CHECK(c.wada_n_lo == -1);
    CHECK(c.wada_n_hi == 2);
    // explicit keys win
    SuiteConfig e = suite_config_from_json(Json::parse(R"({"primes":[5],"knot_primes":[7],"wada_n_range":[-3,3]})"));
    CHECK(e.knot_primes == std::vector<std::uint64_t>{7});
    CHECK(e.wada_primes == std::vector<std::uint64_t>{5});
    CHECK(e.wada_n_lo == -3);
}

TEST_CASE("corpus respects its bounds and is reproducible") {
    SuiteConfig c;
    auto a = suite_corpus(c);
    CHECK(a.size() >= 50);
    for (const auto& f : a) {
        CHECK(!f.is_zero());
        CHECK(f.min_exp() == 0);
        CHECK(f.span() <= c.max_span);
        for (long e = f.min_exp(); e <= f.max_exp(); ++e) CHECK(abs(f.coeff(e)) <= c.coeff_bound);
    }
    CHECK(suite_corpus(c) == a);
    c.seed += 1;
    CHECK(suite_corpus(c) != a);
}

TEST_CASE("report shape") {
    SuiteConfig c = suite_config_from_json(Json::parse(R"({"primes":[2],"n_range":[-1,2],"criteria":[4,13]})"));
    auto rs = run_suite(c);
    REQUIRE(rs.size() == 2);
    Json rep = suite_report(rs, c);
    CHECK(rep["header"]["command"] == "suite");
    CHECK(rep["header"]["parameters"]["criteria"] == Json::array({4, 13}));
    CHECK(rep["rows"].size() == 2);
    CHECK(rep["verdict"] == "PASS");
    for (const auto& row : rep["rows"]) {
        CHECK(row.contains("seconds"));
        CHECK(row["verdict"] == "PASS");
    }
    // a failing result flips the verdict and becomes the witness
    CriterionResult bad{99, "synthetic", false, 0.0, 1.0, "forced", Json({{"x", 1}})};
    rs.push_back(bad);
    Json rep2 = suite_report(rs, c);
    CHECK(rep2["verdict"] == "FAIL");
    CHECK(rep2["summary"] == "2 of 3 criteria pass");
    CHECK(rep2["witness"]["criterion"] == 99);
    // over budget counts as failure even when correct
    CriterionResult slow{4, "slow", true, 2.0, 1.0, "", Json()};
    CHECK(!slow.pass());
}

TEST_CASE("unknown criterion id") {
    CHECK_THROWS_AS(run_criterion(0, SuiteConfig{}), Error);
    CHECK_THROWS_AS(criterion_title(kCriteriaCount + 1), Error);
}
