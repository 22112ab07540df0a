#include <doctest.h>

#include <cmath>

#include "qframe/checks.hpp"
#include "qframe/errors.hpp"

using namespace qframe;

TEST_CASE("default suite passes")
{
    const CheckReport r = run_checks(CheckOptions{});
    REQUIRE_FALSE(r.cases.empty());
    for (const auto &c : r.cases) {
        INFO(c.theorem << ": " << c.check << " residual " << c.max_residual << " " << c.error);
        CHECK(c.passed);
        CHECK(c.error.empty());
        CHECK(c.max_residual <= c.tolerance);
    }
    CHECK(r.passed());
}

TEST_CASE("suite passes at other sizes and seeds")
{
    for (std::uint64_t seed : {2ull, 99ull, 0xfffffffffull}) {
        CheckOptions o;
        o.seed = seed;
        o.dim = 1 + seed % 5;
        o.count = o.dim + 3;
        o.trials = 5;
        const CheckReport r = run_checks(o);
        for (const auto &c : r.cases) {
            INFO("seed " << seed << " " << c.theorem << ": " << c.check << " " << c.max_residual << " " << c.error);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("unsatisfiable tolerance fails")
{
    CheckOptions o;
    o.trials = 2;
    o.tolerance = 1e-30;
    const CheckReport r = run_checks(o);
    CHECK_FALSE(r.passed());
    for (const auto &c : r.cases) {
        CHECK(c.tolerance == 1e-30);
    }
}

TEST_CASE("deterministic for a fixed seed")
{
    CheckOptions o;
    o.seed = 7;
    o.trials = 3;
    const nlohmann::json a = check_report_to_json(run_checks(o));
    const nlohmann::json b = check_report_to_json(run_checks(o));
    CHECK(a.dump() == b.dump());

    o.seed = 8;
    CHECK(check_report_to_json(run_checks(o)).dump() != a.dump());

    CHECK(a.at("seed") == 7);
    CHECK(a.at("passed") == true);
    CHECK(a.at("cases").size() == run_checks(o).cases.size());
}

TEST_CASE("invalid sizes")
{
    CheckOptions o;
    o.dim = 0;
    CHECK_THROWS_AS(run_checks(o), DimensionMismatch);
    o.dim = 5;
    o.count = 4;
    CHECK_THROWS_AS(run_checks(o), DimensionMismatch);
}
