#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rscap/lemmas.hpp"

using namespace rscap;

namespace {
const SolverConfig kDefault{};
}

TEST_CASE("registry lists every documented check") {
    const std::vector<std::string> expected = {
        "mills_bounds",       "P_monotone",     "A_monotone_range", "B_continuity_endpoints",
        "B_monotone",         "Bprime_matches_fd", "g_two_forms",   "g_decreasing_pos",
        "g_neg_bound",        "hankel_feasible", "F_region_negative", "critical_value_bound",
        "pi_estimate",        "logtail_chernoff", "mills_sq_gap",   "theorem2_approach",
    };
    CHECK(lemmas::lemma_ids() == expected);
}

TEST_CASE("unknown ids and bad resolutions are config errors") {
    CHECK_THROWS_AS(lemmas::verify("no_such_lemma", 1000, kDefault), std::invalid_argument);
    CHECK_THROWS_AS(lemmas::verify("pi_estimate", 50, kDefault), std::invalid_argument);
}

TEST_CASE("every registered check passes at a quick resolution") {
    for (const auto& rep : lemmas::verify_all(150, kDefault)) {
        INFO(rep.lemma_id, ": worst margin ", rep.worst_margin, " at grid ", rep.grid_spec);
        CHECK(rep.passed);
        CHECK(rep.note == "numerical evidence, not proof");
        CHECK(rep.worst_margin > -rep.tolerance);
    }
}

TEST_CASE("reports are deterministic") {
    const auto a = lemmas::verify("mills_bounds", 500, kDefault);
    const auto b = lemmas::verify("mills_bounds", 500, kDefault);
    CHECK(a.worst_margin == b.worst_margin);
    CHECK(a.worst_point == b.worst_point);
    CHECK(a.grid_spec == b.grid_spec);

    const auto c = lemmas::verify("F_region_negative", 500, kDefault);
    const auto d = lemmas::verify("F_region_negative", 500, kDefault);
    CHECK(c.worst_margin == d.worst_margin);
    CHECK(c.worst_point == d.worst_point);
}

TEST_CASE("pi_estimate reports the documented margin") {
    const auto rep = lemmas::verify("pi_estimate", 100, kDefault);
    CHECK(rep.passed);
    CHECK(rep.worst_margin == doctest::Approx(0.0018297854715538733).epsilon(1e-12));
}

TEST_CASE("g_neg_bound margin reflects the gap below 1/18") {
    const auto rep = lemmas::verify("g_neg_bound", 10000, kDefault);
    CHECK(rep.passed);
    CHECK(rep.worst_margin > 0.02);
    CHECK(rep.worst_margin < 1.0 / 18.0);
    // worst_point re-evaluates to the reported margin
    REQUIRE(rep.worst_point.size() == 1);
    CHECK(std::abs((1.0 / 18.0 - g_fun(rep.worst_point[0])) - rep.worst_margin) < 1e-12);
}

TEST_CASE("F_region_negative worst point re-evaluates to its margin") {
    const auto rep = lemmas::verify("F_region_negative", 2000, kDefault);
    CHECK(rep.passed);
    REQUIRE(rep.worst_point.size() == 2);
    CHECK(std::abs(-f_xy(rep.worst_point[0], rep.worst_point[1]) - rep.worst_margin) < 1e-12);
}

TEST_CASE("g_two_forms worst point re-evaluates to its margin") {
    const auto rep = lemmas::verify("g_two_forms", 2000, kDefault);
    CHECK(rep.passed);
    REQUIRE(rep.worst_point.size() == 1);
    const double u = rep.worst_point[0];
    const double a = g_fun(u), b = g_fun_from_derivatives(u);
    const double rel = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
    CHECK(std::abs((1e-11 - rel) - rep.worst_margin) < 1e-12);
}

TEST_CASE("a starved quadrature rule makes the quadrature-backed checks fail") {
    SolverConfig starved = kDefault;
    starved.quad_nodes = 2;
    const auto rep = lemmas::verify("Bprime_matches_fd", 100, starved);
    CHECK_FALSE(rep.passed);
}
