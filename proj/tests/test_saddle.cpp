#include <doctest.h>

#include <cmath>

#include "rscap/saddle.hpp"

using namespace rscap;

namespace {
const SolverConfig kDefault{};

int sign_changes_on_geometric_grid(double alpha, double kappa, const SolverConfig& cfg) {
    const auto rule = gauss::hermite_rule(cfg.quad_nodes);
    int changes = 0;
    double prev = one_dim_f(VarianceParam(1e-6), alpha, Margin(kappa), rule);
    for (double r = 2e-6; r <= cfg.max_bracket; r *= 2.0) {
        const double f = one_dim_f(VarianceParam(r), alpha, Margin(kappa), rule);
        if ((prev < 0.0) != (f < 0.0)) ++changes;
        prev = f;
    }
    return changes;
}
}  // namespace

TEST_CASE("solve_saddle existence threshold at kappa = 0") {
    CHECK_FALSE(solve_saddle(1.3, Margin(0.0), kDefault).has_value());
    CHECK_FALSE(solve_saddle(4.0 / M_PI, Margin(0.0), kDefault).has_value());
    CHECK(solve_saddle(4.0 / M_PI - 1e-3, Margin(0.0), kDefault).has_value());
}

TEST_CASE("solve_saddle meets the residual contract across the solvable range") {
    for (const double a : {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.25}) {
        const auto s = solve_saddle(a, Margin(0.0), kDefault);
        REQUIRE(s.has_value());
        CHECK(s->residual_q <= 1e-9);
        CHECK(s->residual_r <= 1e-8);
        CHECK(s->q >= 0.0);
        CHECK(s->q < 1.0);
        CHECK(s->r > 0.0);
    }
    // below the RS sign change (~0.833) the free energy at the solution is positive
    CHECK(solve_saddle(0.5, Margin(0.0), kDefault)->rs_value > 0.0);
}

TEST_CASE("solved points match an independent high-precision root") {
    // roots of r S(r)^2 = alpha B(1 - S(r)) located with mpmath (30 digits)
    struct Anchor {
        double alpha, kappa, r, q;
    };
    for (const Anchor& a : {Anchor{0.5, 0.0, 0.66803498953513012, 0.32238536322356131},
                            Anchor{1.1, 0.0, 16.055519490895782, 0.80572003887635404},
                            Anchor{0.3, 1.0, 18.420022855121197, 0.81806173648145157}}) {
        const auto s = solve_saddle(a.alpha, Margin(a.kappa), kDefault);
        REQUIRE(s.has_value());
        CHECK(s->r == doctest::Approx(a.r).epsilon(1e-9));
        CHECK(s->q == doctest::Approx(a.q).epsilon(1e-9));
    }
}

TEST_CASE("solution is stable under a finer quadrature rule") {
    const auto s201 = solve_saddle(0.5, Margin(0.0), kDefault);
    SolverConfig fine = kDefault;
    fine.quad_nodes = 401;
    const auto s401 = solve_saddle(0.5, Margin(0.0), fine);
    REQUIRE(s201.has_value());
    REQUIRE(s401.has_value());
    CHECK(std::abs(s401->r - s201->r) / s201->r < 1e-8);
}

TEST_CASE("q and r increase with alpha") {
    const auto lo = solve_saddle(0.5, Margin(0.0), kDefault);
    const auto hi = solve_saddle(1.0, Margin(0.0), kDefault);
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());
    CHECK(hi->r > lo->r);
    CHECK(hi->q > lo->q);
}

TEST_CASE("root bracketing certificate") {
    const auto rule = gauss::hermite_rule(kDefault.quad_nodes);
    for (const double a : {0.3, 0.9, 1.2}) {
        const auto s = solve_saddle(a, Margin(0.0), kDefault);
        REQUIRE(s.has_value());
        const double below =
            one_dim_f(VarianceParam(s->r * (1.0 - 10.0 * kDefault.rel_tol_r)), a, Margin(0.0), rule);
        const double above =
            one_dim_f(VarianceParam(s->r * (1.0 + 10.0 * kDefault.rel_tol_r)), a, Margin(0.0), rule);
        CHECK(below < 0.0);
        CHECK(above > 0.0);
    }
}

TEST_CASE("one_dim_f changes sign at most once on the geometric grid") {
    for (const double kappa : {0.0, 1.0}) {
        const double ac = alpha_c(Margin(kappa));
        for (const double a : {0.2, 0.5, 0.9 * ac}) {
            CHECK(sign_changes_on_geometric_grid(a, kappa, kDefault) <= 1);
        }
    }
}

TEST_CASE("bracket exhaustion with a predicted root raises resolution_error") {
    SolverConfig tiny = kDefault;
    tiny.max_bracket = 8.0;  // the root at alpha = 1.1, kappa = 0 sits near r = 16
    CHECK_THROWS_AS(solve_saddle(1.1, Margin(0.0), tiny), resolution_error);
}

TEST_CASE("capacity at kappa = 0 reproduces the known constants") {
    const CapacityResult c = capacity(Margin(0.0), kDefault);
    CHECK(std::abs(c.alpha_c - 4.0 / M_PI) < 1e-12);
    REQUIRE(c.alpha_star.has_value());
    CHECK(*c.alpha_star >= 0.830);
    CHECK(*c.alpha_star <= 0.836);
    REQUIRE(c.bracket_width.has_value());
    CHECK(*c.bracket_width <= 1e-6);
    CHECK(c.alpha_star_reason.empty());

    // rs_value changes sign across alpha_star
    const auto below = solve_saddle(*c.alpha_star - 0.05, Margin(0.0), kDefault);
    const auto above = solve_saddle(*c.alpha_star + 0.05, Margin(0.0), kDefault);
    REQUIRE(below.has_value());
    REQUIRE(above.has_value());
    CHECK(below->rs_value > 0.0);
    CHECK(above->rs_value < 0.0);
}

TEST_CASE("capacity at kappa = 1 stays inside (0, alpha_c)") {
    const CapacityResult c = capacity(Margin(1.0), kDefault);
    CHECK(c.alpha_c == doctest::Approx(0.33076995453961232).epsilon(1e-12));
    if (c.alpha_star) {
        CHECK(*c.alpha_star > 0.0);
        CHECK(*c.alpha_star < c.alpha_c);
        CHECK(*c.bracket_width <= 1e-6);
    } else {
        CHECK_FALSE(c.alpha_star_reason.empty());
    }
}

TEST_CASE("sweep solves a subcritical grid in ascending order") {
    const auto recs = sweep(Margin(0.0), 0.2, 1.0, 5, kDefault, 1);
    REQUIRE(recs.size() == 5);
    double prev_alpha = 0.0, prev_q = -1.0;
    for (const auto& rec : recs) {
        CHECK(rec.solved);
        CHECK(rec.alpha > prev_alpha);
        CHECK(rec.q > prev_q);
        prev_alpha = rec.alpha;
        prev_q = rec.q;
    }
    CHECK(recs.front().alpha == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(recs.back().alpha == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sweep crossing alpha_c flips the solved flag once") {
    const auto recs = sweep(Margin(0.0), 1.2, 1.35, 7, kDefault, 1);
    int flips = 0;
    for (std::size_t i = 1; i < recs.size(); ++i)
        if (recs[i].solved != recs[i - 1].solved) ++flips;
    CHECK(flips == 1);
    CHECK(recs.front().solved);
    CHECK_FALSE(recs.back().solved);
    for (const auto& rec : recs)
        if (!rec.solved) {
            CHECK(std::isnan(rec.q));
            CHECK(rec.error.empty());  // NoSolution is an answer, not an error
        }
}

TEST_CASE("sweep near alpha_c(1) reaches the divergent regime") {
    // rs_value crosses -1 around alpha_c(1) - 8.3e-5 (high-resolution pre-run);
    // these alphas sit on the divergent side of that crossing
    const double ac = alpha_c(Margin(1.0));
    const auto recs = sweep(Margin(1.0), ac - 8e-5, ac - 4e-5, 2, kDefault, 1);
    REQUIRE(recs.size() == 2);
    for (const auto& rec : recs) {
        CHECK(rec.solved);
        CHECK(rec.q > 0.99);
        CHECK(rec.rs_value < -1.0);
    }
}

TEST_CASE("concurrent sweep is bit-identical to serial sweep") {
    const auto serial = sweep(Margin(0.0), 0.2, 1.25, 14, kDefault, 1);
    const auto parallel = sweep(Margin(0.0), 0.2, 1.25, 14, kDefault, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].alpha == parallel[i].alpha);
        CHECK(serial[i].solved == parallel[i].solved);
        CHECK(serial[i].q == parallel[i].q);
        CHECK(serial[i].r == parallel[i].r);
        CHECK(serial[i].rs_value == parallel[i].rs_value);
        CHECK(serial[i].residual_q == parallel[i].residual_q);
        CHECK(serial[i].residual_r == parallel[i].residual_r);
    }
}

TEST_CASE("sweep records per-point failures without aborting") {
    SolverConfig tiny = kDefault;
    tiny.max_bracket = 8.0;
    const auto recs = sweep(Margin(0.0), 0.2, 1.25, 4, tiny, 1);
    REQUIRE(recs.size() == 4);
    CHECK(recs.front().solved);  // small alpha root fits inside the bracket
    bool saw_error = false;
    for (const auto& rec : recs) saw_error = saw_error || !rec.error.empty();
    CHECK(saw_error);
}

TEST_CASE("solver config validation") {
    SolverConfig bad = kDefault;
    bad.rel_tol_r = 0.5;
    CHECK_THROWS_AS(solve_saddle(0.5, Margin(0.0), bad), std::invalid_argument);
    bad = kDefault;
    bad.quad_nodes = 1;
    CHECK_THROWS_AS(solve_saddle(0.5, Margin(0.0), bad), std::invalid_argument);
    CHECK_THROWS_AS(solve_saddle(-0.5, Margin(0.0), kDefault), std::domain_error);
    CHECK_THROWS_AS(sweep(Margin(0.0), 0.5, 0.2, 5, kDefault), std::domain_error);
    CHECK_THROWS_AS(sweep(Margin(0.0), 0.2, 0.5, 1, kDefault), std::domain_error);
}
