// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each criterion.
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "rscap/cli.hpp"
#include "rscap/emit.hpp"
#include "rscap/lemmas.hpp"

using namespace rscap;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    if (!ok) ++g_failures;
}

int sign_changes_on_geometric_grid(double alpha, double kappa, const SolverConfig& cfg,
                                   const gauss::QuadratureRule& rule) {
    int changes = 0;
    double prev = one_dim_f(VarianceParam(1e-6), alpha, Margin(kappa), rule);
    for (double r = 2e-6; r <= cfg.max_bracket; r *= 2.0) {
        const double f = one_dim_f(VarianceParam(r), alpha, Margin(kappa), rule);
        if ((prev < 0.0) != (f < 0.0)) ++changes;
        prev = f;
    }
    return changes;
}

std::string cli_capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

}  // namespace

int main() {
    const SolverConfig cfg{};
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);

    // 1. alpha_c(0) = 4/pi to 1e-12
    report(1, std::abs(alpha_c(Margin(0.0)) - 4.0 / M_PI) <= 1e-12, "alpha_c(0) = 4/pi to 1e-12");

    // 2. alpha_star(0) in [0.830, 0.836] with an rs sign change across it
    {
        const CapacityResult c = capacity(Margin(0.0), cfg);
        bool ok = c.alpha_star.has_value();
        if (ok) {
            ok = *c.alpha_star >= 0.830 && *c.alpha_star <= 0.836;
            const auto below = solve_saddle(*c.alpha_star - 0.05, Margin(0.0), cfg);
            const auto above = solve_saddle(*c.alpha_star + 0.05, Margin(0.0), cfg);
            ok = ok && below && below->rs_value > 0.0 && above && above->rs_value < 0.0;
        }
        report(2, ok, "alpha_star(0) in [0.830, 0.836], rs_value changes sign across it");
    }

    // 3. nonexistence at alpha = 1.3 and the residual contract on the solvable grid
    {
        bool ok = !solve_saddle(1.3, Margin(0.0), cfg).has_value();
        for (const double a : {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.25}) {
            const auto s = solve_saddle(a, Margin(0.0), cfg);
            ok = ok && s && s->residual_q <= 1e-9 && s->residual_r <= 1e-8;
        }
        report(3, ok, "solve: NoSolution at 1.3; residuals within contract on 7 alphas");
    }

    // 4. uniqueness probe: at most one sign change of f on the geometric grid
    {
        bool ok = true;
        for (const double kappa : {0.0, 1.0}) {
            const double ac = alpha_c(Margin(kappa));
            for (const double a : {0.2, 0.5, 0.9 * ac})
                ok = ok && sign_changes_on_geometric_grid(a, kappa, cfg, rule) <= 1;
        }
        report(4, ok, "one_dim_f changes sign at most once on the geometric r-grid");
    }

    // 5. g(0) = -4(pi-3)/pi^2 to 1e-12 and the pi-estimate margin
    {
        const bool ok = std::abs(g_fun(0.0) + 4.0 * (M_PI - 3.0) / (M_PI * M_PI)) <= 1e-12 &&
                        4.0 * (M_PI - 3.0) / (M_PI * M_PI) - 1.0 / 18.0 > 0.0;
        report(5, ok, "g(0) = -4(pi-3)/pi^2 to 1e-12 and 4(pi-3)/pi^2 > 1/18");
    }

    // 6. the full lemma registry passes at resolution 1e4
    {
        bool ok = true;
        std::string first_failure;
        for (const auto& rep : lemmas::verify_all(10000, cfg)) {
            if (!rep.passed && first_failure.empty()) first_failure = rep.lemma_id;
            ok = ok && rep.passed;
        }
        report(6, ok, ok ? "verify(all) passes at resolution 10^4"
                         : "verify(all) fails first at " + first_failure);
    }

    // 7. b_prime matches central finite differences to relative 1e-5
    {
        bool ok = true;
        const double h = 1e-5;
        for (const double kappa : {0.0, 1.0})
            for (const double t : {0.1, 0.5, 0.9}) {
                const double fd = (big_B(Overlap(t + h), Margin(kappa), rule) -
                                   big_B(Overlap(t - h), Margin(kappa), rule)) /
                                  (2.0 * h);
                const double an = b_prime(Overlap(t), Margin(kappa), rule);
                ok = ok && std::abs(fd - an) <= 1e-5 * std::abs(an);
            }
        report(7, ok, "b_prime matches finite differences of big_B to rel 1e-5");
    }

    // 8. divergence behavior along alpha_k = alpha_c (1 - 2^-k), k = 1..12
    {
        bool ok = true;
        for (const double kappa : {0.0, 1.0}) {
            const double ac = alpha_c(Margin(kappa));
            std::vector<SaddlePoint> pts;
            for (int k = 1; k <= 12; ++k) {
                const auto s = solve_saddle(ac * (1.0 - std::pow(2.0, -k)), Margin(kappa), cfg);
                if (!s) {
                    ok = false;
                    break;
                }
                pts.push_back(*s);
            }
            if (pts.size() != 12) {
                ok = false;
                continue;
            }
            for (std::size_t i = 1; i < pts.size(); ++i)
                ok = ok && pts[i].q > pts[i - 1].q && pts[i].r > pts[i - 1].r;
            ok = ok && pts.back().q > 0.99 && pts.back().rs_value < -1.0;
        }
        report(8, ok, "along alpha_k -> alpha_c: q, r increase, q_12 > 0.99, rs_12 < -1");
    }

    // 9. dual representations agree to 1e-10
    {
        bool ok = true;
        double r = 1e-3;
        for (int k = 0; k <= 40; ++k, r *= 2.0) {
            const double a = cap_A(VarianceParam(r), rule);
            const double b = cap_A_via_I(VarianceParam(r));
            ok = ok && std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a));
        }
        for (const double k : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            const double closed = c_kappa(Margin(k));
            const double quad = c_kappa_quadrature(Margin(k));
            ok = ok && std::abs(closed - quad) <= 1e-10 * std::max(1.0, closed);
        }
        report(9, ok, "A dual routes and C_kappa closed-vs-quadrature agree to 1e-10");
    }

    // 10. determinism: byte-identical CLI output, concurrent == serial sweep
    {
        const std::vector<std::string> solve_args = {"solve", "--kappa", "0",     "--alpha",
                                                     "0.7",   "--format", "json"};
        const std::vector<std::string> sweep_args = {"sweep",       "--kappa", "0",  "--alpha-min",
                                                     "0.2",         "--alpha-max", "1.3",
                                                     "--steps",     "8"};
        bool ok = cli_capture(solve_args) == cli_capture(solve_args) &&
                  cli_capture(sweep_args) == cli_capture(sweep_args);
        const auto serial = sweep(Margin(0.0), 0.2, 1.25, 10, cfg, 1);
        const auto parallel = sweep(Margin(0.0), 0.2, 1.25, 10, cfg, 4);
        ok = ok && emit::sweep_csv(serial) == emit::sweep_csv(parallel);
        report(10, ok, "byte-identical CLI output; concurrent sweep == serial sweep bit-exactly");
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
