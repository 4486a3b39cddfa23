#include "rscap/saddle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace rscap {

namespace {

constexpr double kQCap = 1.0 - 1e-14;
constexpr double kTwoOverPi = 0.63661977236758134307553505349006;

double reduced_f(double r, double alpha, Margin kappa, const gauss::QuadratureRule& rule) {
    return one_dim_f(VarianceParam(r), alpha, kappa, rule);
}

SaddlePoint finish_point(double r, double alpha, Margin kappa, const gauss::QuadratureRule& rule) {
    SaddlePoint s;
    const double p = overlap_P(VarianceParam(r), rule);
    const double q = std::min(p, kQCap);
    s.q = q;
    s.r = r;
    s.residual_q = std::abs(q - p);
    const double R = r_map(Overlap(q), alpha, kappa, rule);
    s.residual_r = std::abs(r - R) / std::max(1.0, r);
    s.rs_value = rs_free_energy(alpha, kappa, Overlap(q), VarianceParam(r), rule);
    return s;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(rel_tol_r > 0.0) || !(rel_tol_r < 1e-2))
        throw std::invalid_argument("SolverConfig: rel_tol_r must lie in (0, 1e-2)");
    if (!(max_bracket > 0.0) || !std::isfinite(max_bracket))
        throw std::invalid_argument("SolverConfig: max_bracket must be positive and finite");
    if (quad_nodes < 2) throw std::invalid_argument("SolverConfig: quad_nodes must be >= 2");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

std::optional<SaddlePoint> solve_saddle(double alpha, Margin kappa, const SolverConfig& cfg) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("solve_saddle: alpha must be finite and > 0");
    cfg.validate();
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);

    // f is strictly increasing with f(0) < 0 and limit 2/pi - alpha C_kappa,
    // so the tail sign decides existence exactly.
    const double tail_limit = kTwoOverPi - alpha * c_kappa(kappa);
    if (tail_limit <= 0.0) {
        if (!(reduced_f(cfg.max_bracket, alpha, kappa, rule) < 0.0))
            throw resolution_error("solve_saddle: nonexistence not confirmed at max_bracket for alpha = " +
                                   std::to_string(alpha));
        return std::nullopt;
    }

    double hi = 1.0;
    double fhi = reduced_f(hi, alpha, kappa, rule);
    while (fhi <= 0.0) {
        hi *= 2.0;
        if (hi > cfg.max_bracket)
            throw resolution_error(
                "solve_saddle: root predicted by the tail criterion lies beyond max_bracket = " +
                std::to_string(cfg.max_bracket) + " at alpha = " + std::to_string(alpha));
        fhi = reduced_f(hi, alpha, kappa, rule);
    }
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    for (int it = 0; it < cfg.max_iter && (hi - lo) > cfg.rel_tol_r * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (reduced_f(mid, alpha, kappa, rule) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return finish_point(0.5 * (lo + hi), alpha, kappa, rule);
}

CapacityResult capacity(Margin kappa, const SolverConfig& cfg) {
    cfg.validate();
    CapacityResult out;
    out.alpha_c = alpha_c(kappa);

    const double lo = 0.01 * out.alpha_c;
    const double hi = 0.999 * out.alpha_c;
    constexpr int kScanPoints = 64;

    const auto rs_at = [&](double a) -> double {
        std::optional<SaddlePoint> s;
        try {
            s = solve_saddle(a, kappa, cfg);
        } catch (const resolution_error& e) {
            throw resolution_error("capacity: solver failed at alpha = " + std::to_string(a) + ": " +
                                   e.what());
        }
        if (!s)
            throw resolution_error("capacity: unexpected NoSolution below alpha_c at alpha = " +
                                   std::to_string(a));
        return s->rs_value;
    };

    double prev_a = lo;
    double prev_rs = rs_at(lo);
    double b_lo = 0.0, b_hi = 0.0;
    bool found = false;
    for (int i = 1; i < kScanPoints && !found; ++i) {
        const double a = lo + (hi - lo) * i / (kScanPoints - 1.0);
        const double rs = rs_at(a);
        if (prev_rs > 0.0 && rs <= 0.0) {
            b_lo = prev_a;
            b_hi = a;
            found = true;
        }
        prev_a = a;
        prev_rs = rs;
    }
    if (!found) {
        out.alpha_star_reason = "no sign change of rs_value on the scan grid (" +
                                std::to_string(kScanPoints) + " points on (0.01, 0.999) alpha_c)";
        return out;
    }
    while (b_hi - b_lo > 1e-6) {
        const double mid = 0.5 * (b_lo + b_hi);
        if (rs_at(mid) > 0.0)
            b_lo = mid;
        else
            b_hi = mid;
    }
    out.alpha_star = 0.5 * (b_lo + b_hi);
    out.bracket_width = b_hi - b_lo;
    return out;
}

std::vector<SweepRecord> sweep(Margin kappa, double alpha_min, double alpha_max, int steps,
                               const SolverConfig& cfg, unsigned threads) {
    if (!(alpha_min > 0.0) || !(alpha_max > alpha_min))
        throw std::domain_error("sweep: need 0 < alpha_min < alpha_max");
    if (steps < 2) throw std::domain_error("sweep: steps must be >= 2");
    cfg.validate();

    std::vector<SweepRecord> records(steps);
    const auto run_one = [&](int i) {
        SweepRecord& rec = records[i];
        rec.alpha = alpha_min + (alpha_max - alpha_min) * i / (steps - 1.0);
        try {
            const std::optional<SaddlePoint> s = solve_saddle(rec.alpha, kappa, cfg);
            if (s) {
                rec.solved = true;
                rec.q = s->q;
                rec.r = s->r;
                rec.rs_value = s->rs_value;
                rec.residual_q = s->residual_q;
                rec.residual_r = s->residual_r;
            } else {
                rec.solved = false;
                rec.q = rec.r = rec.rs_value = rec.residual_q = rec.residual_r =
                    std::numeric_limits<double>::quiet_NaN();
            }
        } catch (const std::exception& e) {
            rec.solved = false;
            rec.q = rec.r = rec.rs_value = rec.residual_q = rec.residual_r =
                std::numeric_limits<double>::quiet_NaN();
            rec.error = e.what();
        }
    };

    unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(steps));
    if (n_threads <= 1) {
        for (int i = 0; i < steps; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < steps; i = next.fetch_add(1)) run_one(i);
            });
        }
        for (std::thread& t : pool) t.join();
    }
    return records;
}

}  // namespace rscap
